"""Conjugation-shaped relators, the relation graph and C_m classification."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from core_words import Generator, Kind, Syllable, Word, normalize

from presentations.presentation import Presentation, conjugation_relator


@dataclass(frozen=True)
class ConjugationRelation:
    """The relation target = source^conjugator between two x-generators."""

    source: Generator
    target: Generator
    conjugator: Word

    def relator(self) -> Word:
        """Return target^-1 * source^conjugator."""
        ctx = self.conjugator.context
        return conjugation_relator(
            Word.of(ctx, self.target), Word.of(ctx, self.source), self.conjugator
        )

    def __str__(self) -> str:
        """Render as target = source^(conjugator)."""
        return f"{self.target} = {self.source}^({self.conjugator})"


def _splits(letters: tuple[Syllable, ...], relator: Word) -> list[ConjugationRelation]:
    """Read letters as target^-1 * c^-1 * source * c with the target first."""
    found: list[ConjugationRelation] = []
    target, exp = letters[0]
    if target.kind is not Kind.X or exp != -1:
        return found
    rest = letters[1:]
    for p, (source, power) in enumerate(rest):
        if source.kind is not Kind.X or power != 1:
            continue
        if normalize(rest[:p] + rest[p + 1 :], relator.context).syllables:
            continue
        conjugator = normalize(rest[p + 1 :], relator.context)
        found.append(ConjugationRelation(source, target, conjugator))
    return found


def as_conjugation(relator: Word) -> ConjugationRelation | None:
    """Recognize a relator conjugate to target^-1 * source^w, or its inverse.

    Among all readings, the one with the relator itself unrotated and the
    shortest conjugator is returned.
    """
    candidates: list[tuple[int, int, int, ConjugationRelation]] = []
    for inverted, word in enumerate((relator, relator.inverse())):
        letters = word.letters()
        for shift in range(len(letters)):
            rotated = letters[shift:] + letters[:shift]
            candidates.extend(
                (inverted, shift, len(found.conjugator), found)
                for found in _splits(rotated, relator)
            )
    if not candidates:
        return None
    return min(candidates, key=lambda item: item[:3])[3]


@dataclass(frozen=True)
class CmReport:
    """Outcome of classify_cm."""

    is_cm: bool
    m: int
    graph: nx.MultiGraph[Generator]
    components: int
    is_m_irreducible: bool
    deficiency: int
    relations: tuple[ConjugationRelation | None, ...]


def relation_graph(
    p: Presentation,
    relations: tuple[ConjugationRelation | None, ...],
) -> nx.MultiGraph[Generator]:
    """Return the graph on x-generators with one edge per conjugation relator."""
    graph: nx.MultiGraph[Generator] = nx.MultiGraph()
    graph.add_nodes_from(p.x_generators())
    for index, relation in enumerate(relations):
        if relation is not None:
            graph.add_edge(
                relation.source,
                relation.target,
                key=index,
                conjugator=relation.conjugator,
            )
    return graph


def classify_cm(p: Presentation) -> CmReport:
    """Decide whether p is a C_m-presentation and compute its relation graph."""
    relations = tuple(as_conjugation(relator) for relator in p.relators)
    graph = relation_graph(p, relations)
    is_cm = all(relation is not None for relation in relations)
    components = nx.number_connected_components(graph)
    m = len(p.v_generators())
    return CmReport(
        is_cm=is_cm,
        m=m,
        graph=graph,
        components=components,
        is_m_irreducible=is_cm and components == m,
        deficiency=p.deficiency,
        relations=relations,
    )
