"""Rearranging a 1-irreducible C_1-presentation into a single cyclic chain.

The relation graph of such a presentation is connected. With as many
relations as x-generators it has exactly one cycle; a relation between a
cycle vertex c and an outside vertex y = c^a is rerouted so that the cycle
runs c -> y -> next, which keeps the group and grows the cycle by one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import networkx as nx

from core_words import Generator, Word, WordContext, substitute
from presentations import ConjugationRelation, classify_cm, relation_graph

from realization.chains import CyclicPresentation, RealizationError, as_cyclic

if TYPE_CHECKING:
    from collections.abc import Sequence

    from presentations import CmReport, Presentation

logger = logging.getLogger(__name__)


@dataclass
class Chain:
    """Vertices in chain order and the conjugator leading out of each one.

    A closed chain has one link per vertex, an open one a link less.
    """

    vertices: list[Generator]
    links: list[Word]
    closed: bool = field(default=True)

    def attach(self, position: int, vertex: Generator, conjugator: Word) -> None:
        """Insert vertex = vertices[position]^conjugator right after position."""
        if not self.closed and position == len(self.vertices) - 1:
            self.vertices.append(vertex)
            self.links.append(conjugator)
            return
        old = self.links[position]
        self.vertices.insert(position + 1, vertex)
        self.links[position] = conjugator
        self.links.insert(position + 1, conjugator.inverse() * old)

    def grow(self, relations: Sequence[ConjugationRelation]) -> None:
        """Attach every vertex reached by the relations, rerouting as needed."""
        pending = list(relations)
        while pending:
            for index, relation in enumerate(pending):
                inside = set(self.vertices)
                if (relation.source in inside) == (relation.target in inside):
                    continue
                if relation.source in inside:
                    anchor, vertex, conjugator = (
                        relation.source,
                        relation.target,
                        relation.conjugator,
                    )
                else:
                    anchor, vertex, conjugator = (
                        relation.target,
                        relation.source,
                        relation.conjugator.inverse(),
                    )
                self.attach(self.vertices.index(anchor), vertex, conjugator)
                logger.debug("Rerouted %s through %s", relation, vertex)
                del pending[index]
                break
            else:
                stuck = ", ".join(map(str, pending))
                msg = f"Relations {stuck} do not extend the chain"
                raise RealizationError(msg)

    def rotate_to(self, vertex: Generator) -> None:
        """Make vertex the first one of a closed chain."""
        k = self.vertices.index(vertex)
        self.vertices = self.vertices[k:] + self.vertices[:k]
        self.links = self.links[k:] + self.links[:k]

    def renumbered(self, source: WordContext) -> CyclicPresentation:
        """Renumber the vertices x1..xn in chain order."""
        ctx = WordContext(len(self.vertices), 1)
        renumber = {
            vertex: Word.of(ctx, ctx.x(i)) for i, vertex in enumerate(self.vertices, 1)
        }
        renumber[source.v(1)] = Word.of(ctx, ctx.v(1))
        origin = {
            ctx.x(i): Word.of(source, vertex)
            for i, vertex in enumerate(self.vertices, 1)
        }
        origin[ctx.v(1)] = Word.of(source, source.v(1))
        conjugators = tuple(substitute(link, renumber, ctx) for link in self.links)
        return CyclicPresentation(ctx, conjugators, origin)


def check_c1(p: Presentation, deficiencies: frozenset[int]) -> CmReport:
    """Raise unless p is a 1-irreducible C_1-presentation of an allowed deficiency."""
    report = classify_cm(p)
    if not report.is_cm:
        msg = "Every relator must have the shape target^-1 * source^w"
        raise RealizationError(msg)
    if report.m != 1 or not report.is_m_irreducible:
        msg = (
            f"Expected one v-generator and a connected relation graph, got "
            f"{report.m} v-generators and {report.components} components"
        )
        raise RealizationError(msg)
    if report.deficiency not in deficiencies:
        msg = f"Deficiency {report.deficiency} is not one of {sorted(deficiencies)}"
        raise RealizationError(msg)
    return report


def _cycle(
    graph: nx.MultiGraph[Generator],
    relations: Sequence[ConjugationRelation],
    p: Presentation,
) -> tuple[Chain, set[int]]:
    """Strip leaves until the unique cycle remains, then walk it."""
    core = nx.MultiGraph(graph)
    leaves = [node for node, degree in core.degree() if degree <= 1]
    while leaves:
        core.remove_nodes_from(leaves)
        leaves = [node for node, degree in core.degree() if degree <= 1]
    if core.number_of_nodes() == 0:
        msg = "Relation graph has no cycle"
        raise RealizationError(msg)
    start = min(core.nodes, key=p.context.position)
    chain = Chain([start], [])
    used: set[int] = set()
    current = start
    while True:
        key = min(k for _, _, k in core.edges(current, keys=True) if k not in used)
        used.add(key)
        relation = relations[key]
        if relation.source == current:
            following, conjugator = relation.target, relation.conjugator
        else:
            following, conjugator = relation.source, relation.conjugator.inverse()
        chain.links.append(conjugator)
        if following == start:
            break
        chain.vertices.append(following)
        current = following
    if len(used) != core.number_of_edges():
        msg = "Relation graph has more than one cycle"
        raise RealizationError(msg)
    return chain, used


def to_cyclic(p: Presentation) -> CyclicPresentation:
    """Turn a 1-irreducible C_1-presentation of deficiency 1 or 2 into a cyclic chain.

    A presentation that already reads as a chain x_{j+1} = x_j^{w_j} in its own
    generator order is returned as it is. Deficiency 2 is first padded by
    repeating the last relation.
    """
    report = check_c1(p, frozenset({1, 2}))
    existing = as_cyclic(p)
    if existing is not None:
        return existing
    relations = [relation for relation in report.relations if relation is not None]
    if report.deficiency == 2:  # noqa: PLR2004
        x1 = p.context.x(1)
        padding = ConjugationRelation(x1, x1, Word.identity(p.context))
        relations.append(relations[-1] if relations else padding)
    graph = relation_graph(p, tuple(relations))
    chain, used = _cycle(graph, relations, p)
    logger.debug(
        "Cycle of length %d on %d vertices", len(chain.vertices), p.context.x_count
    )
    chain.grow([relation for key, relation in enumerate(relations) if key not in used])
    chain.rotate_to(p.context.x(1))
    return chain.renumbered(p.context)
