"""Exhaustive homomorphism search from a presentation into a finite group.

Generators are assigned in a fixed plan. A generator occurring exactly once
in a relator whose other generators are already assigned is solved from that
relator instead of branched on. The first branched generator only ranges over
conjugacy class representatives, weighted by class size, since conjugating a
homomorphism gives another one.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import chain, product
from typing import TYPE_CHECKING, Final

from presentations.finite_groups import FiniteGroup

if TYPE_CHECKING:
    from collections.abc import Iterator

    from core_words import Generator, Word

    from presentations.presentation import Presentation

logger = logging.getLogger(__name__)

SEARCH_LIMIT: Final = 10_000_000

type Compiled = tuple[tuple[int, int], ...]
type Assignment = list[int]


class SearchLimitError(ValueError):
    """The search plan is larger than the configured limit."""


@dataclass(frozen=True)
class Step:
    """Assign one generator, by branching or by solving a relator."""

    generator: int
    solver: int | None
    checks: tuple[int, ...]


@dataclass(frozen=True)
class SearchPlan:
    """Order of assignment plus the relators checked after each step."""

    generators: tuple[Generator, ...]
    relators: tuple[Compiled, ...]
    steps: tuple[Step, ...]
    unconstrained: tuple[int, ...]

    def size(
        self, group: FiniteGroup, *, by_class: bool = True, free: bool = True
    ) -> int:
        """Return the number of leaves of the search tree.

        Without free, unconstrained generators are left out; counting only
        multiplies by their choices.
        """
        branches = [step for step in self.steps if step.solver is None]
        searched = len(branches) + (len(self.unconstrained) if free else 0)
        size = group.order ** searched
        if by_class and branches:
            size = size // group.order * len(group.conjugacy_classes)
        return size


def compile_relators(p: Presentation) -> tuple[Compiled, ...]:
    """Index relator syllables by generator position; add the v-commutators."""
    position = p.context.position
    compiled = [
        tuple((position(gen), exp) for gen, exp in relator.syllables)
        for relator in p.relators
        if relator.syllables
    ]
    for a, b in p.v_commutators():
        i, j = position(a), position(b)
        compiled.append(((i, -1), (j, -1), (i, 1), (j, 1)))
    return tuple(compiled)


def _solvable(relator: Compiled, generator: int) -> bool:
    return sum(abs(exp) for gen, exp in relator if gen == generator) == 1


def _branch_priority(
    relators: tuple[Compiled, ...],
    gens_of: list[frozenset[int]],
    gen: int,
) -> tuple[int, int]:
    """Prefer generators that no relator can solve for, then the most used."""
    using = [r for r, gens in enumerate(gens_of) if gen in gens]
    return sum(not _solvable(relators[r], gen) for r in using), len(using)


def plan_search(p: Presentation) -> SearchPlan:
    """Choose the assignment order for p."""
    relators = compile_relators(p)
    involved = {gen for relator in relators for gen, _ in relator}
    gens_of = [frozenset(gen for gen, _ in relator) for relator in relators]
    assigned: set[int] = set()
    checked: set[int] = set()
    steps: list[Step] = []
    while involved - assigned:
        step_gen, solver = None, None
        for r, gens in enumerate(gens_of):
            open_gens = gens - assigned
            if r not in checked and len(open_gens) == 1:
                (candidate,) = open_gens
                if _solvable(relators[r], candidate):
                    step_gen, solver = candidate, r
                    break
        if step_gen is None:
            step_gen = max(
                sorted(involved - assigned),
                key=lambda gen: _branch_priority(relators, gens_of, gen),
            )
        assigned.add(step_gen)
        checks = tuple(
            r
            for r, gens in enumerate(gens_of)
            if r not in checked and gens <= assigned and r != solver
        )
        checked.update(checks)
        if solver is not None:
            checked.add(solver)
        steps.append(Step(step_gen, solver, checks))
    unconstrained = tuple(
        i for i in range(len(p.generators())) if i not in involved
    )
    return SearchPlan(p.generators(), relators, tuple(steps), unconstrained)


class _Search:
    """Depth-first enumeration over a plan in one group."""

    def __init__(self, plan: SearchPlan, group: FiniteGroup) -> None:
        self.plan = plan
        self.group = group
        self.values: Assignment = [group.identity] * len(plan.generators)

    def evaluate(
        self, relator: Compiled, start: int = 0, stop: int | None = None
    ) -> int:
        group, values = self.group, self.values
        result = group.identity
        for gen, exp in relator[start:stop]:
            result = group.mul(result, group.power(values[gen], exp))
        return result

    def solve(self, step: Step) -> int:
        """Return the value of step.generator that makes the solver relator trivial."""
        relator = self.plan.relators[step.solver or 0]
        index = next(i for i, (gen, _) in enumerate(relator) if gen == step.generator)
        before = self.evaluate(relator, 0, index)
        after = self.evaluate(relator, index + 1)
        group = self.group
        if relator[index][1] == 1:
            return group.mul(group.inv(before), group.inv(after))
        return group.mul(after, before)

    def holds(self, step: Step) -> bool:
        identity = self.group.identity
        relators = self.plan.relators
        return all(self.evaluate(relators[r]) == identity for r in step.checks)

    def count(self, depth: int) -> int:
        if depth == len(self.plan.steps):
            return 1
        step = self.plan.steps[depth]
        if step.solver is not None:
            self.values[step.generator] = self.solve(step)
            return self.count(depth + 1) if self.holds(step) else 0
        total = 0
        for value in range(self.group.order):
            self.values[step.generator] = value
            if self.holds(step):
                total += self.count(depth + 1)
        return total

    def fix(self, depth: int, value: int) -> bool:
        """Run the solved steps before depth, then set the branch at depth to value."""
        for step in self.plan.steps[:depth]:
            self.values[step.generator] = self.solve(step)
            if not self.holds(step):
                return False
        step = self.plan.steps[depth]
        self.values[step.generator] = value
        return self.holds(step)

    def walk_with(self, depth: int, value: int) -> Iterator[tuple[int, ...]]:
        if self.fix(depth, value):
            yield from self.walk(depth + 1)

    def walk(self, depth: int) -> Iterator[tuple[int, ...]]:
        if depth == len(self.plan.steps):
            yield tuple(self.values)
            return
        step = self.plan.steps[depth]
        if step.solver is not None:
            self.values[step.generator] = self.solve(step)
            if self.holds(step):
                yield from self.walk(depth + 1)
            return
        for value in range(self.group.order):
            self.values[step.generator] = value
            if self.holds(step):
                yield from self.walk(depth + 1)


def _first_branch(plan: SearchPlan) -> int | None:
    return next((d for d, step in enumerate(plan.steps) if step.solver is None), None)


def _count_with(plan: SearchPlan, group: FiniteGroup, depth: int, value: int) -> int:
    """Count completions with the first branched generator fixed to value."""
    search = _Search(plan, group)
    return search.count(depth + 1) if search.fix(depth, value) else 0


def hom_count(
    p: Presentation,
    group: FiniteGroup,
    *,
    limit: int = SEARCH_LIMIT,
    jobs: int = 1,
) -> int:
    """Return the number of homomorphisms from the group of p into group."""
    plan = plan_search(p)
    size = plan.size(group, free=False)
    if size > limit:
        msg = f"Search space of {size} assignments exceeds the limit of {limit}"
        raise SearchLimitError(msg)
    logger.debug(
        "Counting homomorphisms into %s: %d steps, search size %d",
        group.name,
        len(plan.steps),
        size,
    )
    free_factor = group.order ** len(plan.unconstrained)
    depth = _first_branch(plan)
    if depth is None:
        return free_factor * _Search(plan, group).count(0)
    classes = group.conjugacy_classes
    representatives = [members[0] for members in classes]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(
                pool.map(
                    _count_with,
                    [plan] * len(classes),
                    [group] * len(classes),
                    [depth] * len(classes),
                    representatives,
                )
            )
    else:
        counts = [_count_with(plan, group, depth, rep) for rep in representatives]
    total = sum(
        count * len(members) for count, members in zip(counts, classes, strict=True)
    )
    return free_factor * total


def iter_homomorphisms(
    p: Presentation,
    group: FiniteGroup,
    *,
    limit: int = SEARCH_LIMIT,
    up_to_conjugacy: bool = False,
) -> Iterator[dict[Generator, int]]:
    """Yield every homomorphism as the image of each generator.

    With up_to_conjugacy, the first freely chosen generator only takes
    conjugacy class representatives, so every homomorphism is conjugate to
    at least one yielded assignment.
    """
    plan = plan_search(p)
    size = plan.size(group, by_class=up_to_conjugacy)
    if size > limit:
        msg = f"Search space of {size} assignments exceeds the limit of {limit}"
        raise SearchLimitError(msg)
    search = _Search(plan, group)
    representatives = [members[0] for members in group.conjugacy_classes]
    depth = _first_branch(plan)
    if up_to_conjugacy and depth is not None:
        leaves = chain.from_iterable(
            search.walk_with(depth, rep) for rep in representatives
        )
    else:
        leaves = search.walk(0)
    choices: list[range | list[int]] = [range(group.order)] * len(plan.unconstrained)
    if up_to_conjugacy and depth is None and choices:
        choices[0] = representatives
    for values in leaves:
        for free in product(*choices):
            images = list(values)
            for gen, value in zip(plan.unconstrained, free, strict=True):
                images[gen] = value
            yield dict(zip(plan.generators, images, strict=True))


def evaluate_word(word: Word, images: dict[Generator, int], group: FiniteGroup) -> int:
    """Return the image of a word under a generator assignment."""
    result = group.identity
    for gen, exp in word.syllables:
        result = group.mul(result, group.power(images[gen], exp))
    return result
