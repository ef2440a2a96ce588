"""Abelianization through the Smith normal form of the relation matrix."""

from __future__ import annotations

from math import gcd, lcm
from typing import TYPE_CHECKING, NamedTuple

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

if TYPE_CHECKING:
    from presentations.presentation import Presentation


class Abelianization(NamedTuple):
    """Z^free_rank plus the cyclic factors Z/d for d in torsion."""

    free_rank: int
    torsion: list[int]

    def __str__(self) -> str:
        """Render as free_rank=... torsion=[...]."""
        torsion = ", ".join(map(str, self.torsion))
        return f"free_rank={self.free_rank} torsion=[{torsion}]"


def relation_matrix(p: Presentation) -> list[list[int]]:
    """Return the exponent-sum matrix: one row per relator, one column per generator."""
    generators = p.generators()
    rows: list[list[int]] = []
    for relator in p.relators:
        sums = relator.exponent_sums()
        rows.append([sums.get(gen, 0) for gen in generators])
    return rows


def invariant_factors_of(rows: list[list[int]], columns: int) -> list[int]:
    """Return the nonzero invariant factors of an integer matrix, in order."""
    if not rows or not columns:
        return []
    factors = [
        abs(int(factor))
        for factor in invariant_factors(Matrix(rows), domain=ZZ)
        if factor != 0
    ]
    # diag(a, b) is equivalent to diag(gcd, lcm)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            factors[i], factors[j] = gcd(a, b), lcm(a, b)
    return factors


def abelianization(p: Presentation) -> Abelianization:
    """Return the free rank and torsion coefficients of the abelianized group.

    Implicit v-commutators have zero exponent sums and add no rows.
    """
    columns = len(p.generators())
    factors = invariant_factors_of(relation_matrix(p), columns)
    return Abelianization(
        free_rank=columns - len(factors),
        torsion=[factor for factor in factors if factor > 1],
    )
