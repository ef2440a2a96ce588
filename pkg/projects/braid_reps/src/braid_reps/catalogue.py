"""Local rules for the named representation families.

Every rule takes the word context, a letter index i and the family parameter
and returns the images of the generators the letter moves. Generators not
listed are fixed.
"""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass
from typing import Final

from core_words import Generator, Word, WordContext, conjugate

type LocalImages = dict[Generator, Word]
type LocalRule = Callable[[WordContext, int, int], LocalImages]
type ConjugatorWords = Callable[[WordContext, int], list[Word]]

NAME_PATTERN: Final = re.compile(r"^([A-Za-z0-9]+~?)(?:\[(-?\d+)\])?$")


class CatalogueError(ValueError):
    """Unknown family, bad parameter or uncertified inverse."""


def word(ctx: WordContext, *parts: Generator | Word) -> Word:
    """Multiply generators and words left to right."""
    result = Word.identity(ctx)
    for part in parts:
        result *= part if isinstance(part, Word) else Word.of(ctx, part)
    return result


def conj(ctx: WordContext, base: Generator | Word, by: Generator | Word) -> Word:
    """Return base^by = by^-1 base by."""
    return conjugate(word(ctx, base), word(ctx, by))


def inv(ctx: WordContext, part: Generator | Word) -> Word:
    """Return the inverse of a generator or word."""
    return word(ctx, part).inverse()


def _swap(ctx: WordContext, a: Generator, b: Generator) -> LocalImages:
    return {a: Word.of(ctx, b), b: Word.of(ctx, a)}


def _v_swap(ctx: WordContext, i: int) -> LocalImages:
    return _swap(ctx, ctx.v(i), ctx.v(i + 1))


# Artin action on the x-generators only.


def _artin_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    return {y: word(ctx, y, z, inv(ctx, y)), z: Word.of(ctx, y)}


def _artin_sigma_inverse(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    return {y: Word.of(ctx, z), z: conj(ctx, y, z)}


def _swap_rho(ctx: WordContext, i: int, _: int) -> LocalImages:
    """Plain transposition of x_i and x_{i+1}."""
    return _swap(ctx, ctx.x(i), ctx.x(i + 1))


# phiM and the w-family share the same rho.


def _phim_sigma(ctx: WordContext, i: int, r: int) -> LocalImages:
    return _artin_sigma(ctx, i, r) | _v_swap(ctx, i)


def _phim_sigma_inverse(ctx: WordContext, i: int, r: int) -> LocalImages:
    return _artin_sigma_inverse(ctx, i, r) | _v_swap(ctx, i)


def _phim_rho(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, vi, vj = ctx.x(i), ctx.x(i + 1), ctx.v(i), ctx.v(i + 1)
    return {
        y: conj(ctx, z, inv(ctx, vi)),
        z: conj(ctx, y, vj),
    } | _v_swap(ctx, i)


def _phis_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, vi, vj = ctx.x(i), ctx.x(i + 1), ctx.v(i), ctx.v(i + 1)
    return {
        y: word(ctx, y, conj(ctx, z, vi), inv(ctx, y)),
        z: conj(ctx, y, inv(ctx, vj)),
    } | _v_swap(ctx, i)


def _phis_sigma_inverse(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, vi, vj = ctx.x(i), ctx.x(i + 1), ctx.v(i), ctx.v(i + 1)
    shift = word(ctx, vi, inv(ctx, vj))
    return {
        y: conj(ctx, z, vi),
        z: word(
            ctx,
            conj(ctx, inv(ctx, z), shift),
            conj(ctx, y, inv(ctx, vj)),
            conj(ctx, z, shift),
        ),
    } | _v_swap(ctx, i)


def _phis_rho(ctx: WordContext, i: int, r: int) -> LocalImages:
    return _swap_rho(ctx, i, r) | _v_swap(ctx, i)


# phiA: one commuting generator v = v1.


def _phia_rho(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, v = ctx.x(i), ctx.x(i + 1), ctx.v(1)
    return {y: conj(ctx, z, inv(ctx, v)), z: conj(ctx, y, v)}


def _phia_tilde_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, v = ctx.x(i), ctx.x(i + 1), ctx.v(1)
    return {
        y: word(ctx, y, conj(ctx, z, v), inv(ctx, y)),
        z: conj(ctx, y, inv(ctx, v)),
    }


# phiBD: u = v1, v = v2.


def _phibd_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, u = ctx.x(i), ctx.x(i + 1), ctx.v(1)
    return {
        y: word(ctx, y, z, conj(ctx, inv(ctx, y), u)),
        z: conj(ctx, y, u),
    }


def _phibd_sigma_inverse(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, u = ctx.x(i), ctx.x(i + 1), ctx.v(1)
    return {
        y: conj(ctx, z, inv(ctx, u)),
        z: word(ctx, conj(ctx, inv(ctx, z), inv(ctx, u)), y, z),
    }


def _phibd_rho(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, v = ctx.x(i), ctx.x(i + 1), ctx.v(2)
    return {y: conj(ctx, z, inv(ctx, v)), z: conj(ctx, y, v)}


def _phibd_tilde_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, u, v = ctx.x(i), ctx.x(i + 1), ctx.v(1), ctx.v(2)
    return {
        y: word(ctx, y, conj(ctx, z, v), conj(ctx, inv(ctx, y), u)),
        z: conj(ctx, y, word(ctx, u, inv(ctx, v))),
    }


# phiSW: u_k = v_k for k <= n, v = v_{n+1}.


def _phisw_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    ui, uj, v = ctx.v(i), ctx.v(i + 1), ctx.v(ctx.x_count + 1)
    return {
        y: word(ctx, y, conj(ctx, z, ui), conj(ctx, inv(ctx, y), word(ctx, v, uj))),
        z: conj(ctx, y, v),
    } | _v_swap(ctx, i)


def _phisw_sigma_inverse(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    ui, uj, v = ctx.v(i), ctx.v(i + 1), ctx.v(ctx.x_count + 1)
    return {
        y: conj(ctx, z, inv(ctx, v)),
        z: word(
            ctx, uj, v, inv(ctx, z), inv(ctx, v), y, inv(ctx, ui), z, ui, inv(ctx, uj)
        ),
    } | _v_swap(ctx, i)


# w-family on F_n * Z^n.


def _w1_sigma(ctx: WordContext, i: int, r: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    yr = Word.of(ctx, y, r)
    return {y: word(ctx, yr, z, yr.inverse()), z: Word.of(ctx, y)} | _v_swap(ctx, i)


def _w1_sigma_inverse(ctx: WordContext, i: int, r: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    return {y: Word.of(ctx, z), z: conj(ctx, y, Word.of(ctx, z, r))} | _v_swap(ctx, i)


def _w2_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    return {y: word(ctx, y, inv(ctx, z), y), z: Word.of(ctx, y)} | _v_swap(ctx, i)


def _w2_sigma_inverse(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    return {y: Word.of(ctx, z), z: word(ctx, z, inv(ctx, y), z)} | _v_swap(ctx, i)


def _w3_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    return {
        y: word(ctx, Word.of(ctx, y, 2), z),
        z: conj(ctx, inv(ctx, y), z),
    } | _v_swap(ctx, i)


def _w3_sigma_inverse(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z = ctx.x(i), ctx.x(i + 1)
    return {
        y: word(ctx, y, inv(ctx, z), inv(ctx, y)),
        z: word(ctx, y, Word.of(ctx, z, 2)),
    } | _v_swap(ctx, i)


def _w1_tilde_sigma(ctx: WordContext, i: int, r: int) -> LocalImages:
    y, z, vi, vj = ctx.x(i), ctx.x(i + 1), ctx.v(i), ctx.v(i + 1)
    yr = Word.of(ctx, y, r)
    return {
        y: word(ctx, yr, conj(ctx, z, vi), yr.inverse()),
        z: conj(ctx, y, inv(ctx, vj)),
    } | _v_swap(ctx, i)


def _w2_tilde_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, vi, vj = ctx.x(i), ctx.x(i + 1), ctx.v(i), ctx.v(i + 1)
    return {
        y: word(ctx, y, conj(ctx, inv(ctx, z), vi), y),
        z: conj(ctx, y, inv(ctx, vj)),
    } | _v_swap(ctx, i)


def _w3_tilde_sigma(ctx: WordContext, i: int, _: int) -> LocalImages:
    y, z, vi, vj = ctx.x(i), ctx.x(i + 1), ctx.v(i), ctx.v(i + 1)
    shift = word(ctx, vi, inv(ctx, vj))
    return {
        y: word(ctx, Word.of(ctx, y, 2), conj(ctx, z, vi)),
        z: word(
            ctx,
            conj(ctx, inv(ctx, z), shift),
            conj(ctx, inv(ctx, y), inv(ctx, vj)),
            conj(ctx, z, shift),
        ),
    } | _v_swap(ctx, i)


# Standard conjugators: phi(x_k) = x_k^{c_k}.


def v_chain(ctx: WordContext, n: int) -> list[Word]:
    """c_k = v_k v_{k+1} ... v_n."""
    return [word(ctx, *(ctx.v(j) for j in range(k, n + 1))) for k in range(1, n + 1)]


def v_power(index: int) -> ConjugatorWords:
    """c_k = v^{n-k} for the commuting generator v_index."""

    def build(ctx: WordContext, n: int) -> list[Word]:
        return [Word.of(ctx, ctx.v(index), n - k) for k in range(1, n + 1)]

    return build


@dataclass(frozen=True)
class Family:
    """One named family of representations VB_n -> Aut(F_n * Z^m)."""

    name: str
    v_count: Callable[[int], int]
    sigma: LocalRule
    rho: LocalRule
    sigma_inverse: LocalRule | None = None
    base: str | None = None
    parametrised: bool = False
    symmetric: bool = False


CATALOGUE: Final[dict[str, Family]] = {
    family.name: family
    for family in (
        Family("phiM", lambda n: n, _phim_sigma, _phim_rho, _phim_sigma_inverse),
        Family(
            "phiS",
            lambda n: n,
            _phis_sigma,
            _phis_rho,
            _phis_sigma_inverse,
            base="phiM",
            symmetric=True,
        ),
        Family(
            "phi0",
            lambda _: 0,
            _artin_sigma,
            _swap_rho,
            _artin_sigma_inverse,
            symmetric=True,
        ),
        Family("phiA", lambda _: 1, _artin_sigma, _phia_rho, _artin_sigma_inverse),
        Family(
            "phiA~",
            lambda _: 1,
            _phia_tilde_sigma,
            _swap_rho,
            base="phiA",
            symmetric=True,
        ),
        Family(
            "phiSW",
            lambda n: n + 1,
            _phisw_sigma,
            _phis_rho,
            _phisw_sigma_inverse,
            symmetric=True,
        ),
        Family("phiBD", lambda _: 2, _phibd_sigma, _phibd_rho, _phibd_sigma_inverse),
        Family(
            "phiBD~",
            lambda _: 2,
            _phibd_tilde_sigma,
            _swap_rho,
            base="phiBD",
            symmetric=True,
        ),
        Family(
            "w1",
            lambda n: n,
            _w1_sigma,
            _phim_rho,
            _w1_sigma_inverse,
            parametrised=True,
        ),
        Family(
            "w1~",
            lambda n: n,
            _w1_tilde_sigma,
            _phis_rho,
            base="w1",
            parametrised=True,
            symmetric=True,
        ),
        Family("w2", lambda n: n, _w2_sigma, _phim_rho, _w2_sigma_inverse),
        Family(
            "w2~", lambda n: n, _w2_tilde_sigma, _phis_rho, base="w2", symmetric=True
        ),
        Family("w3", lambda n: n, _w3_sigma, _phim_rho, _w3_sigma_inverse),
        Family(
            "w3~", lambda n: n, _w3_tilde_sigma, _phis_rho, base="w3", symmetric=True
        ),
    )
}

TILDE_OF: Final[dict[str, str]] = {
    family.base: name for name, family in CATALOGUE.items() if family.base is not None
}

CONJUGATORS: Final[dict[str, ConjugatorWords]] = {
    "phiM": v_chain,
    "phiA": v_power(1),
    "phiBD": v_power(2),
    "w1": v_chain,
    "w2": v_chain,
    "w3": v_chain,
}


def parse_representation_name(text: str) -> tuple[str, tuple[int, ...]]:
    """Split "w1~[2]" into ("w1~", (2,))."""
    match = NAME_PATTERN.match(text.strip())
    if match is None or match.group(1) not in CATALOGUE:
        msg = f"Unknown representation {text!r}; known: {', '.join(CATALOGUE)}"
        raise CatalogueError(msg)
    name, parameter = match.groups()
    return name, () if parameter is None else (int(parameter),)
