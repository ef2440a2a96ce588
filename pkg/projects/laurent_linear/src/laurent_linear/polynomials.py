"""Sparse multivariate Laurent polynomials with integer coefficients."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Iterable, Mapping

type Exponents = tuple[int, ...]


class VariableMismatchError(ValueError):
    """Operands are declared over different variable lists."""


@dataclass(frozen=True, eq=True)
class LaurentPoly:
    """A Laurent polynomial over Z stored as exponent vector -> coefficient."""

    variables: tuple[str, ...]
    terms: dict[Exponents, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Drop zero coefficients and check exponent vector lengths."""
        for exps in self.terms:
            if len(exps) != len(self.variables):
                msg = (
                    f"Exponent vector {exps} does not match "
                    f"variables {self.variables}"
                )
                raise VariableMismatchError(msg)
        object.__setattr__(
            self, "terms", {exps: c for exps, c in self.terms.items() if c}
        )

    @classmethod
    def zero(cls, variables: tuple[str, ...]) -> LaurentPoly:
        """Return 0."""
        return cls(variables)

    @classmethod
    def constant(cls, variables: tuple[str, ...], value: int) -> LaurentPoly:
        """Return an integer constant."""
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def one(cls, variables: tuple[str, ...]) -> LaurentPoly:
        """Return 1."""
        return cls.constant(variables, 1)

    @classmethod
    def monomial(
        cls,
        variables: tuple[str, ...],
        powers: Mapping[str, int],
        coefficient: int = 1,
    ) -> LaurentPoly:
        """Return coefficient * prod(var^power)."""
        unknown = set(powers) - set(variables)
        if unknown:
            msg = f"Unknown variables {sorted(unknown)} for {variables}"
            raise VariableMismatchError(msg)
        return cls(
            variables, {tuple(powers.get(v, 0) for v in variables): coefficient}
        )

    def _check(self, other: LaurentPoly) -> None:
        if other.variables != self.variables:
            msg = f"Variable lists differ: {self.variables} vs {other.variables}"
            raise VariableMismatchError(msg)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        """Add two polynomials."""
        self._check(other)
        total: defaultdict[Exponents, int] = defaultdict(int, self.terms)
        for exps, c in other.terms.items():
            total[exps] += c
        return LaurentPoly(self.variables, dict(total))

    def __neg__(self) -> LaurentPoly:
        """Negate."""
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        """Subtract."""
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        """Multiply two polynomials."""
        self._check(other)
        product: defaultdict[Exponents, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                product[tuple(a + b for a, b in zip(e1, e2, strict=True))] += c1 * c2
        return LaurentPoly(self.variables, dict(product))

    def __pow__(self, exp: int) -> LaurentPoly:
        """Raise to a power; negative powers only for monomials."""
        base = self if exp >= 0 else self.unit_inverse()
        result = LaurentPoly.one(self.variables)
        for _ in range(abs(exp)):
            result *= base
        return result

    def is_zero(self) -> bool:
        """Check for the zero polynomial."""
        return not self.terms

    def is_unit(self) -> bool:
        """Check for a monomial with coefficient +-1."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def unit_inverse(self) -> LaurentPoly:
        """Invert a unit +-monomial."""
        if not self.is_unit():
            msg = f"{self} is not a unit of the Laurent ring"
            raise ValueError(msg)
        ((exps, c),) = self.terms.items()
        return LaurentPoly(self.variables, {tuple(-e for e in exps): c})

    def specialize(self, names: Iterable[str]) -> LaurentPoly:
        """Set the named variables to 1 and drop them from the variable list."""
        dropped = set(names)
        keep = [i for i, v in enumerate(self.variables) if v not in dropped]
        result: defaultdict[Exponents, int] = defaultdict(int)
        for exps, c in self.terms.items():
            result[tuple(exps[i] for i in keep)] += c
        return LaurentPoly(tuple(self.variables[i] for i in keep), dict(result))

    def __str__(self) -> str:
        """Render terms in ascending exponent order, e.g. ``t^-1 - 1``."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self.terms):
            coefficient = self.terms[exps]
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps, strict=True)
                if e
            ]
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            sign = "-" if coefficient < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)
