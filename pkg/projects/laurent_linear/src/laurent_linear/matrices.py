"""Square matrices over a Laurent polynomial ring."""

from __future__ import annotations

from dataclasses import dataclass

from laurent_linear.polynomials import LaurentPoly, VariableMismatchError

type Block = tuple[tuple[LaurentPoly, LaurentPoly], tuple[LaurentPoly, LaurentPoly]]


@dataclass(frozen=True)
class LaurentMatrix:
    """An n x n matrix of Laurent polynomials over a shared variable list."""

    variables: tuple[str, ...]
    rows: tuple[tuple[LaurentPoly, ...], ...]

    def __post_init__(self) -> None:
        """Check squareness and variable lists."""
        size = len(self.rows)
        for row in self.rows:
            if len(row) != size:
                msg = f"Matrix is not square: row of length {len(row)} in size {size}"
                raise ValueError(msg)
            for entry in row:
                if entry.variables != self.variables:
                    msg = f"Entry over {entry.variables}, matrix over {self.variables}"
                    raise VariableMismatchError(msg)

    @property
    def size(self) -> int:
        """Return n."""
        return len(self.rows)

    @classmethod
    def identity(cls, size: int, variables: tuple[str, ...]) -> LaurentMatrix:
        """Return the identity matrix."""
        zero, one = LaurentPoly.zero(variables), LaurentPoly.one(variables)
        return cls(
            variables,
            tuple(
                tuple(one if i == j else zero for j in range(size)) for i in range(size)
            ),
        )

    @classmethod
    def diagonal(cls, entries: list[LaurentPoly]) -> LaurentMatrix:
        """Return the diagonal matrix with the given entries."""
        variables = entries[0].variables
        zero = LaurentPoly.zero(variables)
        return cls(
            variables,
            tuple(
                tuple(entry if i == j else zero for j in range(len(entries)))
                for i, entry in enumerate(entries)
            ),
        )

    @classmethod
    def with_block(
        cls,
        size: int,
        variables: tuple[str, ...],
        position: int,
        block: Block,
    ) -> LaurentMatrix:
        """Place block on the diagonal at a 1-based position, identity elsewhere."""
        rows = [list(row) for row in cls.identity(size, variables).rows]
        i = position - 1
        for r in range(2):
            for c in range(2):
                rows[i + r][i + c] = block[r][c]
        return cls(variables, tuple(tuple(row) for row in rows))

    def entry(self, i: int, j: int) -> LaurentPoly:
        """Return the 0-based (i, j) entry."""
        return self.rows[i][j]

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        """Multiply matrices of equal size and variable list."""
        if other.size != self.size:
            msg = (
                f"Cannot multiply {self.size}x{self.size} "
                f"by {other.size}x{other.size}"
            )
            raise ValueError(msg)
        if other.variables != self.variables:
            msg = f"Variable lists differ: {self.variables} vs {other.variables}"
            raise VariableMismatchError(msg)
        zero = LaurentPoly.zero(self.variables)
        columns = list(zip(*other.rows, strict=True))
        rows: list[tuple[LaurentPoly, ...]] = []
        for row in self.rows:
            out: list[LaurentPoly] = []
            for column in columns:
                total = zero
                for a, b in zip(row, column, strict=True):
                    if a.terms and b.terms:
                        total += a * b
                out.append(total)
            rows.append(tuple(out))
        return LaurentMatrix(self.variables, tuple(rows))

    def is_identity(self) -> bool:
        """Check equality with the identity."""
        return self == LaurentMatrix.identity(self.size, self.variables)

    def det(self) -> LaurentPoly:
        """Exact determinant by Laplace expansion along the first row."""
        return _det(self.rows, self.variables)

    def specialize(self, names: list[str]) -> LaurentMatrix:
        """Set the named variables to 1 in every entry."""
        rows = tuple(
            tuple(entry.specialize(names) for entry in row) for row in self.rows
        )
        variables = tuple(v for v in self.variables if v not in names)
        return LaurentMatrix(variables, rows)

    def __str__(self) -> str:
        """One bracketed row per line."""
        return "\n".join(
            "[" + ", ".join(str(entry) for entry in row) + "]" for row in self.rows
        )


def _det(
    rows: tuple[tuple[LaurentPoly, ...], ...], variables: tuple[str, ...]
) -> LaurentPoly:
    if not rows:
        return LaurentPoly.one(variables)
    if len(rows) == 1:
        return rows[0][0]
    total = LaurentPoly.zero(variables)
    for j, pivot in enumerate(rows[0]):
        if pivot.is_zero():
            continue
        minor = tuple(row[:j] + row[j + 1 :] for row in rows[1:])
        term = pivot * _det(minor, variables)
        total = total - term if j % 2 else total + term
    return total


def block_inverse(block: Block) -> Block:
    """Invert [[a, b], [c, 0]] with unit b and c."""
    (a, b), (c, d) = block
    if not d.is_zero():
        msg = "Closed-form inverse needs a zero lower-right entry"
        raise ValueError(msg)
    b_inv, c_inv = b.unit_inverse(), c.unit_inverse()
    zero = LaurentPoly.zero(a.variables)
    return ((zero, c_inv), (b_inv, -(a * b_inv * c_inv)))


def block_product(x: Block, y: Block) -> Block:
    """Multiply two 2x2 blocks."""
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )
