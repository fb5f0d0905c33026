"""Matrices over Q[t, t^-1] with exact determinant and invertibility tests.

Transition matrices between trivializations live in GL(r, Q[t, t^-1]),
so the operations that matter here are the ones invertibility hinges on:
an exact determinant, classification of the determinant as a unit of the
full Laurent ring or of one of its two polynomial subrings, and an
adjugate inverse for matrices whose determinant is a unit.

Convention: column p of a transition matrix holds the coordinates of the
p-th basis vector of the primed chart expressed in the unprimed chart
basis.  JSON form: ``{"rows": r, "cols": c, "entries": [[...], ...]}``
with entries row-major, each entry a LaurentPoly JSON payload.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import Coeff, LaurentPoly


@dataclass(frozen=True)
class GLClass:
    """Which general linear groups a square matrix belongs to."""

    laurent: bool
    poly: bool
    inv_poly: bool

    @property
    def invertible(self) -> bool:
        return self.laurent or self.poly or self.inv_poly

    def __str__(self) -> str:
        if not self.invertible:
            return "not invertible"
        groups = []
        if self.poly:
            groups.append("GL over Q[t]")
        if self.inv_poly:
            groups.append("GL over Q[t^-1]")
        if self.laurent:
            groups.append("GL over Q[t,t^-1]")
        return ", ".join(groups)


class LaurentMatrix:
    """Rectangular matrix with LaurentPoly entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]]):
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(entries[0])
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged rows")
        self.rows = len(entries)
        self.cols = width
        self.entries: list[list[LaurentPoly]] = [list(row) for row in entries]

    # -- constructors ------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls(
            [
                [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)]
                for i in range(n)
            ]
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "LaurentMatrix":
        return cls([[LaurentPoly.zero()] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, diag: Sequence[LaurentPoly]) -> "LaurentMatrix":
        n = len(diag)
        out = cls.zeros(n, n)
        for i, p in enumerate(diag):
            out.entries[i][i] = p
        return out

    # -- basic structure ----------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> LaurentPoly:
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:  # matrices are mutable by slot, not by use
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.entries)))

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "LaurentMatrix":
        return LaurentMatrix(
            [[self.entries[i][j] for j in col_idx] for i in row_idx]
        )

    def leading_principal(self, n: int) -> "LaurentMatrix":
        return self.submatrix(range(n), range(n))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_lower_triangular(self) -> bool:
        return all(
            self.entries[i][j].is_zero()
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in addition")
        return LaurentMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in subtraction")
        return LaurentMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __mul__(self, other: "LaurentMatrix | LaurentPoly | Coeff") -> "LaurentMatrix":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return LaurentMatrix(
                [[e * other for e in row] for row in self.entries]
            )
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        out = LaurentMatrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            row = self.entries[i]
            for l in range(self.cols):
                a = row[l]
                if a.is_zero():
                    continue
                other_row = other.entries[l]
                target = out.entries[i]
                for j in range(other.cols):
                    b = other_row[j]
                    if not b.is_zero():
                        target[j] = target[j] + a * b
        return out

    def __rmul__(self, other: "LaurentPoly | Coeff") -> "LaurentMatrix":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self * other
        return NotImplemented

    def scale(self, factor: LaurentPoly | Coeff) -> "LaurentMatrix":
        return self * factor

    # -- determinant and invertibility ---------------------------------

    def det(self) -> LaurentPoly:
        """Exact determinant.

        Cofactor expansion for size <= 4; above that a fraction-free
        Bareiss elimination over the Laurent ring, where every division
        by the previous pivot is exact by construction.
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        if self.rows <= 4:
            return _det_cofactor(self.entries)
        return _det_bareiss([row[:] for row in self.entries])

    def gl_class(self) -> GLClass:
        """Classify invertibility over Q[t,t^-1], Q[t] and Q[t^-1].

        A square matrix lies in GL over a subring iff all entries belong
        to the subring and the determinant is a unit of that subring.
        """
        if not self.is_square():
            return GLClass(False, False, False)
        d = self.det()
        if d.is_zero() or not d.is_unit():
            return GLClass(False, False, False)
        coeff_exp = d.unit_parts()[1]
        all_poly = all(e.is_polynomial() for row in self.entries for e in row)
        all_inv = all(e.is_inverse_polynomial() for row in self.entries for e in row)
        return GLClass(
            laurent=True,
            poly=all_poly and coeff_exp == 0,
            inv_poly=all_inv and coeff_exp == 0,
        )

    def inverse(self) -> "LaurentMatrix":
        """Adjugate divided by the (unit) determinant."""
        d = self.det()
        if d.is_zero() or not d.is_unit():
            raise ValueError("matrix is not invertible over Q[t, t^-1]")
        coeff, exp = d.unit_parts()
        inv_det = LaurentPoly.monomial(1 / coeff, -exp)
        n = self.rows
        if n == 1:
            return LaurentMatrix([[inv_det]])
        adj = LaurentMatrix.zeros(n, n)
        for i in range(n):
            for j in range(n):
                minor = [
                    [self.entries[r][c] for c in range(n) if c != j]
                    for r in range(n)
                    if r != i
                ]
                cof = _det_cofactor(minor) if n - 1 <= 4 else _det_bareiss(minor)
                if (i + j) % 2:
                    cof = -cof
                adj.entries[j][i] = cof * inv_det
        return adj

    # -- serialization and display --------------------------------------

    def to_json(self) -> dict[str, object]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict[str, object]) -> "LaurentMatrix":
        entries = [
            [LaurentPoly.from_json(e) for e in row] for row in data["entries"]
        ]
        out = cls(entries)
        if out.rows != int(data["rows"]) or out.cols != int(data["cols"]):
            raise ValueError("JSON shape fields disagree with entry grid")
        return out

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.rows}x{self.cols})"

    def __str__(self) -> str:
        rendered = [[str(e) for e in row] for row in self.entries]
        widths = [
            max(len(rendered[i][j]) for i in range(self.rows))
            for j in range(self.cols)
        ]
        lines = []
        for row in rendered:
            cells = [cell.rjust(w) for cell, w in zip(row, widths)]
            lines.append("[ " + "  ".join(cells) + " ]")
        return "\n".join(lines)


def _det_cofactor(entries: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    if n == 2:
        return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]
    total = LaurentPoly.zero()
    for j in range(n):
        head = entries[0][j]
        if head.is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in entries[1:]]
        term = head * _det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free elimination; entries stay in the ring at every step."""
    n = len(m)
    sign = 1
    prev = LaurentPoly.one()
    for p in range(n - 1):
        if m[p][p].is_zero():
            for r in range(p + 1, n):
                if not m[r][p].is_zero():
                    m[p], m[r] = m[r], m[p]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        pivot = m[p][p]
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                num = m[i][j] * pivot - m[i][p] * m[p][j]
                m[i][j] = num.divexact(prev)
            m[i][p] = LaurentPoly.zero()
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign == 1 else -result
