"""Transition matrices for jet bundles of O(d) on the projective line.

Work over P^1 = Proj Q[x0, x1] with the two standard charts U0 (x0 != 0,
coordinate t = x1/x0) and U1 (x1 != 0, coordinate s = 1/t).  The order-k
jet bundle of O(d) restricts to a free module of rank k+1 on each chart,
with basis dt^j (x) x0^d on U0 and ds^p (x) x1^d on U1.  The jet bundle
carries two module structures, induced by the two projections from the
product; they give different gluing and the two builders below produce
the corresponding (k+1) x (k+1) transition matrices over Q[t, t^-1].

Column p of a matrix holds the coordinates of the p-th primed basis
vector in the unprimed basis, so composing with a twist or truncating an
order always acts on whole columns.

The left structure expands ds^p (x) x1^d through the chain rule
ds = -t^-2 dt together with x1^d = t^d x0^d; the closed forms fall into
two coefficient families, chosen per column:

* alternating-sign family (rows j = p..k):
    entry(j, p) = (-1)^j * C(j-d-1, p-d-1) * t^(d-p-j)
  valid when the twist leaves no polynomial part (d < 0), and for the
  columns p > d when 0 <= d < k;
* binomial-transport family (rows j = p..k, vanishing once j > d):
    entry(j, p) = (-1)^p * C(d-p, j-p) * t^(d-p-j)
  valid when 0 <= d and p <= min(d, k).

The right structure moves the twist through the other projection, so
column 0 is the bare line-bundle factor u^d and every other column is
independent of d up to the global twist:
    entry(j, p) = (-1)^j * C(j-1, p-1) * u^(d-p-j)   (1 <= p <= j <= k)
with u the chart coordinate playing the role of t.

Both matrices are lower triangular with diagonal (+-1) * t^(d-2p), hence
invertible over Q[t, t^-1] with determinant +- t^((k+1)d - k(k+1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .laurent import LaurentPoly
from .matrices import LaurentMatrix


class Side(Enum):
    """Which module structure glues the jet bundle."""

    LEFT = "left"
    RIGHT = "right"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class JetSpec:
    """Parameters naming one jet bundle fiber problem."""

    N: int
    k: int
    d: int
    side: Side

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("projective space dimension N must be >= 1")
        if self.k < 0:
            raise ValueError("jet order k must be >= 0")


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention that out-of-range values are 0."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def build_left_matrix(k: int, d: int) -> LaurentMatrix:
    """Transition matrix of the left structure for order k and twist d."""
    if k < 0:
        raise ValueError("jet order k must be >= 0")
    if k == 0:
        return LaurentMatrix([[LaurentPoly.monomial(1, d)]])
    entries = [[LaurentPoly.zero()] * (k + 1) for _ in range(k + 1)]
    for p in range(k + 1):
        # The binomial-transport family covers columns p <= d when the
        # twist is nonnegative (all columns when k <= d); the
        # alternating-sign family covers everything else.
        transport = d >= 0 and p <= d
        for j in range(p, k + 1):
            if transport:
                c = binomial(d - p, j - p)
                if c == 0:
                    continue
                if p % 2:
                    c = -c
            else:
                c = binomial(j - d - 1, p - d - 1)
                if c == 0:
                    continue
                if j % 2:
                    c = -c
            entries[j][p] = LaurentPoly.monomial(c, d - p - j)
    return LaurentMatrix(entries)


def build_right_matrix(k: int, d: int) -> LaurentMatrix:
    """Transition matrix of the right structure for order k and twist d."""
    if k < 0:
        raise ValueError("jet order k must be >= 0")
    entries = [[LaurentPoly.zero()] * (k + 1) for _ in range(k + 1)]
    entries[0][0] = LaurentPoly.monomial(1, d)
    for p in range(1, k + 1):
        for j in range(p, k + 1):
            c = binomial(j - 1, p - 1)
            if j % 2:
                c = -c
            entries[j][p] = LaurentPoly.monomial(c, d - p - j)
    return LaurentMatrix(entries)


def build_matrix(k: int, d: int, side: Side) -> LaurentMatrix:
    return build_left_matrix(k, d) if side is Side.LEFT else build_right_matrix(k, d)


def verify_cocycle(matrix: LaurentMatrix) -> bool:
    """True when the matrix is a transition cocycle on the line.

    With two charts the cocycle condition is exactly invertibility over
    Q[t, t^-1] on the overlap, i.e. a unit (monomial) determinant.
    """
    return matrix.is_square() and matrix.gl_class().laurent


def expected_det_exponent(k: int, d: int) -> int:
    """Exponent of the determinant monomial for either structure."""
    return (k + 1) * d - k * (k + 1)


def truncation_check(k: int, d: int, side: Side) -> bool:
    """Order-(k-1) data embeds in order k.

    Confirms the leading k x k principal submatrix of the order-k matrix
    equals the order-(k-1) matrix, and that the new corner entry (k, k)
    is a monomial of exponent d - 2k.
    """
    if k < 1:
        raise ValueError("truncation needs k >= 1")
    full = build_matrix(k, d, side)
    previous = build_matrix(k - 1, d, side)
    if full.leading_principal(k) != previous:
        return False
    corner = full[k, k]
    if not corner.is_unit():
        return False
    return corner.unit_parts()[1] == d - 2 * k
