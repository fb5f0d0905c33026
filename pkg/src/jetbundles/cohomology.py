"""Sheaf cohomology tables on projective space, in closed form.

Everything here is a finite formula: line bundles O(d) on P^N have
cohomology only in degrees 0 and N, and the order-(k+1) vanishing
ideal inside O(d) at a point of the line is itself a line bundle
O(d-k-1), so its table follows from the same formula.  The jet helpers
give the rank and first Chern class of the order-k jet bundle of
O(d)^e via the sym-power filtration of the cotangent sheaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import UnsupportedCaseError


@dataclass(frozen=True)
class LineBundle:
    """O(d), any projective space."""

    d: int

    def __str__(self) -> str:
        return f"O({self.d})"


@dataclass(frozen=True)
class TwistedIdeal:
    """Sections of O(d) vanishing to order >= k+1 at a point of P^1."""

    k: int
    d: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("vanishing order k+1 needs k >= 0")

    def __str__(self) -> str:
        return f"I^{{{self.k + 1}}}({self.d})"


@dataclass(frozen=True)
class CohomologyTable:
    """Dimensions h^0..h^N for one sheaf on P^N."""

    dims: tuple[int, ...]

    def h(self, i: int) -> int:
        if i < 0:
            raise ValueError("cohomological degree must be >= 0")
        return self.dims[i] if i < len(self.dims) else 0

    @property
    def euler(self) -> int:
        return sum(
            dim if i % 2 == 0 else -dim for i, dim in enumerate(self.dims)
        )

    def __str__(self) -> str:
        return ", ".join(f"h^{i} = {dim}" for i, dim in enumerate(self.dims))


def h0_line_bundle(N: int, d: int) -> int:
    """Global sections of O(d) on P^N: degree-d forms in N+1 variables."""
    if N < 1:
        raise ValueError("projective space dimension N must be >= 1")
    return comb(N + d, N) if d >= 0 else 0


def line_bundle_cohomology(N: int, d: int) -> CohomologyTable:
    """Full table for O(d) on P^N.

    Only the two ends can be nonzero: h^0 counts degree-d monomials and
    h^N is the h^0 of the dual twist O(-d-N-1), with nothing in between.
    """
    dims = [0] * (N + 1)
    dims[0] = h0_line_bundle(N, d)
    dims[N] = h0_line_bundle(N, -d - N - 1)
    return CohomologyTable(tuple(dims))


def twisted_ideal_cohomology(k: int, d: int) -> CohomologyTable:
    """Table for the order-(k+1) vanishing ideal inside O(d) on P^1.

    On a curve the ideal of a fat point is invertible, here O(d-k-1),
    so h^0 = max(d-k, 0) and h^1 = max(k-d, 0).
    """
    if k < 0:
        raise ValueError("vanishing order k+1 needs k >= 0")
    return line_bundle_cohomology(1, d - k - 1)


def restriction_sequence_balance(k: int, d: int) -> int:
    """Alternating sum across ideal -> O(d) -> length-(k+1) quotient.

    Exactness of the three-term sequence on P^1 forces the alternating
    sum of all six dimensions plus the quotient length to vanish; the
    return value is that sum, so correct tables give 0.
    """
    ideal = twisted_ideal_cohomology(k, d)
    line = line_bundle_cohomology(1, d)
    length = k + 1
    return (ideal.h(0) - line.h(0) + length) - ideal.h(1) + line.h(1)


def jet_rank(N: int, k: int, base_rank: int = 1) -> int:
    """Rank of the order-k jet bundle of a rank-e bundle on P^N."""
    if N < 1 or k < 0 or base_rank < 1:
        raise ValueError("need N >= 1, k >= 0 and a positive base rank")
    return base_rank * comb(N + k, N)


def jet_c1(N: int, k: int, d: int) -> int:
    """First Chern class of the order-k jet bundle of O(d) on P^N.

    Summed layer by layer through the filtration with graded pieces
    Sym^j(Omega)(d): each layer contributes its rank times d plus the
    first Chern class of the sym power of the cotangent sheaf.
    """
    if N < 1 or k < 0:
        raise ValueError("need N >= 1 and k >= 0")
    total = 0
    for j in range(k + 1):
        layer_rank = comb(N + j - 1, N - 1)
        total += layer_rank * d - (N + 1) * comb(N + j - 1, N)
    return total


def parse_sheaf(text: str, N: int) -> LineBundle | TwistedIdeal:
    """Parse ``O(d)`` or ``I^{m}(d)`` descriptors used by the CLI.

    The ideal form requires N = 1 and a vanishing order m >= 1.
    """
    compact = text.strip().replace(" ", "")
    if compact.startswith("O(") and compact.endswith(")"):
        return LineBundle(int(compact[2:-1]))
    if compact.startswith("I^{") and compact.endswith(")"):
        head, _, tail = compact[3:].partition("}(")
        if tail.endswith(")"):
            tail = tail[:-1]
        if head and tail:
            order = int(head)
            if order < 1:
                raise ValueError("vanishing order must be >= 1")
            if N != 1:
                raise UnsupportedCaseError(
                    "fat-point ideals are only handled on the line (N = 1)"
                )
            return TwistedIdeal(k=order - 1, d=int(tail))
    raise ValueError(f"cannot parse sheaf descriptor {text!r}")


def sheaf_cohomology(sheaf: LineBundle | TwistedIdeal, N: int) -> CohomologyTable:
    if isinstance(sheaf, LineBundle):
        return line_bundle_cohomology(N, sheaf.d)
    if N != 1:
        raise UnsupportedCaseError(
            "fat-point ideals are only handled on the line (N = 1)"
        )
    return twisted_ideal_cohomology(sheaf.k, sheaf.d)
