"""Splitting types of bundles on P^1 from their h^0 profiles.

Every vector bundle on the projective line is a direct sum of line
bundles O(a_1) (+) ... (+) O(a_r).  The multiset {a_i} is recovered here
purely from dimension counts: with h(n) = h^0 of the n-twist one has
h(n) = sum_i max(a_i + n + 1, 0), so the second difference of the
profile counts twists,

    #{ i : a_i = -n } = (h(n) - h(n-1)) - (h(n-1) - h(n-2)).

The scan runs between certified edges: on the left h vanishes below the
largest twist, on the right h(n) meets the exact lower envelope
det_exponent + r*(n+1) once every twist is in range.  The recovered
multiset must have exactly r members summing to the determinant
exponent; anything else raises an internal-inconsistency error rather
than returning a guess.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    InternalInconsistencyError,
    NotACocycleError,
    UnsupportedCaseError,
)
from .jets import JetSpec, Side
from .matrices import LaurentMatrix
from .sections import certified_profile, default_section_bound, h0_nullity


@dataclass(frozen=True)
class SplittingType:
    """Multiset of line-bundle twists, kept as a descending tuple."""

    twists: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "twists", tuple(sorted(self.twists, reverse=True))
        )

    @classmethod
    def of(cls, values: Iterable[int]) -> "SplittingType":
        return cls(tuple(values))

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def c1(self) -> int:
        return sum(self.twists)

    def render(self) -> str:
        """Human form, descending: ``O(1) (+) O(-2)^2`` style."""
        if not self.twists:
            return "0"
        parts = []
        for twist, count in sorted(
            Counter(self.twists).items(), key=lambda kv: -kv[0]
        ):
            body = f"O({twist})"
            parts.append(body if count == 1 else f"{body}^{count}")
        return " ⊕ ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _require_cocycle(matrix: LaurentMatrix) -> int:
    if not matrix.is_square():
        raise NotACocycleError("transition matrices must be square")
    det = matrix.det()
    if det.is_zero() or not det.is_unit():
        raise NotACocycleError(
            "determinant is not a unit of Q[t, t^-1]; not a cocycle"
        )
    return det.unit_parts()[1]


def h0_of_twisted_cocycle(
    matrix: LaurentMatrix, n: int, bound: int | None = None
) -> int:
    """Dimension of global sections of the n-twist of the bundle.

    Solves f(t) = t^n * M * g(1/t) with both polynomial vectors
    truncated at ``bound`` (default r*E + |n| + 1 where E is the largest
    entry exponent magnitude) and returns the solution dimension.  The
    result is independent of any bound at or beyond the default; tests
    assert this by recomputing at bound + 2.
    """
    _require_cocycle(matrix)
    if bound is None:
        bound = default_section_bound(matrix, n)
    if bound < 0:
        raise ValueError("section search bound must be >= 0")
    return h0_nullity(matrix, n, bound, two_sided=True)


def splitting_from_h0(matrix: LaurentMatrix) -> SplittingType:
    """Splitting type via second differences of the section profile."""
    delta = _require_cocycle(matrix)
    r = matrix.rows
    profile = certified_profile(matrix)
    counts = Counter(s.valuation for s in profile.sections)
    n_left = -profile.max_twist - 1
    twists: list[int] = []
    for n in range(n_left + 1, profile.n_right + 1):
        multiplicity = counts[-n] - counts[-n + 1]
        if multiplicity < 0:
            raise InternalInconsistencyError(
                f"negative twist multiplicity at n={n}"
            )
        twists.extend([-n] * multiplicity)
    if len(twists) != r:
        raise InternalInconsistencyError(
            f"recovered {len(twists)} twists for a rank-{r} cocycle"
        )
    if sum(twists) != delta:
        raise InternalInconsistencyError(
            f"twist sum {sum(twists)} differs from determinant exponent {delta}"
        )
    return SplittingType.of(twists)


def predicted_splitting(spec: JetSpec) -> SplittingType:
    """Closed-form splitting of the order-k jet bundle of O(d) on P^1.

    Left structure: balanced O(d-k)^(k+1) when d < 0 or d >= k, and
    O^(d+1) (+) O(-k-1)^(k-d) in the band 0 <= d < k.  Right structure:
    O(d) (+) O(d-k-1)^k for every d.
    """
    if spec.N != 1:
        raise UnsupportedCaseError(
            "splitting formulas are classified on the line (N = 1) only"
        )
    k, d = spec.k, spec.d
    if spec.side is Side.RIGHT:
        return SplittingType.of([d] + [d - k - 1] * k)
    if d < 0 or d >= k:
        return SplittingType.of([d - k] * (k + 1))
    return SplittingType.of([0] * (d + 1) + [-k - 1] * (k - d))
