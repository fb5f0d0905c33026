"""Exact global-section spaces for twisted transition cocycles on P^1.

A rank-r bundle presented by a cocycle M over Q[t, t^-1] has, for each
twist n, the section space

    { (f, g) : f = t^n * M * g,  f in Q[t]^r,  g in Q[t^-1]^r }.

Since f is determined by g, the space is identified with the g-vectors
whose image under t^n * M has no negative exponents.  Truncating g at a
finite depth turns the condition into an integer linear system whose
nullspace is computed exactly; the depth is either certified by a proven
adjugate bound or checked empirically by comparing against depth + 2.

The profile helper computes one section basis at a right edge n_r chosen
so that h(n_r - 1) = det_exponent + r * n_r, which certifies that every
twist of the splitting is >= -(n_r - 1).  The basis is then adapted to
the valuation filtration nu(g) = min exponent of M * g, after which
h(n) = #{basis elements with nu >= -n} holds for every n <= n_r, so one
elimination yields the entire h^0 profile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalInconsistencyError
from .laurent import LaurentPoly
from .matrices import LaurentMatrix

# Entries above this bit size trigger a content strip during elimination.
_STRIP_BITS = 96


# ---------------------------------------------------------------------
# integer echelon with leading-column buckets


def _first_nonzero(row: list[int], start: int) -> int | None:
    for idx in range(start, len(row)):
        if row[idx]:
            return idx
    return None


def _strip_content(row: list[int]) -> None:
    g = 0
    for v in row:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                return
    if g > 1:
        row[:] = [v // g for v in row]


def integer_echelon(rows: list[list[int]], ncols: int) -> dict[int, list[int]]:
    """Bring integer rows to (non-reduced) echelon form.

    Returns a map from pivot column to its pivot row.  Rows are combined
    by exact cross-multiplication, so no rounding occurs; content is
    stripped once entries outgrow a bit threshold.
    """
    buckets: dict[int, list[list[int]]] = {}
    sizes: dict[int, int] = {}
    for row in rows:
        lead = _first_nonzero(row, 0)
        if lead is not None:
            buckets.setdefault(lead, []).append(row)
    pivots: dict[int, list[int]] = {}
    for col in range(ncols):
        waiting = buckets.pop(col, None)
        if not waiting:
            continue
        waiting.sort(key=lambda r: abs(r[col]))
        piv = waiting[0]
        _strip_content(piv)
        pivots[col] = piv
        sizes[col] = max(abs(v) for v in piv).bit_length()
        for row in waiting[1:]:
            a = row[col]
            b = piv[col]
            g = math.gcd(a, b)
            m_row = b // g
            m_piv = a // g
            row[col:] = [
                x * m_row - y * m_piv for x, y in zip(row[col:], piv[col:])
            ]
            if (max(abs(m_row), abs(m_piv)).bit_length() + sizes[col]) > _STRIP_BITS:
                _strip_content(row)
            lead = _first_nonzero(row, col + 1)
            if lead is not None:
                buckets.setdefault(lead, []).append(row)
    return pivots


def nullspace_basis(
    pivots: dict[int, list[int]], ncols: int
) -> list[list[Fraction]]:
    """Kernel basis from an echelon form, one vector per free column."""
    pivot_cols = sorted(pivots)
    pivot_set = set(pivot_cols)
    sparse_rows = {
        pc: [(c, v) for c, v in enumerate(pivots[pc][pc:], start=pc) if v]
        for pc in pivot_cols
    }
    basis: list[list[Fraction]] = []
    zero = Fraction(0)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = Fraction(1)
        for pc in reversed(pivot_cols):
            if pc > free:
                continue
            total = zero
            head = None
            for c, v in sparse_rows[pc]:
                if c == pc:
                    head = v
                elif c <= free and vec[c]:
                    total += v * vec[c]
            if total:
                vec[pc] = -total / head
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------
# constraint systems for section spaces


def _exponent_bounds(matrix: LaurentMatrix) -> tuple[int, int]:
    lo: int | None = None
    hi: int | None = None
    for row in matrix.entries:
        for e in row:
            if e.is_zero():
                continue
            lo = e.min_exp if lo is None else min(lo, e.min_exp)
            hi = e.max_exp if hi is None else max(hi, e.max_exp)
    if lo is None or hi is None:
        raise ValueError("zero matrix has no section theory")
    return lo, hi


def _constraint_rows(
    matrix: LaurentMatrix,
    n: int,
    depth: int,
    upper: int | None,
) -> tuple[list[list[int]], int]:
    """Integer rows of the linear system on g-coefficients.

    Columns are ordered depth-major (all of depth m before depth m+1,
    column m*r + j holding the s^m coefficient of g_j), which lets a
    depth prefix of the system be read off the same echelon run.
    Coefficient of column (j, m) in the row for (entry i, exponent e) is
    the t^(e + m - n) coefficient of M[i][j].  A row is emitted for each
    e < 0 and, when ``upper`` is given, for each e > upper.
    """
    r = matrix.rows
    lo, hi = _exponent_bounds(matrix)
    ncols = r * (depth + 1)
    exponents = list(range(n + lo - depth, 0))
    if upper is not None:
        exponents.extend(range(upper + 1, n + hi + 1))
    rows: list[list[int]] = []
    coeff_tables = [
        [dict(matrix.entries[i][j].terms()) for j in range(r)] for i in range(r)
    ]
    for i in range(r):
        tables = coeff_tables[i]
        for e in exponents:
            frac_row: list[Fraction] = []
            seen = False
            denom_lcm = 1
            for m in range(depth + 1):
                for j in range(r):
                    c = tables[j].get(e + m - n)
                    if c is None:
                        frac_row.append(None)
                    else:
                        frac_row.append(c)
                        seen = True
                        denom_lcm = denom_lcm * c.denominator // math.gcd(
                            denom_lcm, c.denominator
                        )
            if not seen:
                continue
            rows.append(
                [
                    0 if c is None else int(c * denom_lcm)
                    for c in frac_row
                ]
            )
    return rows, ncols


def h0_nullity(
    matrix: LaurentMatrix, n: int, bound: int, two_sided: bool = True
) -> int:
    """Dimension of the truncated section space at twist n, depth bound."""
    rows, ncols = _constraint_rows(
        matrix, n, bound, upper=bound if two_sided else None
    )
    pivots = integer_echelon(rows, ncols)
    return ncols - len(pivots)


def default_section_bound(matrix: LaurentMatrix, n: int) -> int:
    """Depth bound r*E + |n| + 1 with E the largest exponent magnitude."""
    lo, hi = _exponent_bounds(matrix)
    return matrix.rows * max(abs(lo), abs(hi)) + abs(n) + 1


# ---------------------------------------------------------------------
# valuation-adapted section bases


@dataclass
class Section:
    """A g-vector together with its image under the bare cocycle."""

    g: tuple[LaurentPoly, ...]
    image: tuple[LaurentPoly, ...]
    valuation: int
    lead: list[Fraction]


def _section_from_g(matrix: LaurentMatrix, g: tuple[LaurentPoly, ...]) -> Section:
    r = matrix.rows
    image = []
    for i in range(r):
        total = LaurentPoly.zero()
        row = matrix.entries[i]
        for j in range(r):
            if not row[j].is_zero() and not g[j].is_zero():
                total = total + row[j] * g[j]
        image.append(total)
    return _section_from_image(g, tuple(image))


def _section_from_image(
    g: tuple[LaurentPoly, ...], image: tuple[LaurentPoly, ...]
) -> Section:
    val: int | None = None
    for p in image:
        if not p.is_zero():
            val = p.min_exp if val is None else min(val, p.min_exp)
    if val is None:
        raise InternalInconsistencyError(
            "section with zero image under an invertible cocycle"
        )
    lead = [p.coefficient(val) for p in image]
    return Section(g=g, image=image, valuation=val, lead=lead)


def _section_sub(
    sec: Section, factor: Fraction, other: Section
) -> Section | None:
    """Combination sec - factor*other, or None when it vanishes."""
    g = tuple(a - factor * b for a, b in zip(sec.g, other.g))
    if all(p.is_zero() for p in g):
        return None
    image = tuple(a - factor * b for a, b in zip(sec.image, other.image))
    return _section_from_image(g, image)


def adapt_sections(sections: list[Section]) -> list[Section]:
    """Make leading coefficient vectors independent within each valuation.

    For an adapted family no cancellation can raise the valuation of a
    combination below the maximum level involved, so the filtration
    dimension #{nu >= -n} equals h(n) exactly.  Combinations keep the
    span; dependent members drop out as exact zeros.  Every surviving
    combination strictly raises one valuation, which is bounded by the
    largest entry exponent, so the loop terminates.
    """
    pending = list(sections)
    levels: dict[int, list[Section]] = {}
    while pending:
        pending.sort(key=lambda s: s.valuation)
        sec = pending.pop(0)
        group = levels.setdefault(sec.valuation, [])
        cur: Section | None = sec
        moved = False
        for member in group:
            pi = next(i for i, v in enumerate(member.lead) if v)
            c = cur.lead[pi]
            if c:
                cur = _section_sub(cur, c / member.lead[pi], member)
                if cur is None:
                    moved = True
                    break
                if cur.valuation != sec.valuation:
                    pending.append(cur)
                    moved = True
                    break
        if moved:
            continue
        if any(cur.lead):
            group.append(cur)
        else:
            raise InternalInconsistencyError("zero lead at unchanged valuation")
    out: list[Section] = []
    for val in sorted(levels):
        out.extend(levels[val])
    return out


def _basis_to_sections(
    matrix: LaurentMatrix, basis: list[list[Fraction]], depth: int
) -> list[Section]:
    r = matrix.rows
    sections = []
    for vec in basis:
        polys = []
        for j in range(r):
            terms = {}
            for m in range(depth + 1):
                c = vec[m * r + j]
                if c:
                    terms[-m] = c
            polys.append(LaurentPoly(terms))
        sections.append(_section_from_g(matrix, tuple(polys)))
    return sections


@dataclass
class SectionProfile:
    """Adapted section basis at a certified right edge."""

    matrix: LaurentMatrix
    det_exponent: int
    n_right: int
    sections: list[Section]

    def h(self, n: int) -> int:
        if n > self.n_right:
            raise ValueError("profile only covers twists up to its right edge")
        return sum(1 for s in self.sections if s.valuation >= -n)

    @property
    def max_twist(self) -> int:
        return max(s.valuation for s in self.sections)


def _sound_depth(r: int, lo: int, det_exponent: int, n: int) -> int:
    # Any section g of the n-twist satisfies g = t^-n * adj(M)/det * f with
    # f polynomial, so its depth is at most n + det_exponent - (r-1)*lo.
    return max(0, n + det_exponent - (r - 1) * lo)


def _sections_at(
    matrix: LaurentMatrix, n: int, det_exponent: int
) -> list[Section]:
    """Full section basis of the n-twist, depth certified or stabilized."""
    r = matrix.rows
    lo, hi = _exponent_bounds(matrix)
    sound = _sound_depth(r, lo, det_exponent, n)
    guess = max(0, n + (hi - lo) + 2)
    if sound <= guess + 2:
        depth = sound
        rows, ncols = _constraint_rows(matrix, n, depth, upper=None)
        pivots = integer_echelon(rows, ncols)
        basis = nullspace_basis(pivots, ncols)
        return _basis_to_sections(matrix, basis, depth)
    depth = guess
    while depth < sound:
        rows, ncols = _constraint_rows(matrix, n, depth + 2, upper=None)
        pivots = integer_echelon(rows, ncols)
        prefix_cols = r * (depth + 1)
        rank_prefix = sum(1 for c in pivots if c < prefix_cols)
        if prefix_cols - rank_prefix == ncols - len(pivots):
            basis = nullspace_basis(pivots, ncols)
            return _basis_to_sections(matrix, basis, depth + 2)
        depth = min(sound, depth * 2 + 4)
    rows, ncols = _constraint_rows(matrix, n, sound, upper=None)
    pivots = integer_echelon(rows, ncols)
    basis = nullspace_basis(pivots, ncols)
    return _basis_to_sections(matrix, basis, sound)


def certified_profile(matrix: LaurentMatrix) -> SectionProfile:
    """Adapted basis at an edge n_r with h(n_r - 1) == det_exp + r*n_r.

    The edge identity forces every twist of the splitting to be at least
    -(n_r - 1), so second differences of h taken up to n_r recover the
    whole multiset.
    """
    det = matrix.det()
    if not det.is_unit():
        raise ValueError("matrix is not a transition cocycle")
    delta = det.unit_parts()[1]
    r = matrix.rows
    lo, _ = _exponent_bounds(matrix)
    n_r = max(1, -(delta // r) + 2, -lo + 2)
    step = max(4, r)
    while True:
        sections = adapt_sections(_sections_at(matrix, n_r, delta))
        expected = delta + r * (n_r + 1)
        if len(sections) < expected:
            raise InternalInconsistencyError(
                "section solver found fewer sections than the edge identity allows"
            )
        if len(sections) > expected:
            # a twist lies left of the current window; widen and retry
            n_r += step
            step *= 2
            continue
        h_prev = sum(1 for s in sections if s.valuation >= 1 - n_r)
        if h_prev == delta + r * n_r:
            return SectionProfile(
                matrix=matrix,
                det_exponent=delta,
                n_right=n_r,
                sections=sections,
            )
        n_r += step
        step *= 2
