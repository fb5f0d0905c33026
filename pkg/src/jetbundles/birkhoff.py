"""Exact Birkhoff factorization of invertible Laurent-matrix cocycles.

A square matrix ``M`` over Q[t, t^-1] with unit determinant factors as

    M = U * D * V

where ``U`` is invertible over Q[t], ``V`` is invertible over Q[t^-1],
and ``D`` is diagonal with entries ``t^(a_0), ..., t^(a_r-1)`` in
descending exponent order.  The exponent multiset is an invariant of
``M`` up to that two-sided action, so a verified triple is a
self-certifying witness for the splitting type: the verification
checks only the product identity and the ring memberships, never the
procedure that produced the triple.

The factorization splits off one maximal twist at a time.  A global
section of the largest twist ``a_1`` gives a pair of coordinate
vectors ``f`` (polynomial in t) and ``g`` (polynomial in t^-1) with
``f = t^-a_1 * M * g``; both extend to invertible matrices over their
rings by gcd elimination, which reduces ``M`` to a block form with a
monomial corner.  Off-diagonal residue in the first row is removed by
splitting each entry at exponent ``a_1`` into a t^-1-polynomial column
operation and a polynomial row operation.  Recursion on the lower
block finishes the job; the exponents it produces can never exceed
``a_1``, so the diagonal comes out descending without sorting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import InternalInconsistencyError, NotACocycleError
from .laurent import LaurentPoly
from .matrices import LaurentMatrix
from .sections import Section, adapt_sections, certified_profile
from .splitting import SplittingType

Vector = list[LaurentPoly]


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Quotient and remainder in Q[t]; both inputs must be polynomial."""
    if not (a.is_polynomial() and b.is_polynomial()):
        raise ValueError("poly_divmod needs ordinary polynomials")
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = dict(a.terms())
    quo: dict[int, Fraction] = {}
    db = b.max_exp
    lb = b.coefficient(db)
    while rem:
        da = max(rem)
        if da < db:
            break
        q = rem[da] / lb
        quo[da - db] = q
        for e, c in b.terms():
            k = da - db + e
            nv = rem.get(k, Fraction(0)) - q * c
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return LaurentPoly(quo), LaurentPoly(rem)


def _mirror_poly(p: LaurentPoly) -> LaurentPoly:
    """Substitute t -> t^-1 (swap the two polynomial subrings)."""
    return LaurentPoly({-e: c for e, c in p.terms()})


def _mirror_matrix(m: LaurentMatrix) -> LaurentMatrix:
    return LaurentMatrix(
        [[_mirror_poly(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
    )


def _scale_primitive(polys: Vector) -> Fraction:
    """Positive scalar making every coefficient an integer with gcd 1."""
    dens = [c.denominator for p in polys for _, c in p.terms()]
    nums = [c.numerator for p in polys for _, c in p.terms()]
    if not nums:
        return Fraction(1)
    den_l = lcm(*dens) if len(dens) > 1 else dens[0]
    num_g = gcd(*nums) if len(nums) > 1 else abs(nums[0])
    return Fraction(den_l, num_g)


def _complete_unimodular(vector: Vector) -> tuple[LaurentMatrix, LaurentMatrix]:
    """Extend a gcd-1 polynomial vector to an invertible matrix over Q[t].

    Returns (C, C_inv) with C invertible over Q[t] and C @ e0 = vector.
    Works by tracked gcd elimination: row operations reduce the vector
    to c * e0 with c a nonzero constant, and the tracked inverse gives
    the completion.
    """
    r = len(vector)
    work = list(vector)
    e_rows = [
        [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(r)]
        for i in range(r)
    ]
    einv_rows = [
        [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(r)]
        for i in range(r)
    ]

    def rowop(i: int, l: int, q: LaurentPoly) -> None:
        # E: row_i -= q*row_l ; E_inv: col_l += q*col_i
        work[i] = work[i] - q * work[l]
        e_rows[i] = [a - q * b for a, b in zip(e_rows[i], e_rows[l])]
        for row in einv_rows:
            row[l] = row[l] + q * row[i]

    def swap(i: int, l: int) -> None:
        work[i], work[l] = work[l], work[i]
        e_rows[i], e_rows[l] = e_rows[l], e_rows[i]
        for row in einv_rows:
            row[i], row[l] = row[l], row[i]

    while True:
        live = [i for i in range(r) if not work[i].is_zero()]
        if not live:
            raise InternalInconsistencyError("zero vector cannot be completed")
        if len(live) == 1:
            break
        piv = min(live, key=lambda i: work[i].max_exp)
        for i in live:
            if i == piv:
                continue
            q, rem = poly_divmod(work[i], work[piv])
            rowop(i, piv, q)
            if work[i] != rem:
                raise InternalInconsistencyError("division bookkeeping broke")
    pos = next(i for i in range(r) if not work[i].is_zero())
    if pos != 0:
        swap(0, pos)
    c = work[0]
    if not (c.is_unit() and c.unit_parts()[1] == 0):
        raise InternalInconsistencyError(
            "entries of a maximal-twist section must have unit gcd"
        )
    scalar = c.unit_parts()[0]
    # C = E_inv * diag(scalar, 1, ...), C_inv = diag(1/scalar, 1, ...) * E
    for row in einv_rows:
        row[0] = row[0] * scalar
    e_rows[0] = [p * (1 / scalar) for p in e_rows[0]]
    comp = LaurentMatrix(einv_rows)
    comp_inv = LaurentMatrix(e_rows)
    return comp, comp_inv


def _embed_corner(m: LaurentMatrix) -> LaurentMatrix:
    """Block diagonal [[1, 0], [0, m]] of size one more than m."""
    r = m.rows + 1
    rows = [[LaurentPoly.zero() for _ in range(r)] for _ in range(r)]
    rows[0][0] = LaurentPoly.one()
    for i in range(m.rows):
        for j in range(m.cols):
            rows[i + 1][j + 1] = m[i, j]
    return LaurentMatrix(rows)


def _row_elementary(r: int, entries: list[LaurentPoly], sign: int) -> LaurentMatrix:
    """Identity with +/- entries placed on the first row, columns 1.."""
    rows = [
        [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(r)]
        for i in range(r)
    ]
    for j, p in enumerate(entries, start=1):
        rows[0][j] = p if sign > 0 else -p
    return LaurentMatrix(rows)


def _project_sections(
    sections: list[Section],
    u1_inv: LaurentMatrix,
    v1_inv: LaurentMatrix,
    split: Section,
) -> list[Section]:
    """Push sections into the lower block after the corner reduction.

    The split-off section projects to zero and is dropped, as is any
    other section whose coordinate vector lands in the corner line.
    """
    out: list[Section] = []
    r = u1_inv.rows
    for sec in sections:
        if sec is split:
            continue
        gv = [
            sum(
                (v1_inv[i, j] * sec.g[j] for j in range(r)),
                start=LaurentPoly.zero(),
            )
            for i in range(r)
        ]
        if all(p.is_zero() for p in gv[1:]):
            continue
        iv = [
            sum(
                (u1_inv[i, j] * sec.image[j] for j in range(r)),
                start=LaurentPoly.zero(),
            )
            for i in range(r)
        ]
        out.append(_block_section(tuple(gv[1:]), tuple(iv[1:])))
    return out


def _block_section(g: tuple[LaurentPoly, ...], image: tuple[LaurentPoly, ...]) -> Section:
    vals = [p.min_exp for p in image if not p.is_zero()]
    if not vals:
        raise InternalInconsistencyError("nonzero block vector with zero image")
    val = min(vals)
    lead = [p.coefficient(val) for p in image]
    return Section(g=g, image=tuple(image), valuation=val, lead=lead)


def _factor(
    matrix: LaurentMatrix, sections: list[Section]
) -> tuple[LaurentMatrix, LaurentMatrix, list[int], LaurentMatrix, LaurentMatrix]:
    r = matrix.rows
    if r == 1:
        entry = matrix[0, 0]
        coeff, exp = entry.unit_parts()
        unit = LaurentMatrix([[LaurentPoly.constant(coeff)]])
        unit_inv = LaurentMatrix([[LaurentPoly.constant(1 / coeff)]])
        ident = LaurentMatrix.identity(1)
        return unit, unit_inv, [exp], ident, ident

    split = max(sections, key=lambda s: s.valuation)
    a1 = split.valuation
    scale = _scale_primitive(list(split.g))
    g_vec = [p * scale for p in split.g]
    f_vec = [(p * scale).shifted(-a1) for p in split.image]
    if any(not p.is_polynomial() for p in f_vec):
        raise InternalInconsistencyError("image not polynomial at its valuation")
    if max(p.max_exp for p in g_vec if not p.is_zero()) != 0:
        raise InternalInconsistencyError(
            "maximal-twist coordinates must not all vanish at the far chart point"
        )
    u1, u1_inv = _complete_unimodular(f_vec)
    v1_mirror, v1_inv_mirror = _complete_unimodular([_mirror_poly(p) for p in g_vec])
    v1 = _mirror_matrix(v1_mirror)
    v1_inv = _mirror_matrix(v1_inv_mirror)

    reduced = u1_inv * matrix * v1
    corner = reduced[0, 0]
    if corner != LaurentPoly.monomial(Fraction(1), a1):
        raise InternalInconsistencyError("corner reduction missed the monomial")
    for i in range(1, r):
        if not reduced[i, 0].is_zero():
            raise InternalInconsistencyError("corner column not cleared")

    block = reduced.submatrix(range(1, r), range(1, r))
    block_secs = adapt_sections(
        _project_sections(sections, u1_inv, v1_inv, split)
    )
    u2, u2_inv, exps2, v2, v2_inv = _factor(block, block_secs)
    if exps2 and max(exps2) > a1:
        raise InternalInconsistencyError("block twist exceeded the split twist")

    # first-row residue in the coordinates that diagonalize the block
    m_row = [reduced[0, j] for j in range(1, r)]
    n_row = [
        sum(
            (m_row[l] * v2_inv[l, j] for l in range(r - 1)),
            start=LaurentPoly.zero(),
        )
        for j in range(r - 1)
    ]
    col_ops: list[LaurentPoly] = []
    row_ops: list[LaurentPoly] = []
    for j, entry in enumerate(n_row):
        low = LaurentPoly({e: c for e, c in entry.terms() if e <= a1})
        high = entry - low
        phi = low.shifted(-a1)
        psi = high.shifted(-exps2[j])
        if not phi.is_inverse_polynomial() or not psi.is_polynomial():
            raise InternalInconsistencyError("residue split left the wrong ring")
        col_ops.append(phi)
        row_ops.append(psi)

    l_inv = _row_elementary(r, row_ops, +1)
    l_mat = _row_elementary(r, row_ops, -1)
    c_inv = _row_elementary(r, col_ops, +1)
    c_mat = _row_elementary(r, col_ops, -1)

    left = u1 * _embed_corner(u2) * l_inv
    left_inv = l_mat * _embed_corner(u2_inv) * u1_inv
    right = c_inv * _embed_corner(v2) * v1_inv
    right_inv = v1 * _embed_corner(v2_inv) * c_mat
    return left, left_inv, [a1] + exps2, right, right_inv


@dataclass(frozen=True)
class BirkhoffWitness:
    """Verified factorization M = left * diag * right.

    ``left`` is invertible over Q[t], ``right`` over Q[t^-1], and
    ``diag`` is diagonal with monic monomial entries in descending
    exponent order.
    """

    left: LaurentMatrix
    diag: LaurentMatrix
    right: LaurentMatrix

    def exponents(self) -> list[int]:
        return [self.diag[i, i].unit_parts()[1] for i in range(self.diag.rows)]

    def splitting(self) -> SplittingType:
        return SplittingType.of(self.exponents())

    def verify(self, matrix: LaurentMatrix) -> bool:
        """Check every witness invariant against the given cocycle."""
        r = matrix.rows
        if self.left.rows != r or self.diag.rows != r or self.right.rows != r:
            return False
        if self.left * self.diag * self.right != matrix:
            return False
        if not self.left.gl_class().poly:
            return False
        if not self.right.gl_class().inv_poly:
            return False
        exps = []
        for i in range(r):
            for j in range(r):
                entry = self.diag[i, j]
                if i != j:
                    if not entry.is_zero():
                        return False
                    continue
                if not entry.is_unit():
                    return False
                coeff, exp = entry.unit_parts()
                if coeff != 1:
                    return False
                exps.append(exp)
        return all(a >= b for a, b in zip(exps, exps[1:]))


def birkhoff_factorize(matrix: LaurentMatrix) -> BirkhoffWitness:
    """Factor an invertible cocycle and return a verified witness.

    Raises NotACocycleError for inputs that are not square with unit
    determinant, and InternalInconsistencyError if the constructed
    triple fails its own verification.
    """
    if not matrix.is_square():
        raise NotACocycleError("only square matrices factor")
    det = matrix.det()
    if not det.is_unit():
        raise NotACocycleError("determinant must be a unit monomial")
    profile = certified_profile(matrix)
    left, _, exps, right, _ = _factor(matrix, list(profile.sections))
    diag = LaurentMatrix.diagonal(
        [LaurentPoly.monomial(Fraction(1), e) for e in exps]
    )
    witness = BirkhoffWitness(left=left, diag=diag, right=right)
    if not witness.verify(matrix):
        raise InternalInconsistencyError("factorization failed verification")
    return witness
