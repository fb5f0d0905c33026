"""Matrices over Q[t, t^-1]: determinants, inverses, GL membership, JSON."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetbundles import LaurentMatrix, LaurentPoly
from jetbundles.matrices import _det_bareiss, _det_cofactor

from test_laurent import laurent_polys, units


def matrices(n: int) -> st.SearchStrategy[LaurentMatrix]:
    row = st.lists(laurent_polys(max_terms=3), min_size=n, max_size=n)
    return st.lists(row, min_size=n, max_size=n).map(LaurentMatrix)


def triangular_units(n: int) -> st.SearchStrategy[LaurentMatrix]:
    """Lower triangular with unit diagonal, hence invertible."""

    def build(diag: list[LaurentPoly], below: list[LaurentPoly]) -> LaurentMatrix:
        entries = [[LaurentPoly.zero() for _ in range(n)] for _ in range(n)]
        it = iter(below)
        for i in range(n):
            entries[i][i] = diag[i]
            for j in range(i):
                entries[i][j] = next(it)
        return LaurentMatrix(entries)

    count_below = n * (n - 1) // 2
    return st.builds(
        build,
        st.lists(units(), min_size=n, max_size=n),
        st.lists(laurent_polys(max_terms=2), min_size=count_below, max_size=count_below),
    )


def _poly(spec: dict[int, int | Fraction]) -> LaurentPoly:
    return LaurentPoly({e: Fraction(c) for e, c in spec.items()})


# ---------------------------------------------------------------------
# fixed examples


def test_identity_and_diagonal() -> None:
    eye = LaurentMatrix.identity(3)
    assert eye.det() == LaurentPoly.one()
    d = LaurentMatrix.diagonal([_poly({2: 1}), _poly({-1: -1})])
    assert d[(0, 0)] == _poly({2: 1})
    assert d[(0, 1)].is_zero()
    assert d.det() == _poly({1: -1})


def test_two_by_two_determinant_has_cross_term() -> None:
    m = LaurentMatrix([[_poly({1: 1}), _poly({0: 1})],
                       [_poly({0: 1}), _poly({-1: 1})]])
    # t * t^-1 - 1 * 1 = 0: singular despite nonzero entries
    assert m.det().is_zero()
    assert not m.gl_class().invertible


def test_inverse_of_triangular_unit_matrix() -> None:
    m = LaurentMatrix([[_poly({1: 1}), LaurentPoly.zero()],
                       [LaurentPoly.one(), _poly({-1: -1})]])
    inv = m.inverse()
    assert m * inv == LaurentMatrix.identity(2)
    assert inv * m == LaurentMatrix.identity(2)


def test_inverse_rejects_non_unit_determinant() -> None:
    m = LaurentMatrix([[_poly({1: 1, 0: 1}), LaurentPoly.zero()],
                       [LaurentPoly.zero(), LaurentPoly.one()]])
    with pytest.raises(ValueError):
        m.inverse()


def test_gl_class_flags() -> None:
    over_poly = LaurentMatrix([[LaurentPoly.one(), _poly({3: 2})],
                               [LaurentPoly.zero(), _poly({0: -1})]])
    cls = over_poly.gl_class()
    assert cls.laurent and cls.poly and not cls.inv_poly

    over_inv = LaurentMatrix([[_poly({0: 1}), LaurentPoly.zero()],
                              [_poly({-2: 5}), _poly({0: 3})]])
    cls = over_inv.gl_class()
    assert cls.laurent and cls.inv_poly and not cls.poly

    mixed = LaurentMatrix([[_poly({1: 1}), LaurentPoly.zero()],
                           [LaurentPoly.one(), _poly({-1: -1})]])
    cls = mixed.gl_class()
    # det is a nonzero constant but entries straddle both subrings
    assert cls.laurent and not cls.poly and not cls.inv_poly


def test_submatrix_and_leading_principal() -> None:
    m = LaurentMatrix([[_poly({0: i * 3 + j}) for j in range(3)] for i in range(3)])
    top = m.leading_principal(2)
    assert top.rows == 2 and top.cols == 2
    assert top[(1, 1)] == _poly({0: 4})
    picked = m.submatrix([0, 2], [1])
    assert picked.rows == 2 and picked.cols == 1
    assert picked[(1, 0)] == _poly({0: 7})


def test_shape_mismatch_rejected() -> None:
    a = LaurentMatrix.identity(2)
    b = LaurentMatrix.zeros(3, 2)
    with pytest.raises(ValueError):
        _ = a + b
    with pytest.raises(ValueError):
        _ = a * b


# ---------------------------------------------------------------------
# randomized properties


@given(matrices(3))
@settings(max_examples=40, deadline=None)
def test_cofactor_and_bareiss_determinants_agree(m: LaurentMatrix) -> None:
    assert _det_cofactor(m.entries) == _det_bareiss([row[:] for row in m.entries])


@given(matrices(2), matrices(2))
@settings(max_examples=60, deadline=None)
def test_determinant_is_multiplicative(a: LaurentMatrix, b: LaurentMatrix) -> None:
    assert (a * b).det() == a.det() * b.det()


@given(matrices(2), matrices(2), matrices(2))
@settings(max_examples=40, deadline=None)
def test_matrix_ring_axioms(
    a: LaurentMatrix, b: LaurentMatrix, c: LaurentMatrix
) -> None:
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    eye = LaurentMatrix.identity(2)
    assert a * eye == a and eye * a == a


@given(triangular_units(3))
@settings(max_examples=25, deadline=None)
def test_inverse_is_two_sided(m: LaurentMatrix) -> None:
    inv = m.inverse()
    eye = LaurentMatrix.identity(3)
    assert m * inv == eye and inv * m == eye


@given(matrices(2))
@settings(max_examples=60)
def test_json_round_trip_is_bit_exact(m: LaurentMatrix) -> None:
    blob = json.dumps(m.to_json(), sort_keys=True)
    back = LaurentMatrix.from_json(json.loads(blob))
    assert back == m
    assert json.dumps(back.to_json(), sort_keys=True) == blob


@given(matrices(2), laurent_polys(max_terms=2))
@settings(max_examples=40)
def test_scalar_multiplication_commutes(m: LaurentMatrix, p: LaurentPoly) -> None:
    assert m.scale(p) == p * m
