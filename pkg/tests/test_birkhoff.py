"""Birkhoff factorization witnesses: U * D * V = M with certified factors.

The diagonal of a verified witness is an independent route to the
splitting type, so these tests cross it against the section-profile
route on every example.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from jetbundles import (
    LaurentMatrix,
    LaurentPoly,
    NotACocycleError,
    Side,
    birkhoff_factorize,
    build_matrix,
    poly_divmod,
    splitting_from_h0,
)


def mono(c: int, e: int) -> LaurentPoly:
    return LaurentPoly.monomial(Fraction(c), e)


def test_poly_divmod_euclidean_identity() -> None:
    a = LaurentPoly({3: Fraction(2), 1: Fraction(-1), 0: Fraction(5)})
    b = LaurentPoly({1: Fraction(1), 0: Fraction(1)})
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.max_exp < b.max_exp


def test_poly_divmod_rejects_laurent_input() -> None:
    with pytest.raises(ValueError):
        poly_divmod(mono(1, -1), LaurentPoly.one() + mono(1, 1))


def test_witness_for_the_diagonal_order_one_matrix() -> None:
    m = build_matrix(1, -1, Side.RIGHT)
    w = birkhoff_factorize(m)
    assert w.exponents() == [-1, -3]
    assert w.diag == LaurentMatrix.diagonal([mono(1, -1), mono(1, -3)])
    assert w.verify(m)


def test_witness_factors_live_in_the_right_rings() -> None:
    m = build_matrix(2, 1, Side.LEFT)
    w = birkhoff_factorize(m)
    assert w.verify(m)
    assert w.left.gl_class().poly        # U and U^-1 over Q[t]
    assert w.right.gl_class().inv_poly   # V and V^-1 over Q[1/t]
    assert w.left * w.diag * w.right == m


def test_witness_diagonal_is_descending() -> None:
    for k, d, side in [(2, -2, Side.LEFT), (3, 2, Side.RIGHT), (1, 4, Side.LEFT)]:
        w = birkhoff_factorize(build_matrix(k, d, side))
        exps = w.exponents()
        assert exps == sorted(exps, reverse=True)


def test_witness_agrees_with_the_section_route() -> None:
    rng = random.Random(7)
    for _ in range(8):
        k = rng.choice([1, 2, 3])
        d = rng.randint(-4, 4)
        side = rng.choice([Side.LEFT, Side.RIGHT])
        m = build_matrix(k, d, side)
        w = birkhoff_factorize(m)
        assert w.verify(m)
        assert w.splitting() == splitting_from_h0(m)


def test_witness_survives_unimodular_scrambling() -> None:
    # left factor absorbs polynomial row operations, right absorbs the
    # 1/t side, so the diagonal must be unchanged
    rng = random.Random(19)
    for _ in range(5):
        k = rng.choice([1, 2])
        d = rng.randint(-3, 3)
        m = build_matrix(k, d, Side.LEFT)
        u = LaurentMatrix.identity(k + 1).entries
        u[k][0] = LaurentPoly({rng.randint(0, 2): Fraction(rng.randint(1, 4))})
        v = LaurentMatrix.identity(k + 1).entries
        v[k][0] = LaurentPoly({-rng.randint(0, 2): Fraction(rng.randint(1, 4))})
        scrambled = LaurentMatrix(u) * m * LaurentMatrix(v)
        w = birkhoff_factorize(scrambled)
        assert w.verify(scrambled)
        assert w.splitting() == splitting_from_h0(m)


def test_verify_rejects_a_tampered_product() -> None:
    m = build_matrix(1, 1, Side.LEFT)
    w = birkhoff_factorize(m)
    other = build_matrix(1, 0, Side.LEFT)
    assert not w.verify(other)


def test_factorization_rejects_non_cocycles() -> None:
    singular = LaurentMatrix([[LaurentPoly.one(), LaurentPoly.one()],
                              [LaurentPoly.one(), LaurentPoly.one()]])
    with pytest.raises(NotACocycleError):
        birkhoff_factorize(singular)
