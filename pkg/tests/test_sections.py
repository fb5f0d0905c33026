"""Integer elimination and exact section spaces of twisted cocycles."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetbundles import (
    LaurentMatrix,
    LaurentPoly,
    Side,
    build_matrix,
    certified_profile,
    default_section_bound,
    h0_nullity,
    h0_of_twisted_cocycle,
)
from jetbundles.sections import integer_echelon, nullspace_basis


def mono(c: int, e: int) -> LaurentPoly:
    return LaurentPoly.monomial(Fraction(c), e)


# ---------------------------------------------------------------------
# elimination kernel


def test_echelon_finds_rank_of_small_system() -> None:
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    pivots = integer_echelon(rows, 3)
    assert len(pivots) == 2


def test_nullspace_vectors_annihilate_rows() -> None:
    rows = [[2, -1, 0, 3], [0, 4, 1, -2]]
    pivots = integer_echelon([r[:] for r in rows], 4)
    basis = nullspace_basis(pivots, 4)
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0


@given(
    st.lists(
        st.lists(st.integers(min_value=-6, max_value=6), min_size=5, max_size=5),
        min_size=2,
        max_size=6,
    )
)
@settings(max_examples=60)
def test_rank_plus_nullity_is_column_count(rows: list[list[int]]) -> None:
    pivots = integer_echelon([r[:] for r in rows], 5)
    basis = nullspace_basis(pivots, 5)
    assert len(pivots) + len(basis) == 5
    for vec in basis:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vec)) == 0


# ---------------------------------------------------------------------
# section dimensions


def test_sections_of_a_diagonal_cocycle_count_monomials() -> None:
    # diag(t^a): h^0 of the n-twist is sum over a of max(a + n + 1, 0)
    m = LaurentMatrix.diagonal([mono(1, 2), mono(1, -1), mono(1, 0)])
    for n in range(-3, 4):
        expected = sum(max(a + n + 1, 0) for a in (2, -1, 0))
        assert h0_of_twisted_cocycle(m, n) == expected


def test_h0_of_the_order_one_twist_one_matrix() -> None:
    m = build_matrix(1, 1, Side.LEFT)
    assert h0_of_twisted_cocycle(m, 0) == 2


def test_nullity_is_monotone_in_depth_bound() -> None:
    m = build_matrix(2, -3, Side.RIGHT)
    b = default_section_bound(m, 0)
    assert h0_nullity(m, 0, b) == h0_nullity(m, 0, b + 2)


def test_profile_matches_direct_counts_on_jet_matrices() -> None:
    for k, d, side in [(1, 1, Side.LEFT), (2, 0, Side.LEFT), (2, 1, Side.RIGHT)]:
        m = build_matrix(k, d, side)
        profile = certified_profile(m)
        for n in range(-2, profile.n_right + 1):
            assert profile.h(n) == h0_of_twisted_cocycle(m, n)


def test_profile_right_edge_guard() -> None:
    profile = certified_profile(build_matrix(1, 0, Side.LEFT))
    with pytest.raises(ValueError):
        profile.h(profile.n_right + 1)


def test_profile_counts_match_the_diagonal_closed_form() -> None:
    twists = (2, -1, -1)
    m = LaurentMatrix.diagonal([mono(1, a) for a in twists])
    profile = certified_profile(m)
    assert profile.max_twist == 2
    for n in range(-3, profile.n_right + 1):
        assert profile.h(n) == sum(max(a + n + 1, 0) for a in twists)


def test_depth_stability_on_scrambled_cocycles() -> None:
    # unimodular row operations leave section spaces untouched
    rng = random.Random(11)
    for trial in range(6):
        k = rng.choice([1, 2])
        d = rng.randint(-3, 3)
        m = build_matrix(k, d, Side.LEFT if trial % 2 else Side.RIGHT)
        u = LaurentMatrix.identity(k + 1).entries
        u[k][0] = LaurentPoly({rng.randint(0, 2): Fraction(rng.randint(1, 3))})
        scrambled = LaurentMatrix(u) * m
        for n in (-1, 0, 1):
            b = default_section_bound(scrambled, n)
            assert h0_nullity(scrambled, n, b) == h0_nullity(scrambled, n, b + 2)
            assert h0_of_twisted_cocycle(scrambled, n) == h0_of_twisted_cocycle(m, n)
