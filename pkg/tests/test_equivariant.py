"""Torus-weight bookkeeping and equivariant jet fiber classification.

The fiber of the order-k jet bundle at the distinguished point is a
module over the stabilizer; on the line its canonical weight multiset
is {(0, d-2p) : p = 0..k} for both module structures, which gives an
independent check on every classified regime.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetbundles import (
    JetSpec,
    Side,
    UnsupportedCaseError,
    Weight,
    WeightModule,
    direct_sum,
    fiber_oracle,
    ideal_cohomology_weights,
    jet_c1,
    jet_rank,
    line_cohomology_weights,
    predicted_fiber,
    realize,
    tensor,
    verify_fiber,
)
from jetbundles.equivariant import SymL, SymV

KS = st.integers(min_value=0, max_value=4)
DS = st.integers(min_value=-5, max_value=5)
SIDES = st.sampled_from([Side.LEFT, Side.RIGHT])


def line_weights(k: int, d: int) -> WeightModule:
    return WeightModule.of(Weight.of((0, d - 2 * p)) for p in range(k + 1))


# ---------------------------------------------------------------------
# weights and modules


def test_weights_are_canonicalized_against_the_first_coordinate() -> None:
    assert Weight.of((3, 1)).components == (0, -2)
    assert Weight.of((0, -2)) == Weight.of((5, 3))
    assert Weight.of((1, 2, 3)).components == (0, 1, 2)


def test_sl2_label_reads_the_highest_weight_convention() -> None:
    assert Weight.of((0, -2)).sl2_label == 2
    assert Weight.of((0, 3)).sl2_label == -3
    with pytest.raises(ValueError):
        _ = Weight.of((0, 1, 2)).sl2_label


def test_weight_arithmetic() -> None:
    a = Weight.of((0, -2))
    b = Weight.of((1, 1))  # canonically zero
    assert (a + b) == a
    assert (-a).components == (0, 2)
    assert a.scaled(2).components == (0, -4)


def test_standard_representation_weights() -> None:
    m = realize(SymV(2), 1)
    assert m.sl2_labels() == [2, 0, -2]
    assert m.dimension == 3
    assert realize(SymV(0), 1) == WeightModule.trivial(1)


def test_symmetric_power_of_the_line_is_a_character() -> None:
    c = realize(SymL(3), 1)
    assert c.dimension == 1
    assert list(c.weights()) == [Weight.of((3, 0))]
    # negative order normalizes through the dual
    assert SymL(-2) == SymL(2, dualized=True)
    assert realize(SymL(-2), 1) == realize(SymL(2), 1).dual()


def test_negative_symmetric_power_of_v_is_rejected() -> None:
    with pytest.raises(ValueError):
        realize(SymV(-1), 1)


def test_tensor_distributes_over_weights() -> None:
    a = realize(SymV(1), 1)
    assert a.tensor(a).sl2_labels() == [2, 0, 0, -2]
    assert a.tensor(WeightModule.trivial(1)) == a


def test_dual_is_an_involution() -> None:
    m = realize(tensor(SymL(2), SymV(2)), 1)
    assert m.dual().dual() == m


def test_subtract_requires_containment() -> None:
    big = realize(SymV(2), 1)
    small = WeightModule.of([Weight.of((0, -2))])
    assert (big.subtract(small)).dimension == 2
    with pytest.raises(ValueError):
        small.subtract(big)


def test_expression_rendering() -> None:
    expr = direct_sum(SymV(1, dualized=True), tensor(SymL(3), SymV(1)))
    assert str(expr) == "Sym^1(V*) (+) Sym^3(L) (x) Sym^1(V)"


# ---------------------------------------------------------------------
# cohomology weight modules


def test_line_cohomology_weights_match_dimensions() -> None:
    h0, h1 = line_cohomology_weights(3)
    assert h0.dimension == 4 and h1.is_zero()
    h0, h1 = line_cohomology_weights(-3)
    assert h0.is_zero() and h1.dimension == 2


def test_ideal_cohomology_weights_match_dimensions() -> None:
    for k, d in [(2, 0), (1, 4), (3, 3), (2, -2)]:
        h0, h1 = ideal_cohomology_weights(k, d)
        assert h0.dimension == max(d - k, 0)
        assert h1.dimension == max(k - d, 0)


# ---------------------------------------------------------------------
# fiber classification


def test_fiber_matches_the_local_basis_on_the_line() -> None:
    for side in (Side.LEFT, Side.RIGHT):
        for k in range(0, 4):
            for d in range(-4, 5):
                spec = JetSpec(1, k, d, side)
                assert fiber_oracle(spec) == line_weights(k, d), (k, d, side)


@given(KS, DS, SIDES)
@settings(max_examples=60, deadline=None)
def test_fiber_weight_sum_is_minus_the_first_chern_class(
    k: int, d: int, side: Side
) -> None:
    labels = fiber_oracle(JetSpec(1, k, d, side)).sl2_labels()
    assert sum(labels) == -jet_c1(1, k, d)


@given(KS, DS)
@settings(max_examples=60, deadline=None)
def test_restriction_additivity_of_weight_modules(k: int, d: int) -> None:
    # four-term exact sequence: alternating sum of weight modules is zero
    spec = JetSpec(1, k, d, Side.LEFT)
    line_h0, line_h1 = line_cohomology_weights(d)
    ideal_h0, ideal_h1 = ideal_cohomology_weights(k, d)
    fiber = fiber_oracle(spec)
    assert line_h0 + ideal_h1 == ideal_h0 + fiber + line_h1


def test_all_five_line_regimes_verify() -> None:
    cells = [
        (3, -2, Side.LEFT),   # negative twist
        (3, 1, Side.LEFT),    # band 0 <= d < k
        (2, 4, Side.LEFT),    # k <= d
        (0, 3, Side.RIGHT),   # order zero
        (2, 4, Side.RIGHT),   # positive order
    ]
    for k, d, side in cells:
        report = verify_fiber(JetSpec(1, k, d, side))
        assert report.match
        assert report.oracle.dimension == k + 1


def test_projective_space_fiber() -> None:
    spec = JetSpec(2, 1, 3, Side.LEFT)
    report = verify_fiber(spec)
    assert report.match
    assert report.oracle.dimension == jet_rank(2, 1) == 3
    assert sorted(w.components for w in report.oracle.weights()) == [
        (0, 1, 2), (0, 2, 1), (0, 3, 3),
    ]


@given(st.sampled_from([2, 3]), st.integers(min_value=1, max_value=3))
@settings(max_examples=30, deadline=None)
def test_projective_space_dimension_law(n: int, k: int) -> None:
    d = k + 2
    report = verify_fiber(JetSpec(n, k, d, Side.LEFT))
    assert report.match
    assert report.oracle.dimension == jet_rank(n, k)


def test_unclassified_cells_raise() -> None:
    with pytest.raises(UnsupportedCaseError):
        predicted_fiber(JetSpec(2, 1, 3, Side.RIGHT))
    with pytest.raises(UnsupportedCaseError):
        predicted_fiber(JetSpec(2, 3, 2, Side.LEFT))
    with pytest.raises(UnsupportedCaseError):
        fiber_oracle(JetSpec(3, 1, 2, Side.RIGHT))
