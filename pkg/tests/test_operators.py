"""Tests for closure/interior operators, nearly open sets and the alpha-modification."""
import pytest

from sepax.catalog.constructors import khalimsky_interval
from sepax.errors import CarrierMismatch
from sepax.miner.propositions import verify_propositions
from sepax.models import PointSet
from sepax.spaces.operators import (
    NearOpenKind,
    alpha_modification,
    boundary,
    closure,
    interior,
    is_dense,
    is_near_open,
    is_nodec,
    is_nwd,
    is_regular_open,
    near_open_witness,
    nwd_masks,
    open_dense_decomposition,
    regular_open_interior,
    regular_open_masks,
    ro_mask,
)


def _set(space, *members):
    return PointSet.of(space.carrier_size, members)


# ======================== Closure and Interior ========================

class TestOperators:
    def test_sierpinski_pair(self, s2):
        assert closure(s2, _set(s2, 1)).members == (0, 1)
        assert closure(s2, _set(s2, 0)).members == (0,)
        assert interior(s2, _set(s2, 0)).is_empty()
        assert boundary(s2, _set(s2, 1)).members == (0,)

    def test_nowhere_dense_and_dense(self, s2):
        assert is_nwd(s2, _set(s2, 0))
        assert not is_nwd(s2, _set(s2, 1))
        assert is_dense(s2, _set(s2, 1))

    def test_open_point_is_not_regular_open(self, s2):
        assert not is_regular_open(s2, _set(s2, 1))
        assert regular_open_interior(s2, _set(s2, 1)) == PointSet.full(2)

    def test_khalimsky_odd_points_are_regular_open(self, khalimsky3):
        assert is_regular_open(khalimsky3, _set(khalimsky3, 0))
        assert is_regular_open(khalimsky3, _set(khalimsky3, 2))
        assert is_nwd(khalimsky3, _set(khalimsky3, 1))

    def test_regular_open_interior_in_longer_segment(self):
        # -2 is interior to the closure of {-1}
        space = khalimsky_interval(-2, 2)
        assert ro_mask(space, 0b00010) == 0b00011
        assert 0b00010 not in regular_open_masks(space)

    def test_mismatched_carrier(self, s2):
        with pytest.raises(CarrierMismatch):
            closure(s2, PointSet.of(3, [0]))

    def test_duality_property(self):
        assert verify_propositions(3, "interior_closure_duality").passed


# ======================== Nearly Open Sets ========================

class TestNearOpen:
    def test_open_sets_are_every_kind(self, attachment):
        for subset in attachment.opens:
            for kind in NearOpenKind:
                assert is_near_open(attachment, subset, kind)

    def test_antidiscrete_point_is_pre_open_only(self, antidiscrete2):
        point = _set(antidiscrete2, 0)
        assert is_near_open(antidiscrete2, point, NearOpenKind.PRE)
        assert is_near_open(antidiscrete2, point, NearOpenKind.BETA)
        assert not is_near_open(antidiscrete2, point, NearOpenKind.SEMI)
        assert not is_near_open(antidiscrete2, point, NearOpenKind.ALPHA)

    def test_closed_nowhere_dense_point_is_nothing(self, s2):
        point = _set(s2, 0)
        for kind in NearOpenKind:
            assert not is_near_open(s2, point, kind)
            assert near_open_witness(s2, point, kind) is None

    def test_semi_open_witness(self, s2):
        (u,) = near_open_witness(s2, PointSet.full(2), NearOpenKind.SEMI)
        assert u.members == (1,)

    def test_alpha_witness_is_a_sandwich(self, open_point3):
        a = _set(open_point3, 0, 1)
        u, v = near_open_witness(open_point3, a, NearOpenKind.ALPHA)
        assert u <= a <= v
        assert v <= closure(open_point3, u)

    def test_open_dense_decomposition(self, antidiscrete2):
        u, d = open_dense_decomposition(antidiscrete2, _set(antidiscrete2, 0))
        assert (u & d).members == (0,)
        assert is_dense(antidiscrete2, d)

    def test_no_decomposition_for_non_pre_open(self, s2):
        assert open_dense_decomposition(s2, _set(s2, 0)) is None

    @pytest.mark.parametrize("name", [
        "near_open_hierarchy", "near_open_witness_forms", "pre_open_decomposition", "regular_open_basics",
    ])
    def test_properties_up_to_four_points(self, name):
        report = verify_propositions(4, name)
        assert report.passed, report.failures


# ======================== Alpha-Modification ========================

class TestAlphaModification:
    def test_open_point_space(self, open_point3):
        alpha = alpha_modification(open_point3)
        assert sorted(alpha.open_masks) == [0b000, 0b001, 0b011, 0b101, 0b111]
        assert nwd_masks(alpha) == nwd_masks(open_point3)

    def test_nodec(self, open_point3):
        assert not is_nodec(open_point3)
        assert is_nodec(alpha_modification(open_point3))

    def test_nodec_space_is_fixed(self, khalimsky3):
        assert is_nodec(khalimsky3)
        assert alpha_modification(khalimsky3) == khalimsky3

    def test_labels_survive(self, attachment):
        assert alpha_modification(attachment).labels == attachment.labels

    def test_alpha_properties(self):
        report = verify_propositions(4, "alpha_modification")
        assert report.passed, report.failures
