"""Tests for enumeration, exhaustive verification and witness mining."""
from dataclasses import fields

import pytest

from sepax.axioms.classifier import classify_space, closed_meets_ro_witness
from sepax.axioms.definitions import SEPARATION_AXIOMS, AxiomId
from sepax.catalog import lookup
from sepax.config import DEFAULT_MAX_POINTS, EngineConfig
from sepax.errors import CarrierTooLarge, ContradictoryQuery, InvalidInput, UnknownAxiom, UnknownProperty
from sepax.miner import WitnessMiner, enumerate_topologies, mine_witness, verify_diagram, verify_propositions
from sepax.miner.enumeration import (
    EnumerationReport,
    homeomorphism_classes,
    labeled_preorders,
    naive_preorders,
    naive_topology_count,
    spaces_up_to,
)
from sepax.miner.propositions import PROPOSITIONS
from sepax.miner.witnesses import strictness_table
from sepax.models import PointSet
from sepax.spaces.core import canonical_key, from_open_sets, is_homeomorphic

A = AxiomId

LABELED = {1: 1, 2: 4, 3: 29, 4: 355}
CLASSES = {1: 1, 2: 3, 3: 9, 4: 33}


# ======================== Enumeration ========================

class TestEnumeration:
    @pytest.mark.parametrize("n", sorted(LABELED))
    def test_counts(self, n):
        labeled, report = enumerate_topologies(n)
        assert len(labeled) == report.labeled_count == LABELED[n]
        assert report.homeo_class_count == CLASSES[n]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_naive_oracle(self, n):
        assert naive_topology_count(n) == LABELED[n]
        assert naive_preorders(n) == list(labeled_preorders(n))

    def test_classes_are_pairwise_distinct(self):
        classes = homeomorphism_classes(3)
        keys = [canonical_key(space) for space in classes]
        assert keys == sorted(set(keys))

    def test_up_to_homeo_lists_representatives(self):
        classes, _ = enumerate_topologies(3, up_to_homeo=True)
        assert len(classes) == 9
        assert any(is_homeomorphic(space, lookup("sierpinski3").space) for space in classes)

    def test_spaces_up_to(self):
        assert sum(1 for _ in spaces_up_to(3)) == 1 + 4 + 29
        assert sum(1 for _ in spaces_up_to(3, up_to_homeo=True)) == 1 + 3 + 9

    def test_parallel_config(self):
        _, report = enumerate_topologies(3, config=EngineConfig(workers=2))
        assert report.labeled_count == 29

    def test_limits(self):
        with pytest.raises(CarrierTooLarge):
            enumerate_topologies(6)
        with pytest.raises(InvalidInput):
            enumerate_topologies(0)
        with pytest.raises(CarrierTooLarge):
            naive_topology_count(5)

    def test_inconsistent_report(self):
        with pytest.raises(InvalidInput):
            EnumerationReport(2, 1, 3, 0.0)
        with pytest.raises(InvalidInput):
            EnumerationReport(2, 4, 0, 0.0)

    @pytest.mark.slow
    def test_five_points(self):
        _, report = enumerate_topologies(5)
        assert report.labeled_count == 6942
        assert report.homeo_class_count == 139


# ======================== Exhaustive Verification ========================

class TestVerification:
    def test_diagram_on_three_points_in_parallel(self):
        report = verify_diagram(3, EngineConfig(workers=2))
        assert report.passed
        assert (report.spaces_checked, report.spaces_at_n) == (34, 29)

    @pytest.mark.parametrize("n", [3, 4])
    def test_every_property(self, n):
        report = verify_propositions(n)
        assert len(report.results) == len(PROPOSITIONS)
        assert report.passed, [(r.name, r.counterexample) for r in report.failures]

    def test_unknown_property(self):
        with pytest.raises(UnknownProperty) as info:
            verify_propositions(3, "t2_is_hausdorff")
        assert "catalog_regression" in info.value.accepted

    def test_property_sweep_limits(self):
        with pytest.raises(CarrierTooLarge):
            verify_propositions(5)
        with pytest.raises(InvalidInput):
            verify_propositions(0)

    def test_diagram_limit(self):
        with pytest.raises(CarrierTooLarge):
            verify_diagram(6)

    @pytest.mark.slow
    def test_diagram_on_five_points(self):
        report = verify_diagram(5)
        assert report.passed
        assert report.spaces_at_n == 6942


# ======================== Witness Mining ========================

class TestMining:
    def test_half_without_closed_or_nwd(self):
        report = mine_witness(["T_1/2"], ["alphaT1"], 4)
        assert report.minimal
        assert report.witness.carrier_size == 2
        assert report.known_as == ("sierpinski2",)

    def test_t_d_without_quarter(self):
        report = mine_witness([A.T_D], [A.T_QUARTER], 4)
        assert report.known_as == ("sierpinski3",)
        assert is_homeomorphic(report.witness, lookup("S3").space)

    def test_omega_bp_without_t_d(self):
        report = mine_witness([A.T_OMEGA_BP], [A.T_D], 4)
        assert report.known_as == ("open_point3",)

    def test_implied_pair_has_no_witness(self):
        report = mine_witness([A.T1], [A.T0], 4)
        assert not report.found
        assert report.describe() == "NONE_UP_TO(4)"

    def test_infinite_witness_is_reported(self):
        report = mine_witness([A.T_QUARTER], [A.T_D], 4)
        assert not report.found
        assert "kappa_space" in report.analytic
        assert report.describe().startswith("NONE_UP_TO(4); infinite witness: ")

    def test_witness_satisfies_query(self):
        report = mine_witness([A.T_OMEGA_BP], [A.T_D, A.NODEC], 4)
        vector = classify_space(report.witness)
        assert vector[A.T_OMEGA_BP]
        assert not vector[A.T_D] and not vector[A.NODEC]

    def test_contradictory_query(self):
        with pytest.raises(ContradictoryQuery):
            mine_witness(["T_D"], ["T_Constructible"], 3)

    def test_unknown_axiom(self):
        with pytest.raises(UnknownAxiom):
            mine_witness(["T_2"], [], 3)

    def test_strictness_table(self):
        rows = strictness_table(3)
        assert len(rows) == len(SEPARATION_AXIOMS) * (len(SEPARATION_AXIOMS) - 1) == 110
        assert all(row.consistent for row in rows)
        statuses = {(row.antecedent, row.consequent): row.status for row in rows}
        assert statuses[(A.T1, A.T0)] == "implied"
        assert statuses[(A.T_D, A.T_QUARTER)] == "witness"

    def test_witness_names(self):
        names = WitnessMiner().witness_names(3)
        assert names[(A.T_D, A.T_QUARTER)] == "sierpinski3"
        assert names[(A.T_QUARTER, A.T_D)] == "kappa_space"
        assert (A.T1, A.T0) not in names


# ======================== Strictness Rows ========================

def _space_with_opens(n, opens):
    return from_open_sets(n, [PointSet.of(n, members) for members in opens])


class TestStrictnessRows:
    def test_closed_or_ro_without_t1(self):
        report = mine_witness([A.T_CLOSED_OR_RO], [A.T1], 4)
        assert report.witness.carrier_size == 3
        assert "khalimsky3" in report.known_as

    def test_closed_meets_ro_without_closed_or_ro_needs_five_points(self):
        report = mine_witness([A.T_CLOSED_MEETS_RO], [A.T_CLOSED_OR_RO], 4)
        assert not report.found
        assert report.describe() == "NONE_UP_TO(4); infinite witness: khalimsky_square"

    @pytest.mark.slow
    def test_closed_meets_ro_without_closed_or_ro_on_five_points(self):
        report = mine_witness([A.T_CLOSED_MEETS_RO], [A.T_CLOSED_OR_RO], 5)
        assert report.witness.carrier_size == 5
        assert "attachment5" in report.known_as

    def test_nwd_or_ro_without_closed_meets_ro(self):
        report = mine_witness([A.T_NWD_OR_RO], [A.T_CLOSED_MEETS_RO], 4)
        assert report.minimal
        expected = _space_with_opens(4, [[], [0], [1], [0, 1], [0, 1, 2], [0, 1, 2, 3]])
        assert is_homeomorphic(report.witness, expected)
        vector = classify_space(expected)
        assert vector[A.T_NWD_OR_RO] and not vector[A.T_CLOSED_MEETS_RO]
        assert closed_meets_ro_witness(expected, 2) is None


# ======================== Configuration ========================

class TestConfig:
    def test_defaults(self):
        config = EngineConfig.from_env({})
        assert config.max_points == DEFAULT_MAX_POINTS
        assert config.workers == 1

    def test_only_sweep_settings_are_configurable(self):
        assert [f.name for f in fields(EngineConfig)] == ["max_points", "workers"]

    def test_environment_values(self):
        config = EngineConfig.from_env({"SEPAX_MAX_POINTS": "5", "SEPAX_WORKERS": "2"})
        assert (config.max_points, config.workers) == (5, 2)

    @pytest.mark.parametrize("environ", [
        {"SEPAX_MAX_POINTS": "five"},
        {"SEPAX_MAX_POINTS": "9"},
        {"SEPAX_WORKERS": "0"},
    ])
    def test_invalid_values(self, environ):
        with pytest.raises(InvalidInput):
            EngineConfig.from_env(environ)

    def test_check_points(self):
        config = EngineConfig()
        config.check_points(4)
        with pytest.raises(InvalidInput) as info:
            config.check_points(5)
        assert "SEPAX_MAX_POINTS=5" in str(info.value)
