"""Tests for axiom names, the implication diagram and the classifier."""
import pytest

from sepax.axioms import classifier
from sepax.axioms.classifier import (
    AXIOM_CHECKS,
    AxiomVector,
    Violation,
    check_axiom,
    check_claims,
    check_diagram,
    classify_point,
    classify_space,
    closed_meets_ro_witness,
    is_infinity_subfit,
    is_ro_subfit,
    is_subfit,
    is_symmetric,
    is_t_quarter_by_separation,
    t_quarter_three_point_criterion,
)
from sepax.axioms.definitions import (
    AXIOMS,
    FINITE_COLLAPSE,
    SEPARATION_AXIOMS,
    AxiomId,
    accepted_names,
    collapsed_classes,
    implication_closure,
    implies,
    resolve_axiom,
    resolve_axioms,
)
from sepax.catalog.constructors import khalimsky_interval, sierpinski
from sepax.errors import CarrierTooLarge, IncompleteVector, UnknownAxiom
from sepax.miner.enumeration import labeled_spaces
from sepax.miner.propositions import verify_diagram, verify_propositions
from sepax.spaces.operators import is_nodec, is_nodec_by_subsets

A = AxiomId


# ======================== Names ========================

class TestNames:
    @pytest.mark.parametrize("spelling, axiom", [
        ("T_1/4", A.T_QUARTER),
        ("T¼", A.T_QUARTER),
        ("t_f", A.T_QUARTER),
        ("T_3/4", A.T_CLOSED_OR_RO),
        ("semi-T1", A.T_NWD_OR_RO),
        ("T_ES", A.T_HALF),
        ("T½", A.T_HALF),
        ("T_Constructible", A.T_D),
        ("αT1", A.T_CLOSED_OR_NWD),
        ("alphaT_D", A.T_OMEGA_BP),
        ("R0", A.SYMMETRIC),
        ("t0", A.T0),
        ("T_0", A.T0),
        ("T_D", A.T_D),
    ])
    def test_aliases(self, spelling, axiom):
        assert resolve_axiom(spelling) is axiom

    def test_unknown_name_lists_accepted(self):
        with pytest.raises(UnknownAxiom) as info:
            resolve_axiom("T_2")
        assert "T_HALF" in info.value.accepted

    def test_comma_list(self):
        assert resolve_axioms("T_D, T_1/4,") == {A.T_D, A.T_QUARTER}

    def test_every_alias_resolves_to_its_owner(self):
        for axiom, info in AXIOMS.items():
            for alias in info.aliases:
                assert resolve_axiom(alias) is axiom
        assert len(accepted_names()) > len(AxiomId)

    def test_separation_axioms(self):
        assert len(SEPARATION_AXIOMS) == 11
        assert A.NODEC not in SEPARATION_AXIOMS


# ======================== Diagram ========================

class TestDiagram:
    def test_direct_and_derived_implications(self):
        assert implies(A.T1, A.T_INF_BP)
        assert implies(A.T_CLOSED_OR_RO, A.T_D)
        assert implies(A.T_NWD, A.T_OMEGA_BP)
        assert not implies(A.T_D, A.T_HALF)
        assert not implies(A.T_OMEGA_BP, A.T0)

    def test_finite_collapse_only_on_finite_graph(self):
        assert not implies(A.T0, A.T_D)
        assert implies(A.T0, A.T_D, finite=True)
        assert implication_closure(True)[A.T0][A.T_D]["source"] == FINITE_COLLAPSE

    def test_no_self_loops(self):
        for finite in (False, True):
            assert not any(u == v for u, v in implication_closure(finite).edges)

    def test_collapsed_classes(self):
        classes = collapsed_classes()
        assert len(classes) == 12
        assert frozenset({A.T_QUARTER, A.T_HALF}) in classes
        assert frozenset({A.T0, A.T_D}) in classes
        assert frozenset({A.T_INF_BP, A.T_OMEGA_BP}) in classes
        assert frozenset({A.SYMMETRIC, A.SUBFIT}) in classes

    def test_check_claims_on_partial_values(self):
        violations = check_claims({A.T_D: True, A.T0: False})
        assert Violation(A.T_D, A.T0) in violations
        assert str(violations[0]) == "T_D ⇒ T0"
        assert check_claims({A.T_D: True}) == []

    def test_incomplete_vector(self):
        with pytest.raises(IncompleteVector) as info:
            check_diagram(AxiomVector({A.T1: True}))
        assert "T0" in info.value.missing


# ======================== Points ========================

class TestClassifyPoint:
    def test_sierpinski_pair(self, s2):
        low, high = classify_point(s2, 0), classify_point(s2, 1)
        assert low.is_closed and low.is_nwd and not low.is_open
        assert high.is_open and not high.is_regular_open and not high.is_nwd
        assert low.is_locally_closed and high.is_locally_closed

    def test_antidiscrete_point_is_not_locally_closed(self, antidiscrete2):
        point = classify_point(antidiscrete2, 0)
        assert not point.is_locally_closed
        assert point.closure.members == (0, 1)

    def test_clopen_points(self, discrete3):
        assert all(classify_point(discrete3, x).is_clopen for x in discrete3.points)

    def test_closed_meets_regular_open(self, attachment):
        f, u = closed_meets_ro_witness(attachment, 3)
        assert (f & u).members == (3,)
        assert f.members == (1, 3)


# ======================== Spaces ========================

class TestClassifySpace:
    def test_sierpinski_pair(self, s2):
        v = classify_space(s2)
        assert v[A.T_HALF] and v[A.RO_SUBFIT]
        assert not v[A.T_NWD_OR_RO] and not v[A.SUBFIT]

    def test_sierpinski_chain(self, s3):
        v = classify_space(s3)
        assert v[A.T_D] and not v[A.T_QUARTER] and not v[A.T_NWD_OR_RO]

    def test_khalimsky_segment(self, khalimsky3):
        v = classify_space(khalimsky3)
        assert v[A.T_CLOSED_OR_RO] and not v[A.T_CLOSED_OR_NWD]

    def test_longer_khalimsky_segment_loses_closed_or_ro(self):
        v = classify_space(khalimsky_interval(-2, 2))
        assert v[A.T_HALF] and v[A.NODEC]
        assert not v[A.T_CLOSED_OR_RO] and not v[A.T_CLOSED_MEETS_RO]

    def test_attachment(self, attachment):
        v = classify_space(attachment)
        assert v[A.T_CLOSED_MEETS_RO] and not v[A.T_CLOSED_OR_NWD] and not v[A.T_QUARTER]

    def test_open_point_space(self, open_point3):
        v = classify_space(open_point3)
        assert v[A.T_OMEGA_BP] and not v[A.T_D]

    def test_antidiscrete_fails_everything(self, antidiscrete2):
        v = classify_space(antidiscrete2)
        assert not any(v[a] for a in SEPARATION_AXIOMS)
        assert v[A.SYMMETRIC]

    def test_discrete(self, discrete3):
        v = classify_space(discrete3)
        assert all(v[a] for a in SEPARATION_AXIOMS)
        assert not v[A.T_NWD]

    def test_check_axiom_accepts_aliases(self, s3):
        assert check_axiom(s3, "T_Constructible")
        assert not check_axiom(s3, "T_F")

    def test_vector_dict_form(self, s2):
        v = classify_space(s2)
        assert AxiomVector.from_dict(v.to_dict()) == v
        assert v.satisfies([A.T_HALF], [A.T1])

    def test_symmetry_and_subfitness(self, s2, antidiscrete2, discrete3):
        assert is_symmetric(antidiscrete2) and is_subfit(antidiscrete2)
        assert not is_symmetric(s2) and not is_subfit(s2)
        assert is_ro_subfit(s2)
        assert is_symmetric(discrete3)

    def test_cross_checks_on_chain(self, s3):
        assert not is_t_quarter_by_separation(s3)
        assert not t_quarter_three_point_criterion(s3)
        assert not is_infinity_subfit(s3)

    def test_diagram_holds_on_catalog_spaces(self, s2, s3, khalimsky3, attachment, open_point3):
        for space in (s2, s3, khalimsky3, attachment, open_point3):
            assert check_diagram(classify_space(space)) == []

    def test_chain_beyond_the_power_set_limit(self):
        chain = sierpinski(21)
        with pytest.raises(CarrierTooLarge):
            chain.all_subsets()
        v = classify_space(chain)
        assert v[A.T_D] and v[A.T_OMEGA_BP] and v[A.T0]
        assert not v[A.NODEC] and not v[A.T_HALF] and not v[A.T_QUARTER]
        assert check_diagram(v) == []


# ======================== Exhaustive Checks ========================

class TestExhaustive:
    def test_diagram_up_to_four_points(self):
        report = verify_diagram(4)
        assert report.passed
        assert report.spaces_at_n == 355
        assert report.spaces_checked == 1 + 4 + 29 + 355

    @pytest.mark.parametrize("name", [
        "finite_collapse", "t1_splits", "closed_or_ro_splits", "subfit_t1", "subfit_closed_or_nwd",
        "symmetric_subfit", "symmetric_collapse", "nodec_collapse", "alpha_correspondence",
        "dense_isolated_points", "t_quarter_criteria",
    ])
    def test_axiom_identities(self, name):
        report = verify_propositions(4, name)
        assert report.passed, report.failures

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_pointwise_nodec_matches_power_set(self, n):
        for space in labeled_spaces(n):
            assert is_nodec(space) == is_nodec_by_subsets(space)


# ======================== Mutation Sanity ========================

def _flip(monkeypatch, axiom):
    original = AXIOM_CHECKS[axiom]
    monkeypatch.setitem(classifier.AXIOM_CHECKS, axiom, lambda space: not original(space))


class TestMutations:
    @pytest.mark.parametrize("axiom", list(AxiomId))
    def test_catalog_regression_catches_any_flip(self, monkeypatch, axiom):
        _flip(monkeypatch, axiom)
        assert not verify_propositions(1, "catalog_regression").passed

    @pytest.mark.parametrize("axiom", [A.T_D, A.T1, A.T_HALF, A.T_INF_BP, A.T_CLOSED_MEETS_RO])
    def test_diagram_catches_flip(self, monkeypatch, axiom):
        _flip(monkeypatch, axiom)
        assert not verify_diagram(3).passed

    def test_clean_registry_passes(self):
        assert verify_propositions(1, "catalog_regression").passed
