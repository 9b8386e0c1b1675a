"""Tests for point sets, space construction, canonical forms and the JSON format."""
import json
import os
from itertools import permutations

import pytest

from sepax.catalog.constructors import khalimsky_interval, sierpinski, subspace
from sepax.errors import (
    CarrierMismatch,
    CarrierTooLarge,
    InvalidPreorder,
    NotATopology,
    SpaceFormatError,
)
from sepax.miner.enumeration import labeled_preorders, labeled_spaces
from sepax.models import FiniteSpace, PointSet, Preorder, compress_mask, expand_mask, mask_members
from sepax.spaces.core import (
    antidiscrete_space,
    canonical_form,
    canonical_key,
    discrete_space,
    from_open_sets,
    from_preorder,
    from_subbasis,
    homeomorphism,
    is_homeomorphic,
    min_nbhd,
    relabel,
    specialization_preorder,
)
from sepax.spaces.serialization import dump_space, load_space, parse_space, space_from_dict


def _opens(space):
    return sorted(s.members for s in space.opens)


# ======================== Point Sets ========================

class TestPointSet:
    def test_members_and_len(self):
        s = PointSet.of(5, [4, 0, 2])
        assert s.members == (0, 2, 4)
        assert len(s) == 3
        assert 2 in s and 1 not in s

    def test_set_algebra(self):
        a, b = PointSet.of(4, [0, 1]), PointSet.of(4, [1, 2])
        assert (a | b).members == (0, 1, 2)
        assert (a & b).members == (1,)
        assert (a - b).members == (0,)
        assert a.complement().members == (2, 3)

    def test_mixed_carriers_rejected(self):
        with pytest.raises(CarrierMismatch):
            PointSet.of(3, [0]) | PointSet.of(4, [0])

    def test_out_of_range_member(self):
        with pytest.raises(CarrierMismatch):
            PointSet.of(3, [3])

    def test_restrict_then_expand(self):
        within = PointSet.of(6, [1, 3, 4])
        subset = PointSet.of(6, [3, 4, 5])
        local = subset.restrict(within)
        assert local.carrier_size == 3
        assert local.members == (1, 2)
        assert local.expand(within).members == (3, 4)

    def test_mask_helpers(self):
        assert mask_members(0b10110) == (1, 2, 4)
        assert compress_mask(0b10100, 0b10110) == 0b110
        assert expand_mask(0b101, 0b10110) == 0b10010


# ======================== Preorders ========================

class TestPreorder:
    def test_generated_by_closes_transitively(self):
        order = Preorder.generated_by(3, [(0, 1), (1, 2)])
        assert order.leq(0, 2)
        assert not order.leq(2, 0)
        assert order.is_partial_order()

    def test_non_transitive_rows_rejected(self):
        with pytest.raises(InvalidPreorder):
            Preorder(3, (0b011, 0b110, 0b100))

    def test_non_reflexive_rows_rejected(self):
        with pytest.raises(InvalidPreorder):
            Preorder(2, (0b10, 0b10))

    def test_from_matrix(self):
        order = Preorder.from_matrix([[True, True], [False, True]])
        assert order.up == (0b11, 0b10)


# ======================== Construction ========================

class TestConstruction:
    def test_sierpinski_pair(self, s2):
        assert _opens(s2) == [(), (0, 1), (1,)]

    def test_malformed_family_names_offending_pair(self):
        family = [PointSet.of(3, m) for m in ([], [0], [1], [0, 1, 2])]
        with pytest.raises(NotATopology) as info:
            from_open_sets(3, family)
        assert "union" in str(info.value)
        assert info.value.offending == (0b001, 0b010)

    def test_missing_empty_set(self):
        with pytest.raises(NotATopology):
            from_open_sets(2, [PointSet.of(2, [0, 1])])

    def test_subbasis_generates_khalimsky_segment(self):
        subbasis = [PointSet.of(3, m) for m in ([0], [0, 1, 2], [2])]
        space = from_subbasis(3, subbasis)
        assert _opens(space) == [(), (0,), (0, 1, 2), (0, 2), (2,)]
        assert space == khalimsky_interval(-1, 1)

    def test_preorder_round_trip(self, attachment):
        assert from_preorder(specialization_preorder(attachment)) == attachment

    def test_min_nbhd(self, attachment):
        # 1_0 sits inside the open segment only
        assert min_nbhd(attachment, 3).members == (2, 3, 4)
        assert min_nbhd(attachment, 2).members == (2,)

    def test_equality_ignores_labels(self, s2):
        assert s2.with_labels(["a", "b"]) == s2

    def test_discrete_and_antidiscrete(self):
        assert len(discrete_space(3).opens) == 8
        assert _opens(antidiscrete_space(3)) == [(), (0, 1, 2)]


# ======================== Canonical Forms ========================

class TestCanonicalForm:
    def test_key_invariant_under_relabeling(self, attachment):
        moved = relabel(attachment, [4, 2, 0, 1, 3])
        assert moved != attachment
        assert canonical_key(moved) == canonical_key(attachment)

    def test_canonical_form_is_idempotent(self, attachment):
        once = canonical_form(attachment)
        assert canonical_form(once) == once

    def test_homeomorphism_maps_opens_onto_opens(self, attachment):
        moved = relabel(attachment, [3, 0, 4, 2, 1])
        f = homeomorphism(attachment, moved)
        assert f is not None
        images = {PointSet(5, s.bits).permute(f).bits for s in attachment.opens}
        assert images == moved.open_masks

    def test_non_homeomorphic_spaces(self, s3):
        assert not is_homeomorphic(s3, khalimsky_interval(-1, 1))
        assert homeomorphism(s3, khalimsky_interval(-1, 1)) is None

    def test_reversed_chain_is_homeomorphic(self, s3):
        assert is_homeomorphic(s3, relabel(s3, [2, 1, 0]))

    def test_relabel_carries_labels(self):
        space = sierpinski(2).with_labels(["low", "high"])
        assert relabel(space, [1, 0]).labels == ("high", "low")

    def test_canonicalization_limit(self):
        with pytest.raises(CarrierTooLarge):
            canonical_key(discrete_space(8))


# ======================== Exhaustive Invariants ========================

class TestExhaustiveInvariants:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_every_space_survives_the_preorder_round_trip(self, n):
        for space in labeled_spaces(n):
            assert from_preorder(specialization_preorder(space)) == space

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_every_preorder_survives_the_space_round_trip(self, n):
        for rows in labeled_preorders(n):
            preorder = Preorder(n, rows)
            assert specialization_preorder(from_preorder(preorder)) == preorder

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_canonical_form_ignores_relabeling(self, n):
        for space in labeled_spaces(n):
            form = canonical_form(space)
            assert canonical_form(form) == form
            assert canonical_key(form) == canonical_key(space)
            for permutation in permutations(range(n)):
                assert canonical_form(relabel(space, permutation)) == form

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_min_nbhd_is_the_least_open_neighbourhood(self, n):
        for space in labeled_spaces(n):
            for x in space.points:
                nbhd = min_nbhd(space, x).bits
                assert nbhd in space.open_masks
                assert nbhd >> x & 1
                assert all(nbhd & ~u == 0 for u in space.open_masks if u >> x & 1)


# ======================== Subspaces ========================

class TestSubspace:
    def test_khalimsky_segment_inside_longer_segment(self):
        inner = subspace(khalimsky_interval(-2, 2), PointSet.of(5, [1, 2, 3]))
        assert inner == khalimsky_interval(-1, 1)
        assert inner.labels == ("-1", "0", "1")

    def test_whole_carrier(self, attachment):
        assert subspace(attachment, PointSet.full(5)) == attachment

    def test_open_point_tail_is_antidiscrete(self, open_point3):
        assert subspace(open_point3, PointSet.of(3, [1, 2])) == antidiscrete_space(2)


# ======================== JSON Format ========================

class TestSerialization:
    def test_load_sample(self, spaces_dir, s2):
        assert load_space(os.path.join(spaces_dir, "sierpinski2.json")) == s2

    def test_subbasis_document(self, spaces_dir, attachment):
        assert load_space(os.path.join(spaces_dir, "attachment5.json")) == attachment

    def test_dump_parse(self, attachment):
        parsed = parse_space(dump_space(attachment))
        assert parsed == attachment
        assert parsed.labels == attachment.labels

    def test_bad_json_reports_position(self):
        with pytest.raises(SpaceFormatError) as info:
            parse_space('{"size": 2,\n "opens": [[], [0, 1]')
        assert info.value.line == 2

    def test_missing_keys(self):
        with pytest.raises(SpaceFormatError):
            space_from_dict({"opens": [[]]})
        with pytest.raises(SpaceFormatError):
            space_from_dict({"size": 2})

    def test_point_outside_carrier(self):
        with pytest.raises(SpaceFormatError):
            space_from_dict({"size": 2, "opens": [[], [2], [0, 1]]})

    def test_size_key(self):
        space = space_from_dict({"size": 2, "opens": [[], [1], [0, 1]]})
        assert space == sierpinski(2)
        assert space.labels is None

    def test_malformed_sample_is_not_a_topology(self, spaces_dir):
        with pytest.raises(NotATopology):
            load_space(os.path.join(spaces_dir, "malformed.json"))

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(SpaceFormatError):
            load_space(tmp_path / "missing.json")

    def test_dump_is_plain_json(self, s2):
        assert json.loads(dump_space(s2)) == {"points": ["0", "1"], "opens": [[], [1], [0, 1]]}
