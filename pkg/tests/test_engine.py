import random

import numpy as np
import pytest

from pnheights.arithmetic.prime_tuple import PrimeTuple
from pnheights.core_utils.validator import BudgetExceededError, UnsupportedError, ValidationError
from pnheights.engine.orientation import OrientationSet
from pnheights.engine.pointwise import closed_form_value, coeff_at, zero_by_prop
from pnheights.engine.profile import ResidueProfile, boundary_labels, label_order, minimum_gap
from pnheights.engine.regions import (
    RegionModel,
    coeff_region_lookup,
    projection_contributions,
    region_representative,
    region_scan_height,
)
from pnheights.oracle.expansion import expand_pn, height_dense


def test_orientation_sets():
    assert len(list(OrientationSet.all_sets(3))) == 8
    S = OrientationSet.descending(3)
    assert S.contains(2, 0) and not S.contains(0, 2)
    assert S.reversed() == OrientationSet.ascending(3)
    assert OrientationSet.sample(4, random.Random(0)).n == 4
    with pytest.raises(ValidationError):
        OrientationSet.named("sideways", 3)


def test_coeff_at_every_orientation_matches_expansion():
    t = PrimeTuple((3, 5, 7))
    reduced = expand_pn(t, reduced=True).coeffs
    for S in OrientationSet.all_sets(3):
        assert [coeff_at(t, k, S) for k in range(t.N)] == reduced


def test_coeff_at_reduced_when_degree_exceeds():
    t = PrimeTuple((2, 3, 5, 7))
    reduced = expand_pn(t, reduced=True).coeffs
    rng = random.Random(5)
    for k in rng.sample(range(t.N), 40):
        assert coeff_at(t, k) == reduced[k]


def test_coeff_at_worked_examples(example_triple, height_two_tuple):
    assert coeff_at(example_triple, 71) == 1
    assert coeff_at(height_two_tuple, 233) == -2
    assert coeff_at(height_two_tuple, 233, OrientationSet.ascending(4)) == -2
    assert coeff_at(example_triple, 0) == 1
    with pytest.raises(ValidationError):
        coeff_at(example_triple, example_triple.N)


def test_closed_form_at_residues(example_triple):
    assert closed_form_value(example_triple, (2, 1, 13)) == 1


def test_residue_profile(example_triple):
    profile = ResidueProfile(example_triple)
    assert profile.boundaries(0) == [0, 1, 2, 3]
    assert profile.boundaries(1) == [0, 1, 9, 10]
    assert profile.boundaries(2) == [0, 12, 14, 21]
    assert profile.gaps() == [1, 1, 2]
    assert profile.generic and profile.deg_lt_N and profile.maclaurin
    assert profile.region_count == 64 and profile.shape == (4, 4, 4)
    assert profile.cuts(2) == profile.boundaries(2)
    assert minimum_gap(example_triple.primes, 2) == 2
    assert label_order(example_triple.primes, 1) == [(), (2,), (0,), (0, 2)]
    assert boundary_labels([11], 0) == {frozenset(): 0}


def test_non_generic_tuple():
    t = PrimeTuple((3, 5, 7))
    profile = ResidueProfile(t)
    assert profile.deg_lt_N and not profile.generic and not profile.distinct
    assert len(profile.cuts(0)) < len(profile.boundaries(0))
    assert profile.region_count < 64
    with pytest.raises(UnsupportedError):
        profile.region((0, 0, 0))


def test_tied_boundaries_merge_regions(height_two_tuple):
    # in dimension p = 5 the subsets {} and {7, 13} both give residue 0
    profile = ResidueProfile(height_two_tuple)
    assert profile.deg_lt_N and not profile.generic
    assert profile.boundaries(0) == [0, 0, 1, 1, 2, 3, 3, 4]
    assert profile.cuts(0) == [0, 1, 2, 3, 4]
    assert profile.shape == (5, 7, 7, 7)
    assert profile.region_count == 1715
    assert profile.region_of(233) == profile.region_indices(height_two_tuple.residues(233))


@pytest.mark.parametrize("primes", [(3, 5, 7), (5, 7, 11, 13)])
def test_merged_regions_match_expansion(primes):
    t = PrimeTuple(primes)
    model = RegionModel(t)
    vector = expand_pn(t)
    assert model.height() == height_dense(vector)[0]
    assert model.scan().witness == height_dense(vector)[1]
    for indices in np.ndindex(model.shape):
        k = model.representative(indices)
        assert model.region_of(k) == indices
        assert vector.at(k) == model.value(indices)


def test_region_model_needs_degree_below_n(example_triple):
    profile = ResidueProfile(example_triple)
    profile.deg_lt_N = False
    with pytest.raises(UnsupportedError, match="deg P_N >= N"):
        RegionModel(example_triple, profile=profile)


def test_zero_by_prop(example_triple):
    assert zero_by_prop(example_triple, 2, 0)
    assert expand_pn(example_triple).at(2) == 0
    assert not zero_by_prop(example_triple, 5, 0)
    assert not zero_by_prop(example_triple, 71, 0)
    with pytest.raises(ValidationError):
        zero_by_prop(example_triple, 300, 0)


def test_zero_by_prop_implies_zero(height_two_tuple):
    t = height_two_tuple
    vector = expand_pn(t)
    profile = ResidueProfile(t)
    for i in range(t.n):
        for k in range(1, t.cofactor(i)):
            if zero_by_prop(t, k, i, profile):
                assert vector.at(k) == 0


def test_region_lookup(example_triple):
    model = RegionModel(example_triple)
    assert model.region_of(71) == (2, 1, 1)
    assert coeff_region_lookup(example_triple, 71) == 1
    assert model.region_of(0) == (0, 0, 0)
    assert region_representative(example_triple, (0, 0, 0)) == 0
    rep = region_representative(example_triple, (2, 1, 1))
    assert example_triple.residues(rep) == (2, 1, 12)
    assert model.region_of(rep) == (2, 1, 1)
    region = model.region((2, 1, 1))
    assert region.name() == "211"
    assert region.lower_labels[0] == frozenset({2})


@pytest.mark.parametrize("primes", [(5, 11, 23), (5, 7, 11), (5, 7, 11, 13)])
def test_region_lookup_matches_expansion(primes):
    t = PrimeTuple(primes)
    model = RegionModel(t)
    vector = expand_pn(t)
    assert all(model.lookup(k) == vector.at(k) for k in range(t.N))


def test_region_scan_heights(example_triple, height_two_tuple):
    assert region_scan_height(example_triple).height == 1
    result = region_scan_height(height_two_tuple)
    assert (result.height, result.witness, result.regions) == (2, 233, 1715)
    assert region_scan_height(PrimeTuple((3, 5))).height == 1
    assert RegionModel(height_two_tuple, threads=2).height() == 2


def test_scan_limit_falls_back_to_representative(height_two_tuple):
    model = RegionModel(height_two_tuple)
    result = model.scan(witness_scan_limit=10)
    assert abs(model.lookup(result.witness)) == 2
    assert result.witness in [model.representative(r) for r in model.maximal_regions()]


def test_region_budget(height_two_tuple):
    with pytest.raises(BudgetExceededError) as info:
        RegionModel(height_two_tuple, max_scan_regions=100).tensor()
    assert info.value.required == 1715


def test_terms_sum_to_tensor(example_triple):
    model = RegionModel(example_triple)
    total = sum(model.term_tensors())
    assert np.array_equal(total, model.tensor())
    projections = projection_contributions(example_triple)
    assert [p.shape for p in projections] == [(4, 4)] * 3


def test_orientation_changes_terms_not_values(example_triple):
    down = RegionModel(example_triple, OrientationSet.descending(3))
    up = RegionModel(example_triple, OrientationSet.ascending(3))
    assert np.array_equal(down.tensor(), up.tensor())


def test_profile_to_dict(example_triple):
    data = ResidueProfile(example_triple).to_dict()
    assert data["generic"] is True
    assert data["dimensions"][2]["boundaries"] == ["0", "12", "14", "21"]
