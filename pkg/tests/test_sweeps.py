"""Randomised desk-scale sweeps over many prime tuples, with fixed seeds."""

import random

import pytest

from pnheights.arithmetic.primality import prime_in_range
from pnheights.arithmetic.prime_tuple import PrimeTuple
from pnheights.arithmetic.residues import maclaurin_condition, mo
from pnheights.constructions.bounds import bounds_report
from pnheights.engine.orientation import OrientationSet
from pnheights.engine.pointwise import coeff_at
from pnheights.engine.profile import ResidueProfile
from pnheights.engine.regions import RegionModel
from pnheights.engine.triples import balance_identity, classify_pqr, table_pqr
from pnheights.oracle.expansion import degree_pn, expand_pn, height_dense
from pnheights.recursion.lifting import coeff_via_truncation
from pnheights.recursion.providers import ClosedFormProvider


def random_tuple(rng, n, low, high):
    primes = []
    while len(primes) < n:
        primes.append(prime_in_range(rng, low, high, exclude=set(primes)))
    return PrimeTuple(tuple(sorted(primes)))


def test_pq_plus_one():
    rng = random.Random(11)
    for _ in range(1000):
        p, q = random_tuple(rng, 2, 2, 10 ** 6).primes
        assert p * mo(1, p, q) + q * mo(1, q, p) == p * q + 1


def test_balance_identity_random():
    rng = random.Random(12)
    for _ in range(1000):
        assert balance_identity(*random_tuple(rng, 3, 2, 10 ** 5).primes)


def test_maclaurin_implies_small_degree():
    rng = random.Random(13)
    for _ in range(1000):
        t = random_tuple(rng, rng.randint(2, 6), 2, 200)
        if maclaurin_condition(t.primes):
            assert degree_pn(t) < t.N


@pytest.mark.slow
def test_two_and_three_primes_have_height_one():
    rng = random.Random(14)
    for _ in range(200):
        t = random_tuple(rng, 2, 2, 300)
        if t.N < 10 ** 5:
            assert height_dense(expand_pn(t))[0] == 1
    for _ in range(100):
        t = random_tuple(rng, 3, 3, 100)
        if t.N < 10 ** 6:
            assert height_dense(expand_pn(t))[0] == 1


@pytest.mark.slow
def test_four_primes_reach_but_never_exceed_two():
    rng = random.Random(15)
    heights = []
    while len(heights) < 50:
        t = random_tuple(rng, 4, 3, 60)
        if not ResidueProfile(t).generic:
            continue
        heights.append(RegionModel(t).height())
    # the lower bound is attained by the sweep, not by every tuple
    upper = bounds_report(4).upper
    assert all(1 <= h <= upper for h in heights)
    assert max(heights) == 2 == bounds_report(4).lower


@pytest.mark.slow
def test_three_methods_agree():
    rng = random.Random(16)
    checked = 0
    while checked < 50:
        n = rng.choice((3, 4))
        t = random_tuple(rng, n, 2, 30)
        if t.N >= 3000 or t.without(n - 1).reciprocal_sum >= 1:
            continue
        vector = expand_pn(t, reduced=True)
        dense = expand_pn(t)
        orientations = list(OrientationSet.all_sets(3)) if n == 3 else \
            [OrientationSet.sample(4, rng) for _ in range(8)]
        base, p = t.without(n - 1), t[n - 1]
        provider = ClosedFormProvider(base)
        for k in range(t.N):
            for S in orientations:
                assert coeff_at(t, k, S) == vector[k]
            if k <= dense.degree:
                assert coeff_via_truncation(p, base, k, provider) == dense[k]
        checked += 1


@pytest.mark.slow
def test_case_tables_against_oracle():
    rng = random.Random(17)
    per_case = {case: 0 for case in (1, 2, 3, 4)}
    tries = 0
    while min(per_case.values()) < 10 and tries < 20000:
        tries += 1
        t = random_tuple(rng, 3, 3, 100)
        if not ResidueProfile(t).generic:
            continue
        case = classify_pqr(*t.primes).case
        if per_case[case] >= 10:
            continue
        model = RegionModel(t)
        vector = expand_pn(t)
        for indices, value in table_pqr(*t.primes).items():
            assert vector.at(model.representative(indices)) == value
        per_case[case] += 1
    assert all(count == 10 for count in per_case.values())
