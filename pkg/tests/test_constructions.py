import json
import random
from fractions import Fraction
from math import ceil

import pytest

from pnheights.arithmetic.primality import first_primes, prime_in_range
from pnheights.arithmetic.prime_tuple import PrimeTuple
from pnheights.arithmetic.residues import inverse, mo_plus
from pnheights.constructions.amplify import amplify, amplify_chain, central_factor
from pnheights.constructions.bounds import bounds_report, central_binomial_product, pointwise_upper_bound
from pnheights.constructions.cache import CertificateCache, cache_key
from pnheights.constructions.certificate import Certificate, Condition
from pnheights.constructions.enlarge import enlarge, require_liftable, z_value
from pnheights.constructions.height_one import construct_height1, height_one_conditions
from pnheights.constructions.search import lift_prime, order_preserved
from pnheights.constructions.verification import verify_certificate
from pnheights.core_utils.validator import BudgetExceededError, ValidationError
from pnheights.engine.profile import subsets
from pnheights.engine.regions import region_scan_height
from pnheights.oracle.expansion import degree_pn


# bounds

@pytest.mark.parametrize("n,upper,lower", [
    (2, Fraction(1, 1), 1),
    (3, Fraction(3, 2), 1),
    (4, Fraction(4), 2),
    (5, Fraction(20), 6),
])
def test_bounds_report(n, upper, lower):
    report = bounds_report(n)
    assert report.upper == upper
    assert report.lower == lower
    assert report.maclaurin == Fraction(2 * n, n - 1)


def test_bounds_helpers():
    assert pointwise_upper_bound(6) == 6 * 2 ** 6 // 2
    assert central_binomial_product(6) == 1 * 2 * 3 * 6
    assert bounds_report(3).to_dict() == {"n": "3", "upper": "3/2", "lower": "1", "maclaurin": "3"}
    with pytest.raises(ValidationError):
        bounds_report(1)


def test_known_heights_within_bounds(example_triple, height_two_tuple):
    for t in (example_triple, height_two_tuple):
        report = bounds_report(t.n)
        height = region_scan_height(t).height
        assert report.lower <= height <= report.upper


# enlargement

def test_z_value():
    t = PrimeTuple((5, 11))
    assert z_value(t, 1, ()) == 0
    assert z_value(t, 1, (0,)) == Fraction(4, 5)
    assert -(-11 * 4 // 5) == 9 == pow(5, -1, 11)
    with pytest.raises(ValidationError):
        z_value(t, 1, (1,))


def assert_z_identity(t):
    """ceil(p_j z_T) = mo_plus(sum_{i in T} p_i^{-1}, p_j) for every nonempty T with sum 1/p_i < 1."""
    checked = 0
    for j in range(t.n):
        for T in subsets([i for i in range(t.n) if i != j])[1:]:
            if sum(Fraction(1, t[i]) for i in T) >= 1:
                continue
            total = sum(inverse(t[i], t[j]) for i in T)
            assert ceil(t[j] * z_value(t, j, T)) == mo_plus(total, 1, t[j]), (t, j, T)
            checked += 1
    assert checked


def random_tuples(count, seed):
    rng = random.Random(seed)
    tuples = []
    while len(tuples) < count:
        n = rng.choice((2, 3, 4, 5))
        primes = set()
        while len(primes) < n:
            primes.add(prime_in_range(rng, 2, 500))
        tuples.append(PrimeTuple(tuple(sorted(primes))))
    return tuples


@pytest.mark.parametrize("t", random_tuples(50, seed=31), ids=str)
def test_z_identity_random_tuples(t):
    assert_z_identity(t)


@pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_z_identity_height_one_tuples(n):
    assert_z_identity(PrimeTuple(construct_height1(n).primes))


def test_require_liftable():
    with pytest.raises(ValidationError, match="not generic"):
        require_liftable(PrimeTuple((3, 5, 7)))
    with pytest.raises(ValidationError, match="below 1"):
        require_liftable(PrimeTuple((2, 3, 5)))


def test_lift_prime_keeps_residue():
    lifted, step = lift_prime([3, 5], 0, 4, lambda primes: True, "gap")
    assert lifted == [13, 5]
    assert (step.old, step.new, step.modulus) == (3, 13, 5)
    assert order_preserved([3, 5], lifted, 0)
    with pytest.raises(BudgetExceededError):
        lift_prime([3, 5], 0, 4, lambda primes: False, "gap", budget=3)


def test_enlarge_pair():
    result = enlarge(PrimeTuple((3, 5)))
    gaps = [step for step in result.certificate.trace if step.phase == "gap"]
    assert [step.new for step in gaps] == [13, 31]
    assert result.c == Fraction(1, 32)
    assert result.t.primes == (137, 853)
    assert result.certificate.holds
    assert verify_certificate(result.certificate).ok


def test_enlarge_triple(example_triple):
    result = enlarge(example_triple)
    cert = result.certificate
    assert cert.kind == "enlarged" and cert.holds
    assert all(p > q for p, q in zip(result.t.primes, example_triple.primes))
    assert cert.height == 1
    assert verify_certificate(cert).ok


# amplification

def test_central_factor():
    assert [central_factor(n) for n in (2, 3, 4, 5)] == [1, 2, 3, 6]


def test_amplify_pair():
    result = amplify(PrimeTuple((3, 5)))
    cert = result.certificate
    assert result.t.n == 3
    assert result.t.primes[:2] == (137, 853)
    assert result.t.primes[2] > 137 * 853
    assert cert.kind == "amplified" and cert.holds
    assert abs(result.value) >= 1
    assert cert.witness == result.witness
    assert verify_certificate(cert).ok


def test_amplify_chain_needs_a_step():
    with pytest.raises(ValidationError):
        amplify_chain(PrimeTuple((3, 5)), 0)


@pytest.mark.slow
def test_amplify_height_one_triple():
    base = construct_height1(3)
    result = amplify(PrimeTuple(base.primes))
    assert result.t.n == 4
    assert abs(result.value) >= 2
    assert verify_certificate(result.certificate).ok


# height one

def test_height_one_small():
    pair = construct_height1(2)
    assert pair.primes == (2, 3)
    assert pair.height == 1 and pair.holds
    triple = construct_height1(3)
    assert triple.primes == (5, 13, 131)
    assert triple.height == 1
    assert region_scan_height(PrimeTuple(triple.primes)).height == 1
    with pytest.raises(ValidationError):
        construct_height1(1)


@pytest.mark.slow
def test_height_one_four_primes():
    cert = construct_height1(4)
    assert cert.n == 4 and cert.holds
    assert cert.height == 1
    assert verify_certificate(cert).ok


def test_height_one_conditions_name_every_pair():
    names = [c.name for c in height_one_conditions((5, 13, 131))]
    assert names == ["a(0,1)", "b(0,1)", "a(0,2)", "b(0,2)", "a(1,2)", "b(1,2)", "c"]


# certificates

def test_certificate_json_roundtrip():
    cert = construct_height1(3)
    text = json.dumps(cert.to_dict())
    again = Certificate.from_json(text)
    assert again == cert
    assert all(isinstance(p, str) for p in json.loads(text)["primes"])


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("kind"),
    lambda d: d.update(kind="unknown"),
    lambda d: d.update(primes=[5, 13]),
    lambda d: d.update(height="one"),
])
def test_certificate_schema_rejects(mutate):
    data = construct_height1(2).to_dict()
    mutate(data)
    with pytest.raises(ValidationError):
        Certificate.from_dict(data)


def test_verification_catches_tampering():
    cert = construct_height1(3)
    assert verify_certificate(cert).ok

    flipped = Certificate.from_dict(cert.to_dict())
    flipped.conditions[0] = Condition(flipped.conditions[0].name, False, flipped.conditions[0].instance)
    report = verify_certificate(flipped)
    assert not report.ok
    assert any("a(0,1)" in problem for problem in report.problems)

    inflated = Certificate.from_dict(cert.to_dict())
    inflated.height = 2
    assert not verify_certificate(inflated).ok

    composite = Certificate.from_dict(cert.to_dict())
    composite.primes = (5, 13, 133)
    report = verify_certificate(composite)
    assert not report.ok and any("composite" in problem for problem in report.problems)


def test_amplified_certificate_needs_source():
    cert = Certificate(kind="amplified", primes=(137, 853, 116959))
    report = verify_certificate(cert)
    assert not report.ok


# cache

def test_cache_key():
    assert cache_key("height1", 3, 10, 0) == "height1-n3-b10-s0"
    keyed = cache_key("amplified1", 2, 10, 0, (3, 5))
    assert keyed.startswith("amplified1-n2-b10-s0-") and len(keyed.rsplit("-", 1)[1]) == 16
    assert keyed != cache_key("amplified1", 2, 10, 0, (3, 7))


def test_certificate_cache(tmp_path):
    cache = CertificateCache(tmp_path / "certs")
    cert = construct_height1(2)
    assert cache.get("missing") is None
    assert cache.put("pair", cert)
    assert cache.get("pair") == cert

    cache.path("broken").write_text('{"kind": "height1"}')
    assert cache.get("broken") is None


# degree threshold

@pytest.mark.slow
def test_degree_threshold_at_176_primes():
    primes = first_primes(176)
    below = PrimeTuple(tuple(primes[:175]))
    above = PrimeTuple(tuple(primes))
    assert degree_pn(below) < below.N
    assert degree_pn(above) >= above.N
