import pytest

from pnheights.arithmetic.prime_tuple import PrimeTuple
from pnheights.core_utils.config_manager import PNConfig
from pnheights.core_utils.validator import ValidationError
from pnheights.oracle.expansion import expand_pn
from pnheights.recursion.lifting import coeff_via_general, coeff_via_truncation, delta_minus_n, truncation_terms
from pnheights.recursion.providers import (
    ClosedFormProvider,
    DenseProvider,
    RecursiveProvider,
    make_provider,
)


@pytest.fixture
def lifted():
    """7 added to (2, 3, 5), with the dense expansion of the 210-tuple."""
    base = PrimeTuple((2, 3, 5))
    return base, 7, expand_pn(base.with_prime(7))


def test_delta_minus_n(lifted):
    base, p, vector = lifted
    for k in range(-5, vector.degree + 40):
        assert delta_minus_n(p, base, k) == vector.at(k) - vector.at(k - base.N)
    assert delta_minus_n(p, base, 0) == 1


def test_coeff_via_general(lifted):
    base, p, vector = lifted
    for k in range(-3, vector.degree + 3):
        assert coeff_via_general(p, base, k) == vector.at(k) - vector.at(k - p * base.N)
    assert coeff_via_general(p, base, 9) == vector.at(9)


def test_delta_telescopes_to_general(lifted):
    base, p, _ = lifted
    for k in range(0, 3 * p * base.N, 7):
        total = sum(delta_minus_n(p, base, k - c * base.N) for c in range(p))
        assert total == coeff_via_general(p, base, k)


@pytest.mark.parametrize("primes,p", [((3, 5), 7), ((5, 11), 23)])
def test_truncation_partial_sums_are_coefficients(primes, p):
    base = PrimeTuple(primes)
    vector = expand_pn(base.with_prime(p))
    for k in range(base.N):
        reachable = {vector.at(k + c * base.N) for c in range(vector.degree // base.N + 2)}
        terms = truncation_terms(p, base, k)
        running = 0
        for index, (m, value) in enumerate(terms):
            running += value
            # equal m' enter together
            if index + 1 < len(terms) and terms[index + 1][0] == m:
                continue
            assert running in reachable


def test_coeff_via_truncation_worked_example():
    assert coeff_via_truncation(23, PrimeTuple((5, 11)), 71) == 1


@pytest.mark.parametrize("primes,p", [((3, 5), 7), ((5, 11), 23), ((3, 7), 11), ((5, 7, 11), 13)])
def test_coeff_via_truncation_matches_expansion(primes, p):
    base = PrimeTuple(primes)
    vector = expand_pn(base.with_prime(p))
    for k in range(-2, vector.degree + 5):
        assert coeff_via_truncation(p, base, k) == vector.at(k)


def test_truncation_terms_are_sorted(example_triple):
    base = example_triple.without(2)
    terms = truncation_terms(23, base, 71)
    assert len(terms) == 4
    assert [m for m, _ in terms] == sorted(m for m, _ in terms)
    kept = sum(value for m, value in terms if 23 * m <= 71)
    assert kept == coeff_via_truncation(23, base, 71)


def test_lifting_preconditions():
    with pytest.raises(ValidationError):
        coeff_via_truncation(5, PrimeTuple((5, 11)), 3)
    with pytest.raises(ValidationError):
        coeff_via_truncation(9, PrimeTuple((5, 11)), 3)
    with pytest.raises(ValidationError, match="sum of 1/p_i"):
        coeff_via_truncation(7, PrimeTuple((2, 3, 5)), 3)


@pytest.mark.parametrize("primes", [(3, 5), (2, 3, 5), (3, 5, 7), (2, 3, 5, 7), (5, 7, 11, 13)])
def test_recursive_provider_matches_expansion(primes):
    t = PrimeTuple(primes)
    vector = expand_pn(t)
    provider = RecursiveProvider(t)
    assert [provider(k) for k in range(-1, vector.degree + 2)] == [vector.at(k) for k in range(-1, vector.degree + 2)]


def test_recursive_memo_is_bounded_by_n(example_triple):
    t = example_triple
    provider = RecursiveProvider(t)
    values = [provider(k) for k in range(provider.degree + 1)]
    assert [provider(k + t.N) for k in range(10)] == [0] * 10
    assert len(provider._memo) <= t.N
    assert all(0 <= key < t.N for key in provider._memo)
    assert provider.coefficient(71 + t.N) == values[71] == 1
    inner = provider.inner
    assert all(0 <= key < inner.t.N for key in inner._memo)


def test_closed_form_provider(example_triple):
    provider = ClosedFormProvider(example_triple)
    assert provider.model is not None
    assert provider(71) == 1
    assert provider(-1) == 0
    assert provider(provider.degree + 1) == 0
    tied = PrimeTuple((3, 5, 7))
    vector = expand_pn(tied)
    provider = ClosedFormProvider(tied)
    assert [provider(k) for k in range(tied.N)] == [vector.at(k) for k in range(tied.N)]


def test_make_provider(example_triple):
    config = PNConfig()
    assert isinstance(make_provider("oracle", example_triple, config), DenseProvider)
    assert isinstance(make_provider("recursive", example_triple, config), RecursiveProvider)
    config.engine.orientation = "ascending"
    assert make_provider("closed", example_triple, config)(71) == 1
    with pytest.raises(ValidationError):
        make_provider("guess", example_triple)
