"""Miller-Rabin primality testing and prime search in arithmetic progressions."""

import random
from math import gcd
from typing import List, Optional

import gmpy2

from ..core_utils.config_manager import ArithmeticConfig, ConstructionConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import BudgetExceededError, ValidationError

logger = Logger(__name__)

# Bases 2..37 decide every n < 3.3 * 10**24, which covers all 64-bit inputs.
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 2 ** 64

SMALL_PRIMES = DETERMINISTIC_BASES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _is_witness(a: int, n: int, exponent: int, remainder: int) -> bool:
    """True if a proves n composite."""
    x = gmpy2.powmod(a, remainder, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(exponent - 1):
        x = gmpy2.powmod(x, 2, n)
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int, error_bits: int = ArithmeticConfig.primality_error_bits,
                      seed: int = ArithmeticConfig.witness_seed) -> bool:
    """Miller-Rabin test, deterministic below 2**64.

    Above 2**64 each round errs with probability at most 1/4, so
    ceil(error_bits / 2) rounds are run with bases drawn from a generator
    seeded by (seed, n); the answer for a given n never varies between runs.
    """
    if n < 2:
        return False
    for p in SMALL_PRIMES:
        if n % p == 0:
            return n == p

    exponent, remainder = 0, n - 1
    while remainder % 2 == 0:
        remainder //= 2
        exponent += 1

    if n < DETERMINISTIC_LIMIT:
        bases = DETERMINISTIC_BASES
    else:
        rng = random.Random(f"{seed}:{n}")
        bases = [rng.randrange(2, n - 1) for _ in range(-(-error_bits // 2))]

    return not any(_is_witness(a, n, exponent, remainder) for a in bases)


def next_prime_in_ap(a: int, m: int, lower: int, budget: int = ConstructionConfig.ap_budget,
                     error_bits: int = ArithmeticConfig.primality_error_bits,
                     seed: int = ArithmeticConfig.witness_seed) -> int:
    """Smallest probable prime p >= lower with p = a (mod m).

    At most ``budget`` candidates are tested before BudgetExceededError.
    """
    if m < 1:
        raise ValidationError(f"Modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ValidationError(f"No primes in {a} mod {m}: gcd = {gcd(a, m)}")
    if lower < 2:
        raise ValidationError(f"Lower bound must be at least 2, got {lower}")

    candidate = lower + (a - lower) % m
    for _ in range(budget):
        if is_probable_prime(candidate, error_bits, seed):
            return candidate
        candidate += m

    last = candidate - m
    logger.warning("Prime search budget exhausted", residue=a, modulus=m, last_candidate=last)
    raise BudgetExceededError(
        f"No prime = {a} (mod {m}) found among {budget} candidates from {lower}; last tried {last}",
        limit=budget,
        last_candidate=last,
    )


def first_primes(count: int) -> List[int]:
    """The first ``count`` primes."""
    primes: List[int] = []
    candidate = 2
    while len(primes) < count:
        if is_probable_prime(candidate):
            primes.append(candidate)
        candidate += 1
    return primes


def prime_in_range(rng: random.Random, low: int, high: int, exclude: Optional[set] = None) -> int:
    """A uniformly drawn prime in [low, high] avoiding ``exclude``; used by sampling suites."""
    exclude = exclude or set()
    while True:
        candidate = rng.randint(low, high)
        if candidate not in exclude and is_probable_prime(candidate):
            return candidate
