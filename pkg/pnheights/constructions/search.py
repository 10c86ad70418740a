"""Replacing one prime of a tuple by a larger prime in the same residue class."""

from math import prod
from typing import Callable, List, Sequence, Tuple

from ..arithmetic.primality import next_prime_in_ap
from ..core_utils.config_manager import ArithmeticConfig, ConstructionConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import BudgetExceededError
from ..engine.profile import label_order
from .certificate import TraceStep

logger = Logger(__name__)


def others_product(primes: Sequence[int], j: int) -> int:
    return prod(p for i, p in enumerate(primes) if i != j)


def order_preserved(before: Sequence[int], after: Sequence[int], j: int) -> bool:
    """Same subset labels in the same sorted order in dimension j."""
    return label_order(before, j) == label_order(after, j)


def lift_prime(primes: Sequence[int], j: int, lower: int,
               accept: Callable[[List[int]], bool], phase: str,
               budget: int = ConstructionConfig.ap_budget,
               error_bits: int = ArithmeticConfig.primality_error_bits,
               seed: int = ArithmeticConfig.witness_seed) -> Tuple[List[int], TraceStep]:
    """Smallest prime p >= lower, p = p_j modulo the other primes, accepted with p in place of p_j.

    Adding a multiple of the other primes to p_j leaves every other
    dimension's boundary residues untouched.
    """
    modulus = others_product(primes, j)
    candidate = lower
    for _ in range(budget):
        p = next_prime_in_ap(primes[j], modulus, candidate, budget, error_bits, seed)
        lifted = list(primes)
        lifted[j] = p
        if accept(lifted):
            logger.debug("Lifted prime", phase=phase, dimension=j, old=primes[j], new=p, modulus=modulus)
            return lifted, TraceStep(phase, j, primes[j], p, modulus)
        candidate = p + 1

    raise BudgetExceededError(
        f"No acceptable replacement for p_{j} = {primes[j]} within {budget} primes "
        f"= {primes[j]} (mod {modulus}); last tried {candidate - 1}",
        limit=budget,
        last_candidate=candidate - 1,
    )
