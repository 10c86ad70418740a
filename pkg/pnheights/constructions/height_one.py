"""Tuples whose P_N has height 1 for any number of primes.

The primes p_0 < ... < p_{n-1} are chosen so that for all u < v

    (a) mo(p_v^{-1}, p_u) < d(S_u(p_0 ... p_{v-1}))
    (b) p_v - mo(p_u^{-1}, p_v) < d(S_v(p_0 ... p_{u-1} p_v))
    (c) sum 1/p_i < 1

which pins down the order of every boundary set. Each new prime is
added after lifting the previous ones, and is taken = 1 modulo their product.
"""

from math import prod
from typing import List, Optional, Sequence

from ..arithmetic.primality import next_prime_in_ap
from ..arithmetic.prime_tuple import PrimeTuple
from ..arithmetic.residues import mo, reciprocal_sum
from ..core_utils.config_manager import PNConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import BudgetExceededError, ValidationError
from ..engine.profile import minimum_gap
from .certificate import Certificate, Condition, TraceStep
from .enlarge import measured_height
from .search import lift_prime, order_preserved

logger = Logger(__name__)

START = (2, 3)


def condition_a(primes: Sequence[int], u: int, v: int) -> Condition:
    residue = mo(1, primes[v], primes[u])
    gap = minimum_gap(primes[:v], u)
    return Condition(f"a({u},{v})", residue < gap,
                     f"mo({primes[v]}^-1, {primes[u]}) = {residue} < d(S_{u}) = {gap}")


def condition_b(primes: Sequence[int], u: int, v: int) -> Condition:
    distance = primes[v] - mo(1, primes[u], primes[v])
    sub = list(primes[:u]) + [primes[v]]
    gap = minimum_gap(sub, len(sub) - 1)
    return Condition(f"b({u},{v})", distance < gap,
                     f"{primes[v]} - mo({primes[u]}^-1, {primes[v]}) = {distance} < d(S_{v}) = {gap}")


def condition_c(primes: Sequence[int]) -> Condition:
    total = reciprocal_sum(primes)
    return Condition("c", total < 1, f"sum 1/p = {total} < 1")


def pair_conditions(primes: Sequence[int]) -> List[Condition]:
    """Every instance of (a) and (b) for u < v."""
    conditions = []
    for v in range(1, len(primes)):
        for u in range(v):
            conditions.append(condition_a(primes, u, v))
            conditions.append(condition_b(primes, u, v))
    return conditions


def height_one_conditions(primes: Sequence[int]) -> List[Condition]:
    return pair_conditions(primes) + [condition_c(primes)]


def _lift_all(primes: List[int], trace: List[TraceStep], search: dict) -> List[int]:
    """Lift each prime in turn: order kept, every gap above 1, p_{i+1} > 2 p_i.

    Lifting p_i cannot disturb (a) or (b) among the primes before it, so
    those are checked on the prefix ending at p_i.
    """
    source = list(primes)

    def accept(lifted: List[int], i: int) -> bool:
        return (order_preserved(source, lifted, i) and minimum_gap(lifted, i) > 1
                and all(cond.holds for cond in pair_conditions(lifted[:i + 1])))

    for i in range(len(primes)):
        lower = primes[i] if i == 0 else max(primes[i], 2 * primes[i - 1] + 1)
        primes, step = lift_prime(
            primes, i, lower,
            lambda lifted, i=i: accept(lifted, i),
            "lift", **search,
        )
        if step.new != step.old:
            trace.append(step)
    return primes


def _append_prime(primes: List[int], trace: List[TraceStep], search: dict) -> List[int]:
    """Smallest p = 1 (mod prod) above the current primes that meets (a), (b), (c)."""
    modulus = prod(primes)
    rest = reciprocal_sum(primes)
    # (c) needs 1/p < 1 - rest
    lower = max(primes[-1] + 1, int(1 / (1 - rest)) + 1)
    for _ in range(search["budget"]):
        p = next_prime_in_ap(1, modulus, lower, **search)
        candidate = primes + [p]
        if all(cond.holds for cond in height_one_conditions(candidate)):
            trace.append(TraceStep("append", len(primes), 0, p, modulus))
            return candidate
        lower = p + 1
    raise BudgetExceededError(
        f"No prime = 1 (mod {modulus}) satisfying the height-1 conditions within {search['budget']} tries",
        limit=search["budget"],
        last_candidate=lower - 1,
    )


def construct_height1(n: int, config: Optional[PNConfig] = None) -> Certificate:
    """Build an n-prime tuple with height 1 and certify it."""
    if n < 2:
        raise ValidationError(f"Height-1 tuples need at least two primes, got n = {n}")
    config = config or PNConfig()
    budget = config.construction.ap_budget
    search = dict(budget=budget, error_bits=config.arithmetic.primality_error_bits,
                  seed=config.arithmetic.witness_seed + config.construction.seed)

    primes = list(START)
    trace: List[TraceStep] = []
    logger.push_context({"kind": "height1", "dimension": n})
    try:
        while len(primes) < n:
            primes = _lift_all(primes, trace, search)
            primes = _append_prime(primes, trace, search)
            logger.info("Height-1 prefix", primes=primes)
    finally:
        logger.pop_context()

    conditions = height_one_conditions(primes)
    t = PrimeTuple(tuple(primes))
    height, witness = measured_height(t, config)
    return Certificate(
        kind="height1",
        primes=t.primes,
        conditions=conditions,
        height=height,
        witness=witness,
        trace=trace,
        budget=budget,
        seed=config.construction.seed,
    )
