"""Enlarging every region of a generic tuple without changing its region order.

Replacing p_j by p_j + c N_j keeps every z_T of dimension j fixed, and the
boundary residues of dimension j are ceilings of p_j z_T, so they keep
their order while the gaps between them grow roughly in proportion to p_j.
"""

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence

from ..arithmetic.prime_tuple import PrimeTuple
from ..arithmetic.residues import mo
from ..core_utils.config_manager import PNConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import ValidationError, validator
from ..engine.profile import ResidueProfile, minimum_gap
from ..engine.regions import RegionModel
from .certificate import Certificate, Condition, TraceStep
from .search import lift_prime, order_preserved

logger = Logger(__name__)

PHASE_ONE_GAP = 3


class EnlargeResult(NamedTuple):
    t: PrimeTuple
    c: Fraction
    certificate: Certificate


def _fractional(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def z_value(t: PrimeTuple, j: int, T: Sequence[int]) -> Fraction:
    """Fractional part of sum_{i in T} (1 - mo(p_j^{-1}, p_i) / p_i).

    p_j z_T + sum_{i in T} 1/p_i is an integer congruent to sum p_i^{-1}
    modulo p_j, so it depends on p_j only through its residue modulo N_j.
    """
    validator.validate_dimension(j, t.n)
    validator.validate_subset(T, t.n, excluded=j)
    return _fractional(sum((1 - Fraction(mo(1, t[j], t[i]), t[i]) for i in T), Fraction(0)))


def require_liftable(t: PrimeTuple) -> ResidueProfile:
    """Enlarging needs sum 1/p_i < 1 and a generic tuple."""
    if t.reciprocal_sum >= 1:
        raise ValidationError(f"Sum of 1/p_i is {t.reciprocal_sum} for {t}; it must be below 1")
    profile = ResidueProfile(t)
    if not profile.generic:
        raise ValidationError(f"{t} is not generic: some dimension has repeated boundary residues")
    return profile


def gap_bounds(n: int) -> int:
    """floor(n/2) + 1, the lower bound for c p'_j."""
    return n // 2 + 1


def enlarge_conditions(source: Sequence[int], primes: Sequence[int], c: Fraction) -> List[Condition]:
    """Re-derive every enlargement condition from the two tuples and c."""
    n = len(primes)
    low = gap_bounds(n)
    t = PrimeTuple(tuple(primes))
    total = t.reciprocal_sum
    conditions = [
        Condition("reciprocal-sum", total < 1, f"sum 1/p' = {total} < 1"),
        Condition("generic", ResidueProfile(t).generic, f"{t} has distinct boundaries and deg < N"),
    ]
    for j in range(n):
        gap = minimum_gap(primes, j)
        scaled = c * primes[j]
        conditions.extend([
            Condition(f"larger({j})", primes[j] > source[j], f"{primes[j]} > {source[j]}"),
            Condition(f"order({j})", order_preserved(source, primes, j),
                      f"boundary labels of dimension {j} keep their order"),
            Condition(f"lower({j})", low < scaled, f"{low} < {c} * {primes[j]} = {scaled}"),
            Condition(f"upper({j})", scaled < gap, f"{c} * {primes[j]} = {scaled} < d(S_{j}) = {gap}"),
        ])
    return conditions


def measured_height(t: PrimeTuple, config: PNConfig):
    """(height, witness) from a region scan, or (None, None) when the scan is over budget."""
    profile = ResidueProfile(t)
    if not profile.deg_lt_N or profile.region_count > config.engine.max_scan_regions:
        return None, None
    model = RegionModel(t, profile=profile, max_scan_regions=config.engine.max_scan_regions,
                        threads=config.engine.threads)
    result = model.scan(config.engine.witness_scan_limit)
    return result.height, result.witness


def enlarge(t: PrimeTuple, config: Optional[PNConfig] = None) -> EnlargeResult:
    """Lift every prime so that floor(n/2) + 1 < c p'_j < d(S_j(N')) for one c < 1."""
    config = config or PNConfig()
    require_liftable(t)
    budget = config.construction.ap_budget
    seed = config.arithmetic.witness_seed + config.construction.seed
    search = dict(budget=budget, error_bits=config.arithmetic.primality_error_bits, seed=seed)
    source = list(t.primes)
    trace: List[TraceStep] = []

    logger.push_context({"kind": "enlarged", "dimension": t.n})
    try:
        primes = list(source)
        for j in range(t.n):
            primes, step = lift_prime(
                primes, j, primes[j] + 1,
                lambda lifted, j=j: order_preserved(source, lifted, j)
                and minimum_gap(lifted, j) >= PHASE_ONE_GAP,
                "gap", **search,
            )
            trace.append(step)

        c = Fraction(1, max(primes) + 1)
        low = gap_bounds(t.n)
        start = int(low / c) + 1
        for j in range(t.n):
            primes, step = lift_prime(
                primes, j, max(start, primes[j]),
                lambda lifted, j=j: order_preserved(source, lifted, j)
                and c * lifted[j] < minimum_gap(lifted, j),
                "scale", **search,
            )
            trace.append(step)
        logger.info("Enlarged tuple", source=source, primes=primes, c=c)
    finally:
        logger.pop_context()

    enlarged = PrimeTuple(tuple(primes))
    height, witness = measured_height(enlarged, config)
    certificate = Certificate(
        kind="enlarged",
        primes=enlarged.primes,
        conditions=enlarge_conditions(source, primes, c),
        height=height,
        witness=witness,
        trace=trace,
        budget=budget,
        seed=config.construction.seed,
        source_primes=tuple(source),
        scale=c,
    )
    return EnlargeResult(enlarged, c, certificate)
