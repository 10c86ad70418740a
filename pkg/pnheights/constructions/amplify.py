"""Height amplification: add one prime q and find an exponent whose coefficient
is a central binomial coefficient times the largest coefficient of P_N'.

After enlarging, q is chosen with q^{-1} = floor(c p'_j) (mod p'_j), so
subtracting N'_T from an exponent moves its residues by less than one
region in every direction. A maximal region then holds all 2^n exponents
mo(q^{-1}(kbar - N'_T), N'), and the truncated lifting formula at a suitable
k = kbar (mod N') sums exactly the terms with |T| > floor(n/2).
"""

from fractions import Fraction
from math import comb
from typing import Dict, List, NamedTuple, Optional, Tuple

from ..arithmetic.prime_tuple import PrimeTuple
from ..arithmetic.primality import next_prime_in_ap
from ..arithmetic.residues import crt, inverse, mo
from ..core_utils.config_manager import PNConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import BudgetExceededError, ConstructionError, ValidationError
from ..engine.profile import subsets
from ..engine.regions import RegionModel
from ..recursion.lifting import coeff_via_truncation
from ..recursion.providers import ClosedFormProvider
from .certificate import Certificate, Condition, TraceStep
from .enlarge import enlarge, enlarge_conditions, measured_height, require_liftable

logger = Logger(__name__)


class AmplifyResult(NamedTuple):
    t: PrimeTuple
    witness: int
    value: int
    certificate: Certificate


def central_factor(n: int) -> int:
    """C(n-1, floor((n-1)/2)), the gain of one amplification step on n primes."""
    return comb(n - 1, (n - 1) // 2)


def amplifying_prime(t: PrimeTuple, c, budget: int, error_bits: int, seed: int) -> int:
    """Smallest prime q > N' with q^{-1} = floor(c p'_j) (mod p'_j) for every j."""
    residue = crt((inverse(int(c * p), p), p) for p in t.primes)
    return next_prime_in_ap(residue, t.N, t.N + 1, budget, error_bits, seed)


def shifted_exponents(t: PrimeTuple, q: int, kbar: int) -> Dict[Tuple[int, ...], int]:
    """mo(q^{-1}(kbar - N'_T), N') for every subset T."""
    return {
        T: mo(kbar - sum(t.cofactor(j) for j in T), q, t.N)
        for T in subsets(list(range(t.n)))
    }


def sandwich_exponent(t: PrimeTuple, q: int, kbar: int,
                      exponents: Dict[Tuple[int, ...], int]) -> Optional[int]:
    """Smallest k = kbar (mod N') with q e_T <= k exactly for |T| > floor(n/2)."""
    s = t.n // 2
    low = max(q * e for T, e in exponents.items() if len(T) > s)
    high = min(q * e for T, e in exponents.items() if len(T) <= s)
    k = low + (kbar - low) % t.N
    return k if k < high else None


def amplify_conditions(source: Tuple[int, ...], primes: Tuple[int, ...], c,
                       witness: int, config: Optional[PNConfig] = None) -> Tuple[List[Condition], int, int]:
    """Conditions of an amplified tuple, with the re-derived base coefficient and witness value."""
    config = config or PNConfig()
    base = PrimeTuple(primes[:-1])
    q = primes[-1]
    conditions = [Condition(f"enlarged:{cond.name}", cond.holds, cond.instance)
                  for cond in enlarge_conditions(source, base.primes, c)]
    total = base.reciprocal_sum + Fraction(1, q)
    conditions.append(Condition("q>N'", q > base.N, f"{q} > {base.N}"))
    conditions.append(Condition("reciprocal-sum(q)", total < 1, f"sum 1/p' + 1/q = {total} < 1"))
    for j, p in enumerate(base.primes):
        target = int(c * p)
        conditions.append(Condition(
            f"inverse({j})", mo(1, q, p) == target, f"mo({q}^-1, {p}) = {mo(1, q, p)} = floor({c} * {p})",
        ))

    model = RegionModel(base, max_scan_regions=config.engine.max_scan_regions,
                        threads=config.engine.threads)
    M = int(model.tensor()[model.maximal_regions()[0]])
    value = coeff_via_truncation(q, base, witness, ClosedFormProvider(base))
    factor = central_factor(base.n)
    conditions.append(Condition(
        "witness", abs(value) >= factor * abs(M),
        f"|a({witness})| = {abs(value)} >= {factor} * {abs(M)}",
    ))
    return conditions, M, value


def amplify(t: PrimeTuple, config: Optional[PNConfig] = None) -> AmplifyResult:
    """Enlarge t, add the amplifying prime and exhibit the large coefficient."""
    config = config or PNConfig()
    require_liftable(t)
    enlarged, c, enlarged_cert = enlarge(t, config)
    budget = config.construction.ap_budget
    seed = config.arithmetic.witness_seed + config.construction.seed

    logger.push_context({"kind": "amplified", "dimension": t.n})
    try:
        q = amplifying_prime(enlarged, c, budget, config.arithmetic.primality_error_bits, seed)
        model = RegionModel(enlarged, max_scan_regions=config.engine.max_scan_regions,
                            threads=config.engine.threads)
        tensor = model.tensor()
        regions = model.maximal_regions()
        M = int(tensor[regions[0]])
        steps = [int(c * p) for p in enlarged.primes]
        logger.info("Amplifying", primes=enlarged.primes, q=q, height=abs(M), maximal_regions=len(regions))

        probes = config.construction.probe_budget
        failures = []
        for region in regions[:probes]:
            target = int(tensor[region])
            corner = [d.cuts[x] + w for d, x, w in zip(model.profile.dimensions, region, steps)]
            e_empty = enlarged.exponent_from_residues(corner)
            kbar = q * e_empty % enlarged.N
            exponents = shifted_exponents(enlarged, q, kbar)
            off = [T for T, e in exponents.items() if model.lookup(e) != target]
            if off:
                failures.append({"region": list(region), "off_target": [list(T) for T in off]})
                continue
            k = sandwich_exponent(enlarged, q, kbar, exponents)
            if k is None:
                failures.append({"region": list(region), "sandwich": False})
                continue
            break
        else:
            if len(regions) > probes:
                raise BudgetExceededError(
                    f"No amplifying exponent among the first {probes} maximal regions",
                    required=len(regions), limit=probes,
                )
            raise ConstructionError(
                f"No amplifying exponent found for {enlarged} with q = {q}",
                diagnostics={"primes": enlarged.to_strings(), "q": str(q), "M": str(M), "failures": failures},
            )
    finally:
        logger.pop_context()

    amplified = enlarged.with_prime(q)
    conditions, base_M, value = amplify_conditions(t.primes, amplified.primes, c, k, config)
    if not all(cond.holds for cond in conditions):
        raise ConstructionError(
            f"Amplified tuple {amplified} fails its own conditions",
            diagnostics={"failed": [cond.to_dict() for cond in conditions if not cond.holds]},
        )

    height, _ = measured_height(amplified, config)
    trace = enlarged_cert.trace + [TraceStep("append", t.n, 0, q, enlarged.N)]
    certificate = Certificate(
        kind="amplified",
        primes=amplified.primes,
        conditions=conditions,
        height=height,
        witness=k,
        trace=trace,
        budget=budget,
        seed=config.construction.seed,
        source_primes=t.primes,
        scale=c,
        base_coefficient=base_M,
        witness_value=value,
        factor=central_factor(t.n),
    )
    logger.info("Amplified tuple", primes=amplified.primes, witness=k, value=value)
    return AmplifyResult(amplified, k, value, certificate)


def amplify_chain(t: PrimeTuple, steps: int = 1, config: Optional[PNConfig] = None) -> List[AmplifyResult]:
    """Amplify repeatedly; each result starts from the previous tuple."""
    if steps < 1:
        raise ValidationError(f"Amplification needs at least one step, got {steps}")
    results = []
    for _ in range(steps):
        result = amplify(t, config)
        results.append(result)
        t = result.t
    return results
