"""Three primes: the four ordering cases and their 64-region coefficient tables."""

from itertools import permutations
from typing import Dict, List, NamedTuple, Tuple

from ..arithmetic.prime_tuple import PrimeTuple
from ..arithmetic.residues import mo, mo_plus
from ..core_utils.logger import Logger
from ..core_utils.validator import ConsistencyError, UnsupportedError
from .profile import ResidueProfile

logger = Logger(__name__)

# Coefficient tables for the canonical order (p, q, r), with orientation
# {(q,p), (r,p), (r,q)}. Layout: TABLE[x_r][x_q][x_p].
CASE1_TABLE = (
    ((1, 1, 0, 0), (0, 0, 0, 0), (0, -1, -1, 0), (0, 0, 0, 0)),
    ((0, 0, 0, -1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, -1, 0, -1)),
    ((0, 0, -1, -1), (0, 0, 0, 0), (1, 0, 0, 1), (0, 0, 0, 0)),
    ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 1, 1)),
)

CASE2_TABLE = (
    ((1, 0, 0, 0), (0, 0, 0, 0), (0, 0, -1, 0), (0, 0, 0, 0)),
    ((0, 0, 0, -1), (0, 1, 1, 0), (0, 1, 0, 0), (-1, 0, 0, -1)),
    ((0, -1, -1, -1), (0, 0, 0, 0), (1, 1, 0, 1), (0, 0, 0, 0)),
    ((0, -1, 0, 0), (-1, -1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 1)),
)


class Classification(NamedTuple):
    """``case`` in 1..4; ``permutation[d]`` is the input index playing role d of (p, q, r)."""

    case: int
    permutation: Tuple[int, int, int]


def _chain(a: int, b: int, c: int, reverse: bool) -> bool:
    """a < b <= c, or a > b >= c when reversed."""
    return a > b >= c if reverse else a < b <= c


def _chain_up(a: int, b: int, c: int, reverse: bool) -> bool:
    """a <= b < c, or a >= b > c when reversed."""
    return a >= b > c if reverse else a <= b < c


def case_holds(p: int, q: int, r: int, case: int) -> bool:
    """Whether (p, q, r) in this order satisfies the inequality chain of a case."""
    reverse = case in (3, 4)

    def inv(x: int, m: int) -> int:
        return mo(1, x, m)

    def pair(x: int, y: int, m: int) -> int:
        return mo_plus(x + y, x * y, m)

    r_line = _chain(pair(p, q, r), inv(p, r), inv(q, r), reverse)
    q_line = _chain_up(inv(r, q), inv(p, q), pair(p, r, q), reverse)
    if case in (1, 3):
        p_line = _chain_up(inv(q, p), inv(r, p), pair(q, r, p), reverse)
    else:
        p_line = _chain_up(inv(r, p), inv(q, p), pair(q, r, p), reverse)
    return r_line and q_line and p_line


def classify_pqr(p: int, q: int, r: int) -> Classification:
    """Find the case and the ordering of (p, q, r) under which its chain holds."""
    t = PrimeTuple((p, q, r))
    if not ResidueProfile(t).generic:
        raise UnsupportedError(f"{t} has tied boundary residues; only generic triples are classified")

    matches: List[Classification] = []
    for perm in permutations(range(3)):
        a, b, c = (t[d] for d in perm)
        for case in (1, 2, 3, 4):
            if case_holds(a, b, c, case):
                matches.append(Classification(case, perm))

    if len(matches) != 1:
        raise ConsistencyError(f"Triple {t} matched {len(matches)} cases: {matches}")
    logger.debug("Classified triple", primes=t.primes, case=matches[0].case,
                 permutation=list(matches[0].permutation))
    return matches[0]


def canonical_value(case: int, xp: int, xq: int, xr: int) -> int:
    """Table entry for canonical interval positions; cases 3 and 4 reverse every axis."""
    table = CASE1_TABLE if case in (1, 3) else CASE2_TABLE
    if case in (3, 4):
        xp, xq, xr = 3 - xp, 3 - xq, 3 - xr
    return table[xr][xq][xp]


def table_pqr(p: int, q: int, r: int) -> Dict[Tuple[int, int, int], int]:
    """All 64 region coefficients, keyed by interval positions in the input order."""
    case, perm = classify_pqr(p, q, r)
    table = {}
    for x0 in range(4):
        for x1 in range(4):
            for x2 in range(4):
                x = (x0, x1, x2)
                table[x] = canonical_value(case, x[perm[0]], x[perm[1]], x[perm[2]])
    return table


def balance_identity(p: int, q: int, r: int) -> bool:
    """pq(mo(p^-1,r)+mo(q^-1,r)) + pr(mo(p^-1,q)+mo(r^-1,q)) + qr(mo(q^-1,p)+mo(r^-1,p)) = 3pqr+p+q+r."""
    left = (
        p * q * (mo(1, p, r) + mo(1, q, r))
        + p * r * (mo(1, p, q) + mo(1, r, q))
        + q * r * (mo(1, q, p) + mo(1, r, p))
    )
    return left == 3 * p * q * r + p + q + r
