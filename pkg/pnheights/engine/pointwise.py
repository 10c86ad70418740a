"""Pointwise closed form for coefficients of P_N reduced modulo 1 - x^N.

a(k) = sum_i sum_{A} (-1)^{|A|} f_i(k - N_A), where A runs over sets of
pairs of dimensions other than i, N_A is the sum of their N_{jj'}, and

    f_i(k) = prod_{(i,j) in S} [h_j(k) < u_ij] * prod_{(j,i) in S} -[h_j(k) >= u_ij]

with h_j(k) = mo(k N_j^{-1}, p_j) and u_ij = mo(p_i^{-1}, p_j). Subtracting
N_{jj'} from k moves h_j down by u_{j'j} and leaves every other coordinate
alone, so the work never touches integers of the size of N.
"""

from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..arithmetic.prime_tuple import PrimeTuple
from ..core_utils.validator import ValidationError, validator
from .orientation import OrientationSet
from .profile import ResidueProfile, subsets


def pair_sets(t: PrimeTuple, i: int) -> List[Tuple[Tuple[int, int], ...]]:
    """All sets A of unordered pairs of dimensions different from i."""
    others = [j for j in range(t.n) if j != i]
    return subsets(list(combinations(others, 2)))


def shifts(t: PrimeTuple, pairs: Sequence[Tuple[int, int]]) -> List[int]:
    """Per-dimension decrease of h caused by subtracting N_A."""
    shift = [0] * t.n
    for a, b in pairs:
        shift[a] += t.unit_shift(b, a)
        shift[b] += t.unit_shift(a, b)
    return shift


def factor(t: PrimeTuple, S: OrientationSet, i: int, j: int, h: int) -> int:
    """The j-th factor of f_i at residue h."""
    u = t.unit_shift(i, j)
    if S.contains(i, j):
        return int(h < u)
    return -int(h >= u)


def term_value(t: PrimeTuple, residues: Sequence[int], S: OrientationSet, i: int) -> int:
    """sum_A (-1)^{|A|} f_i(k - N_A) for the k with h(k) = residues."""
    total = 0
    for A in pair_sets(t, i):
        shift = shifts(t, A)
        value = 1
        for j in range(t.n):
            if j == i:
                continue
            value *= factor(t, S, i, j, (residues[j] - shift[j]) % t[j])
            if not value:
                break
        total += -value if len(A) % 2 else value
    return total


def closed_form_value(t: PrimeTuple, residues: Sequence[int], S: Optional[OrientationSet] = None) -> int:
    """Evaluate the closed form at a residue vector h."""
    S = S or OrientationSet.descending(t.n)
    return sum(term_value(t, residues, S, i) for i in range(t.n))


def coeff_at(t: PrimeTuple, k: int, S: Optional[OrientationSet] = None) -> int:
    """Coefficient of x^k in P_N mod (1 - x^N) for 0 <= k < N.

    Equals the coefficient of P_N itself whenever deg P_N < N.
    """
    validator.validate_exponent(k, t.N)
    return closed_form_value(t, t.residues(k), S)


def zero_by_prop(t: PrimeTuple, k: int, i: int, profile: Optional[ResidueProfile] = None) -> bool:
    """True when h_i(k) misses every boundary of dimension i, which forces a(k) = 0.

    Needs deg P_N < N and 0 < k < N_i.
    """
    validator.validate_dimension(i, t.n)
    profile = profile or ResidueProfile(t)
    if not profile.deg_lt_N:
        raise ValidationError(f"Vanishing test needs deg P_N < N, which fails for {t}")
    if not 0 < k < t.cofactor(i):
        raise ValidationError(f"Vanishing test needs 0 < k < N_{i} = {t.cofactor(i)}, got {k}")
    return t.residues(k)[i] not in profile.dimensions[i].labels.values()
