"""Residue profiles: the boundary residues that cut each dimension into regions.

For dimension j the boundaries are mo(sum_{i in T} p_i^{-1}, p_j) over all
T of the other dimensions. Intervals between consecutive distinct boundaries
(the cuts) are closed below and open above; the last one ends at p_j. On a
generic tuple every dimension has 2^{n-1} cuts. Tied boundaries merge
intervals, and the closed form stays constant on the merged ones because
its factors only change value at boundary residues.
"""

from bisect import bisect_right
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..arithmetic.prime_tuple import PrimeTuple
from ..arithmetic.residues import inverse, maclaurin_condition
from ..core_utils.validator import UnsupportedError
from ..oracle.expansion import degree_pn

Label = FrozenSet[int]


def subsets(items: Sequence[int]) -> List[Tuple[int, ...]]:
    """All subsets in order of size, then lexicographically."""
    return [c for size in range(len(items) + 1) for c in combinations(items, size)]


def boundary_labels(primes: Sequence[int], j: int) -> Dict[Label, int]:
    """Map each subset T of the other dimensions to mo(sum_{i in T} p_i^{-1}, p_j).

    Works on plain sequences so sub-tuples of any length (even a single
    prime) can be profiled.
    """
    pj = primes[j]
    others = [i for i in range(len(primes)) if i != j]
    steps = {i: inverse(primes[i], pj) for i in others}
    return {frozenset(T): sum(steps[i] for i in T) % pj for T in subsets(others)}


def minimum_gap(primes: Sequence[int], j: int) -> int:
    """d(S_j): the smallest difference between sorted elements of S_j and p_j.

    Repeated residues give 0.
    """
    values = sorted(boundary_labels(primes, j).values()) + [primes[j]]
    return min(b - a for a, b in zip(values, values[1:]))


def label_order(primes: Sequence[int], j: int) -> List[Tuple[int, ...]]:
    """Subset labels of dimension j sorted by residue (ties broken by the label)."""
    labels = boundary_labels(primes, j)
    return [tuple(sorted(T)) for T in sorted(labels, key=lambda T: (labels[T], sorted(T)))]


@dataclass(frozen=True)
class Region:
    """Per-dimension interval indices with the labels of their end points.

    ``upper_labels[j]`` is None when the interval ends at p_j.
    """

    indices: Tuple[int, ...]
    lower_labels: Tuple[Label, ...]
    upper_labels: Tuple[Optional[Label], ...]

    def name(self) -> str:
        return "".join(str(x) for x in self.indices) if max(self.indices, default=0) < 10 \
            else ",".join(str(x) for x in self.indices)


@dataclass
class DimensionProfile:
    prime: int
    labels: Dict[Label, int]
    boundaries: List[int]
    sorted_labels: List[Label]
    gap: int
    cuts: List[int]


class ResidueProfile:
    """Boundary sets, gaps and genericity of a prime tuple."""

    def __init__(self, t: PrimeTuple):
        self.t = t
        self.dimensions: List[DimensionProfile] = []
        distinct = True
        for j, pj in enumerate(t.primes):
            labels = boundary_labels(t.primes, j)
            ordered = sorted(labels, key=lambda T: (labels[T], sorted(T)))
            boundaries = [labels[T] for T in ordered]
            distinct = distinct and len(set(boundaries)) == len(boundaries)
            self.dimensions.append(DimensionProfile(
                prime=pj,
                labels=labels,
                boundaries=boundaries,
                sorted_labels=ordered,
                gap=minimum_gap(t.primes, j),
                cuts=sorted(set(boundaries)),
            ))

        self.degree = degree_pn(t)
        self.deg_lt_N = self.degree < t.N
        self.maclaurin = maclaurin_condition(t.primes)
        self.distinct = distinct
        self.generic = self.deg_lt_N and distinct

    @property
    def n(self) -> int:
        return self.t.n

    @property
    def shape(self) -> Tuple[int, ...]:
        """Intervals per dimension; (2^{n-1}, ..., 2^{n-1}) when generic."""
        return tuple(len(d.cuts) for d in self.dimensions)

    @property
    def region_count(self) -> int:
        return prod(self.shape)

    def boundaries(self, j: int) -> List[int]:
        return self.dimensions[j].boundaries

    def cuts(self, j: int) -> List[int]:
        return self.dimensions[j].cuts

    def gaps(self) -> List[int]:
        return [d.gap for d in self.dimensions]

    def require_generic(self):
        if not self.generic:
            reason = "deg P_N >= N" if not self.deg_lt_N else "repeated boundary residues"
            raise UnsupportedError(
                f"{self.t} is not generic ({reason}); use the pointwise closed form instead"
            )

    def require_deg_lt_N(self):
        if not self.deg_lt_N:
            raise UnsupportedError(
                f"deg P_N >= N for {self.t}, so region values describe P_N mod 1 - x^N only; "
                "use the pointwise closed form instead"
            )

    def region_indices(self, residues: Sequence[int]) -> Tuple[int, ...]:
        """Interval index of each coordinate of h."""
        return tuple(bisect_right(d.cuts, h) - 1 for d, h in zip(self.dimensions, residues))

    def region_of(self, k: int) -> Tuple[int, ...]:
        self.require_deg_lt_N()
        return self.region_indices(self.t.residues(k))

    def region(self, indices: Sequence[int]) -> Region:
        """Labelled region; labels are only unambiguous on a generic tuple."""
        self.require_generic()
        lower, upper = [], []
        for d, x in zip(self.dimensions, indices):
            lower.append(d.sorted_labels[x])
            upper.append(d.sorted_labels[x + 1] if x + 1 < len(d.sorted_labels) else None)
        return Region(tuple(indices), tuple(lower), tuple(upper))

    def representative(self, indices: Sequence[int]) -> int:
        """Exponent at the lower corner of a region."""
        self.require_deg_lt_N()
        corner = [d.cuts[x] for d, x in zip(self.dimensions, indices)]
        return self.t.exponent_from_residues(corner)

    def to_dict(self) -> Dict:
        return {
            "primes": self.t.to_strings(),
            "generic": self.generic,
            "deg_lt_N": self.deg_lt_N,
            "maclaurin": self.maclaurin,
            "dimensions": [
                {
                    "prime": str(d.prime),
                    "boundaries": [str(b) for b in d.boundaries],
                    "cuts": [str(b) for b in d.cuts],
                    "labels": [sorted(T) for T in d.sorted_labels],
                    "gap": str(d.gap),
                }
                for d in self.dimensions
            ],
        }


def residue_profile(t: PrimeTuple) -> ResidueProfile:
    return ResidueProfile(t)
