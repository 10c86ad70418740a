"""Region model and region-scan heights.

When deg P_N < N the coefficient a(k) depends only on which region h(k)
falls in, so the whole polynomial is summarised by one value per region:
2^{n(n-1)} of them on a generic tuple, fewer when boundaries tie.
They are computed at once with numpy: term i of the closed form factors
over the dimensions j != i, so each (i, A) contributes an outer product of
per-dimension vectors indexed by interval position.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from ..arithmetic.prime_tuple import PrimeTuple
from ..core_utils.config_manager import EngineConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import BudgetExceededError
from .orientation import OrientationSet
from .pointwise import closed_form_value, factor, pair_sets
from .profile import Region, ResidueProfile

logger = Logger(__name__)

WITNESS_CHUNK = 1 << 16
NUMPY_RESIDUE_LIMIT = 1 << 31


class ScanResult(NamedTuple):
    height: int
    witness: int
    regions: int


class RegionModel:
    """Cached region values of one tuple with deg P_N < N."""

    def __init__(self, t: PrimeTuple, orientation: Optional[OrientationSet] = None,
                 profile: Optional[ResidueProfile] = None,
                 max_scan_regions: int = EngineConfig.max_scan_regions,
                 threads: int = EngineConfig.threads):
        self.t = t
        self.profile = profile or ResidueProfile(t)
        self.profile.require_deg_lt_N()
        self.orientation = orientation or OrientationSet.descending(t.n)
        self.max_scan_regions = max_scan_regions
        self.threads = max(1, threads)
        self._values: Dict[Tuple[int, ...], int] = {}
        self._terms: Optional[List[np.ndarray]] = None
        self._tensor: Optional[np.ndarray] = None

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.profile.shape

    def region(self, indices) -> Region:
        return self.profile.region(indices)

    def region_of(self, k: int) -> Tuple[int, ...]:
        return self.profile.region_of(k)

    def representative(self, indices) -> int:
        return self.profile.representative(indices)

    def value(self, indices) -> int:
        """Coefficient on a region, from the full tensor when it exists."""
        indices = tuple(indices)
        if self._tensor is not None:
            return int(self._tensor[indices])
        if indices not in self._values:
            corner = [d.cuts[x] for d, x in zip(self.profile.dimensions, indices)]
            self._values[indices] = closed_form_value(self.t, corner, self.orientation)
        return self._values[indices]

    def lookup(self, k: int) -> int:
        return self.value(self.region_of(k))

    def _term_tensor(self, i: int) -> np.ndarray:
        t, n, shape = self.t, self.t.n, self.profile.shape
        others = [j for j in range(n) if j != i]
        vectors: Dict[Tuple[int, Tuple[int, ...]], np.ndarray] = {}

        def vector(j: int, partners: Tuple[int, ...]) -> np.ndarray:
            key = (j, partners)
            if key not in vectors:
                shift = sum(t.unit_shift(jp, j) for jp in partners)
                values = [factor(t, self.orientation, i, j, (b - shift) % t[j])
                          for b in self.profile.cuts(j)]
                axis = [1] * n
                axis[j] = shape[j]
                vectors[key] = np.array(values, dtype=np.int64).reshape(axis)
            return vectors[key]

        total = np.zeros([1 if d == i else shape[d] for d in range(n)], dtype=np.int64)
        for A in pair_sets(t, i):
            partners: Dict[int, List[int]] = {j: [] for j in others}
            for a, b in A:
                partners[a].append(b)
                partners[b].append(a)
            term = np.ones([1] * n, dtype=np.int64)
            for j in others:
                term = term * vector(j, tuple(sorted(partners[j])))
            if len(A) % 2:
                total -= term
            else:
                total += term
        return total

    def term_tensors(self) -> List[np.ndarray]:
        """Contribution of each closed-form term; term i is constant along axis i."""
        if self._terms is None:
            count = self.profile.region_count
            if count > self.max_scan_regions:
                raise BudgetExceededError(
                    f"Region scan of {self.t} covers {count} regions, budget is {self.max_scan_regions}",
                    required=count,
                    limit=self.max_scan_regions,
                )
            logger.info("Scanning regions", primes=self.t.primes, regions=count, threads=self.threads)
            if self.threads > 1:
                with ThreadPoolExecutor(max_workers=self.threads) as pool:
                    self._terms = list(pool.map(self._term_tensor, range(self.t.n)))
            else:
                self._terms = [self._term_tensor(i) for i in range(self.t.n)]
        return self._terms

    def tensor(self) -> np.ndarray:
        """Coefficient on every region, indexed by interval positions."""
        if self._tensor is None:
            tensor = np.zeros(self.shape, dtype=np.int64)
            for term in self.term_tensors():
                tensor = tensor + term
            self._tensor = tensor
        return self._tensor

    def height(self) -> int:
        return int(np.abs(self.tensor()).max())

    def maximal_regions(self) -> List[Tuple[int, ...]]:
        """Regions where |coefficient| equals the height, in lexicographic order."""
        tensor = self.tensor()
        hits = np.argwhere(np.abs(tensor) == np.abs(tensor).max())
        return [tuple(int(x) for x in row) for row in hits]

    def table(self) -> Dict[Tuple[int, ...], int]:
        tensor = self.tensor()
        return {tuple(int(x) for x in idx): int(tensor[idx]) for idx in np.ndindex(tensor.shape)}

    def first_exponent_with(self, target: int, limit: int) -> Optional[int]:
        """Smallest k < min(N, limit) whose region has |coefficient| = target."""
        tensor = self.tensor()
        stop = min(self.t.N, limit)
        if max(self.t.primes) < NUMPY_RESIDUE_LIMIT:
            boundaries = [np.array(d.cuts, dtype=np.int64) for d in self.profile.dimensions]
            for start in range(0, stop, WITNESS_CHUNK):
                ks = np.arange(start, min(start + WITNESS_CHUNK, stop), dtype=np.int64)
                index = []
                for bounds, p, inv in zip(boundaries, self.t.primes, self.t.cofactor_inverses):
                    h = (ks % p) * inv % p
                    index.append(np.searchsorted(bounds, h, side="right") - 1)
                hits = np.flatnonzero(np.abs(tensor[tuple(index)]) == target)
                if hits.size:
                    return start + int(hits[0])
            return None

        for k in range(stop):
            if abs(int(tensor[self.profile.region_indices(self.t.residues(k))])) == target:
                return k
        return None

    def scan(self, witness_scan_limit: int = EngineConfig.witness_scan_limit) -> ScanResult:
        height = self.height()
        witness = self.first_exponent_with(height, witness_scan_limit)
        if witness is None:
            witness = min(self.representative(r) for r in self.maximal_regions())
            logger.info("Witness scan limit reached; using smallest maximal representative",
                        limit=witness_scan_limit, witness=witness)
        return ScanResult(height=height, witness=witness, regions=self.profile.region_count)


def coeff_region_lookup(t: PrimeTuple, k: int, model: Optional[RegionModel] = None) -> int:
    """Coefficient of x^k read off its region (needs deg P_N < N)."""
    model = model or RegionModel(t)
    return model.lookup(k)


def region_representative(t: PrimeTuple, indices, profile: Optional[ResidueProfile] = None) -> int:
    return (profile or ResidueProfile(t)).representative(indices)


def region_scan_height(t: PrimeTuple, orientation: Optional[OrientationSet] = None,
                       max_scan_regions: int = EngineConfig.max_scan_regions,
                       threads: int = EngineConfig.threads,
                       witness_scan_limit: int = EngineConfig.witness_scan_limit) -> ScanResult:
    """Height of P_N from its region values, with the smallest witness exponent."""
    model = RegionModel(t, orientation, max_scan_regions=max_scan_regions, threads=threads)
    return model.scan(witness_scan_limit)


def projection_contributions(t: PrimeTuple, orientation: Optional[OrientationSet] = None) -> List[np.ndarray]:
    """For n = 3, the contribution of each term over the two remaining axes (4x4 when generic)."""
    model = RegionModel(t, orientation)
    return [np.squeeze(term, axis=i) for i, term in enumerate(model.term_tensors())]
