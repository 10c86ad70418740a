"""Orientation sets: for every pair of dimensions, one chosen direction."""

import random
from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterator, Tuple

from ..core_utils.validator import ValidationError, validator


@dataclass(frozen=True)
class OrientationSet:
    n: int
    pairs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        validator.validate_orientation(self.pairs, self.n)

    @classmethod
    def descending(cls, n: int) -> "OrientationSet":
        """{(i, j) : i > j}, the default."""
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i)))

    @classmethod
    def ascending(cls, n: int) -> "OrientationSet":
        return cls(n, frozenset((j, i) for i in range(n) for j in range(i)))

    @classmethod
    def named(cls, name: str, n: int) -> "OrientationSet":
        if name == "descending":
            return cls.descending(n)
        if name == "ascending":
            return cls.ascending(n)
        raise ValidationError(f"Unknown orientation '{name}'")

    @classmethod
    def from_choices(cls, n: int, choices) -> "OrientationSet":
        """Build from one boolean per pair i < j; True keeps (i, j)."""
        pairs = [(i, j) if keep else (j, i) for (i, j), keep in zip(combinations(range(n), 2), choices)]
        return cls(n, frozenset(pairs))

    @classmethod
    def all_sets(cls, n: int) -> Iterator["OrientationSet"]:
        """All 2^{C(n,2)} orientation sets."""
        count = n * (n - 1) // 2
        for choices in product((False, True), repeat=count):
            yield cls.from_choices(n, choices)

    @classmethod
    def sample(cls, n: int, rng: random.Random) -> "OrientationSet":
        count = n * (n - 1) // 2
        return cls.from_choices(n, [rng.random() < 0.5 for _ in range(count)])

    def contains(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs

    def reversed(self) -> "OrientationSet":
        return OrientationSet(self.n, frozenset((j, i) for i, j in self.pairs))
