"""PrimeTuple: an ordered tuple of distinct primes with cached products."""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import List, Sequence, Tuple

from ..core_utils.validator import ValidationError, validator
from .primality import is_probable_prime
from .residues import crt, inverse, reciprocal_sum


@dataclass(frozen=True)
class PrimeTuple:
    """Ordered distinct primes p_0..p_{n-1} (dimensions are 0-based).

    ``unit_shift(i, j)`` is mo(p_i^{-1}, p_j), the step that subtracting
    N_{ij} from an exponent causes in dimension j.
    """

    primes: Tuple[int, ...]

    def __post_init__(self):
        primes = tuple(self.primes)
        object.__setattr__(self, "primes", primes)
        validator.validate_primes(primes, is_probable_prime)

    @classmethod
    def parse(cls, text: str) -> "PrimeTuple":
        """Parse a comma separated list such as ``"5,11,23"``."""
        try:
            primes = tuple(int(part.strip(), 10) for part in text.split(",") if part.strip())
        except ValueError:
            raise ValidationError(f"Cannot parse primes from {text!r}")
        return cls(primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __getitem__(self, index):
        return self.primes[index]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.primes)

    @property
    def n(self) -> int:
        return len(self.primes)

    @cached_property
    def N(self) -> int:
        return prod(self.primes)

    @cached_property
    def cofactors(self) -> Tuple[int, ...]:
        """N_i = N / p_i."""
        return tuple(self.N // p for p in self.primes)

    def cofactor(self, i: int) -> int:
        return self.cofactors[i]

    def pair_cofactor(self, i: int, j: int) -> int:
        """N_{ij} = N / (p_i p_j)."""
        if i == j:
            raise ValidationError("Pair cofactor needs two distinct dimensions")
        return self.N // (self.primes[i] * self.primes[j])

    @cached_property
    def cofactor_inverses(self) -> Tuple[int, ...]:
        """N_j^{-1} mod p_j."""
        return tuple(inverse(c, p) for c, p in zip(self.cofactors, self.primes))

    @cached_property
    def unit_shifts(self) -> Tuple[Tuple[int, ...], ...]:
        """Matrix u[i][j] = mo(p_i^{-1}, p_j); the diagonal is 0."""
        return tuple(
            tuple(0 if i == j else inverse(pi, pj) for j, pj in enumerate(self.primes))
            for i, pi in enumerate(self.primes)
        )

    def unit_shift(self, i: int, j: int) -> int:
        return self.unit_shifts[i][j]

    def residues(self, k: int) -> Tuple[int, ...]:
        """h(k): the vector of mo(k N_j^{-1}, p_j)."""
        return tuple(k * inv % p for inv, p in zip(self.cofactor_inverses, self.primes))

    def exponent_from_residues(self, residues: Sequence[int]) -> int:
        """The k in [0, N) with h(k) equal to the given vector."""
        return crt((h * c % p, p) for h, c, p in zip(residues, self.cofactors, self.primes))

    @cached_property
    def reciprocal_sum(self) -> Fraction:
        return reciprocal_sum(self.primes)

    def without(self, i: int) -> "PrimeTuple":
        return PrimeTuple(self.primes[:i] + self.primes[i + 1:])

    def with_prime(self, p: int) -> "PrimeTuple":
        return PrimeTuple(self.primes + (p,))

    def replace(self, i: int, p: int) -> "PrimeTuple":
        primes: List[int] = list(self.primes)
        primes[i] = p
        return PrimeTuple(tuple(primes))

    def to_strings(self) -> List[str]:
        return [str(p) for p in self.primes]
