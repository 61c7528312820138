"""Models for the Wasserstein arrangement: cycle hyperplanes, sign vectors, flats."""
import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Tuple

from .metric import Metric, pair_index

Permutation = Tuple[int, ...]

_SIGN_CHARS = {-1: "-", 0: "0", 1: "+"}


def cycle_normal(n: int, a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    """Integer normal: +1 on {a_i, b_i}, -1 on {a_i, b_(i+1)}."""
    normal = [0] * (n * (n - 1) // 2)
    k = len(a)
    for i in range(k):
        normal[pair_index(n, a[i], b[i])] += 1
        normal[pair_index(n, a[i], b[(i + 1) % k])] -= 1
    return tuple(normal)


@dataclass(frozen=True)
class CycleHyperplane:
    """
    Hyperplane H_{a,b}: sum x_{a_i b_i} = sum x_{a_i b_(i+1)}.

    The positive side is sum x_{a_i b_i} <= sum x_{a_i b_(i+1)}.
    """

    n: int
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    normal: Tuple[int, ...]

    @classmethod
    def from_tuples(cls, n: int, a: Tuple[int, ...], b: Tuple[int, ...]) -> 'CycleHyperplane':
        return cls(n=n, a=tuple(a), b=tuple(b), normal=cycle_normal(n, tuple(a), tuple(b)))

    @property
    def k(self) -> int:
        return len(self.a)

    def cycle(self) -> Tuple[int, ...]:
        """Vertex sequence a1, b1, a_k, b_k, ..., a2, b2."""
        sequence = [self.a[0], self.b[0]]
        for i in range(self.k - 1, 0, -1):
            sequence.extend((self.a[i], self.b[i]))
        return tuple(sequence)

    def positive_edges(self) -> List[Tuple[int, int]]:
        return [(self.a[i], self.b[i]) for i in range(self.k)]

    def negative_edges(self) -> List[Tuple[int, int]]:
        return [(self.a[i], self.b[(i + 1) % self.k]) for i in range(self.k)]

    def support(self) -> FrozenSet[int]:
        """Pair indices of the cycle's edges."""
        return frozenset(i for i, c in enumerate(self.normal) if c != 0)

    def evaluate(self, m: Metric) -> Fraction:
        """sum x_{a_i b_(i+1)} - sum x_{a_i b_i}; positive strictly inside H+."""
        return sum((m[e] for e in self.negative_edges()), Fraction(0)) - sum(
            (m[e] for e in self.positive_edges()), Fraction(0)
        )

    def side(self, m: Metric) -> int:
        value = self.evaluate(m)
        return (value > 0) - (value < 0)

    def label(self) -> str:
        a = ",".join(str(x) for x in self.a)
        b = ",".join(str(x) for x in self.b)
        return f"H(({a}),({b}))"

    def to_dict(self) -> Dict[str, object]:
        return {'k': self.k, 'a': list(self.a), 'b': list(self.b), 'normal': list(self.normal)}


@dataclass(frozen=True)
class SignVector:
    """Signs of a metric against every canonical hyperplane, in canonical order."""

    n: int
    entries: Tuple[int, ...]

    @classmethod
    def from_string(cls, n: int, text: str) -> 'SignVector':
        lookup = {v: k for k, v in _SIGN_CHARS.items()}
        return cls(n=n, entries=tuple(lookup[c] for c in text))

    def __str__(self) -> str:
        return "".join(_SIGN_CHARS[e] for e in self.entries)

    @property
    def digest(self) -> str:
        return hashlib.sha1(f"{self.n}:{self}".encode()).hexdigest()[:16]

    def is_chamber(self) -> bool:
        return all(self.entries)

    def zeros(self) -> FrozenSet[int]:
        return frozenset(i for i, e in enumerate(self.entries) if e == 0)


@dataclass(frozen=True)
class Flat:
    """Intersection of the hyperplanes it contains."""

    hyperplanes: FrozenSet[int]
    rank: int
    mobius: int


@dataclass(frozen=True)
class IntersectionPoset:
    """Flats of an arrangement with Mobius values from the bottom flat."""

    n: int
    ambient_dim: int
    flats: Tuple[Flat, ...]

    def coefficients(self) -> Tuple[int, ...]:
        """Characteristic polynomial coefficients from t^ambient_dim down to t^0."""
        by_rank = [0] * (self.ambient_dim + 1)
        for flat in self.flats:
            by_rank[flat.rank] += flat.mobius
        return tuple(by_rank)

    def rows(self) -> List[Dict[str, object]]:
        return [
            {'rank': f.rank, 'mobius': f.mobius, 'hyperplanes': sorted(f.hyperplanes)}
            for f in self.flats
        ]


@dataclass(frozen=True)
class Stabilizer:
    """Subgroup of S_n fixing a sign vector."""

    n: int
    elements: Tuple[Permutation, ...]
    generators: Tuple[Permutation, ...]
    cycle_notation: Tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.elements)
