"""Finite metric models."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from ..analyzers.exactnum import RatLike, format_rat, to_rat
from ..errors import MetricParseError

Pair = Tuple[int, int]


def pairs(n: int) -> List[Pair]:
    """Unordered pairs of [n] in lexicographic order (1,2),(1,3),...,(n-1,n)."""
    return list(combinations(range(1, n + 1), 2))


def pair_index(n: int, i: int, j: int) -> int:
    """Position of the pair {i, j} in the lexicographic pair order."""
    if i == j:
        raise ValueError("a pair needs two distinct points")
    if i > j:
        i, j = j, i
    # pairs starting with 1..i-1 come first
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


class MetricClass(Enum):
    """Validity class of a symmetric function with zero diagonal."""

    NOT_PSEUDOMETRIC = "NOT_PSEUDOMETRIC"
    PSEUDOMETRIC = "PSEUDOMETRIC"
    METRIC = "METRIC"
    STRICT = "STRICT"


@dataclass(frozen=True)
class Metric:
    """
    Symmetric function on [n] with zero diagonal.

    Values are stored upper-triangular in lexicographic pair order. The same
    type also carries residuals of split decompositions, so construction does
    not reject negative values; validity is decided by ``validate``.
    """

    n: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        expected = self.n * (self.n - 1) // 2
        if self.n < 1:
            raise MetricParseError("a metric needs at least one point")
        if len(self.values) != expected:
            raise MetricParseError(
                f"a metric on {self.n} points needs {expected} values, got {len(self.values)}"
            )

    @classmethod
    def from_values(cls, n: int, values: Iterable[RatLike]) -> 'Metric':
        """Create a Metric from upper-triangular values in lexicographic order."""
        try:
            rats = tuple(to_rat(v) for v in values)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise MetricParseError(f"bad distance value: {e}") from e
        return cls(n=n, values=rats)

    @classmethod
    def from_row(cls, values: Sequence[RatLike]) -> 'Metric':
        """Create a Metric from a bare value row, inferring n from its length."""
        count = len(values)
        n = 1
        while n * (n - 1) // 2 < count:
            n += 1
        if n * (n - 1) // 2 != count:
            raise MetricParseError(f"{count} values do not fill an upper triangle")
        return cls.from_values(n, values)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[RatLike]]) -> 'Metric':
        """Create a Metric from a full symmetric matrix."""
        n = len(rows)
        try:
            matrix = [[to_rat(x) for x in row] for row in rows]
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise MetricParseError(f"bad matrix entry: {e}") from e
        if any(len(row) != n for row in matrix):
            raise MetricParseError("distance matrix must be square")
        for i in range(n):
            if matrix[i][i] != 0:
                raise MetricParseError(f"diagonal entry ({i + 1},{i + 1}) must be 0")
            for j in range(i + 1, n):
                if matrix[i][j] != matrix[j][i]:
                    raise MetricParseError(f"matrix is not symmetric at ({i + 1},{j + 1})")
        return cls(n=n, values=tuple(matrix[i - 1][j - 1] for i, j in pairs(n)))

    @classmethod
    def from_dict(cls, data: dict) -> 'Metric':
        """Create a Metric from its JSON form {"n": int, "d": [...]}."""
        if not isinstance(data, dict) or 'n' not in data or 'd' not in data:
            raise MetricParseError('metric JSON needs keys "n" and "d"')
        n = data['n']
        if not isinstance(n, int) or isinstance(n, bool):
            raise MetricParseError('"n" must be an integer')
        return cls.from_values(n, data['d'])

    @classmethod
    def constant(cls, n: int, value: RatLike = 1) -> 'Metric':
        return cls.from_values(n, [value] * (n * (n - 1) // 2))

    def __getitem__(self, pair: Pair) -> Fraction:
        i, j = pair
        if i == j:
            return Fraction(0)
        return self.values[pair_index(self.n, i, j)]

    def to_dict(self) -> Dict[str, object]:
        return {'n': self.n, 'd': [format_rat(v) for v in self.values]}

    def matrix(self) -> List[List[Fraction]]:
        return [[self[i, j] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def items(self) -> Iterable[Tuple[Pair, Fraction]]:
        return zip(pairs(self.n), self.values)

    def __add__(self, other: 'Metric') -> 'Metric':
        self._check_same_size(other)
        return Metric(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: 'Metric') -> 'Metric':
        self._check_same_size(other)
        return Metric(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def scaled(self, factor: RatLike) -> 'Metric':
        c = to_rat(factor)
        return Metric(self.n, tuple(c * v for v in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def _check_same_size(self, other: 'Metric'):
        if self.n != other.n:
            raise ValueError(f"metrics on {self.n} and {other.n} points cannot be combined")


@dataclass(frozen=True)
class Split:
    """Bipartition A|B of [n], stored by the part containing 1."""

    n: int
    part_a: FrozenSet[int]

    def __post_init__(self):
        if 1 not in self.part_a:
            raise ValueError("part_a must contain point 1")
        if not self.part_a <= frozenset(range(1, self.n + 1)):
            raise ValueError(f"part_a must be a subset of [{self.n}]")
        if len(self.part_a) == self.n:
            raise ValueError("part_a must be a proper subset")

    @classmethod
    def of(cls, n: int, part: Iterable[int]) -> 'Split':
        """Canonical split for either side of the bipartition."""
        side = frozenset(part)
        if 1 not in side:
            side = frozenset(range(1, n + 1)) - side
        return cls(n=n, part_a=side)

    @property
    def part_b(self) -> FrozenSet[int]:
        return frozenset(range(1, self.n + 1)) - self.part_a

    def separates(self, i: int, j: int) -> bool:
        return (i in self.part_a) != (j in self.part_a)

    def label(self) -> str:
        a = "".join(str(x) for x in sorted(self.part_a))
        b = "".join(str(x) for x in sorted(self.part_b))
        return f"{a}|{b}"
