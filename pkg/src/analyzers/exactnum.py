"""Exact rational linear algebra.

Everything here works on ``fractions.Fraction`` or plain ``int`` values. Rank
and membership tests clear denominators first and run integer elimination,
keeping rows primitive so the numbers stay small.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, List, Optional, Sequence, Tuple, Union

Rat = Fraction
RatLike = Union[int, str, Fraction]
Vector = Tuple[Fraction, ...]


def to_rat(value: RatLike) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected: every value in this package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational values")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_rat(value: Fraction) -> str:
    """Canonical string form: "p" for integers, "p/q" otherwise."""
    return str(Fraction(value))


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def primitive(values: Sequence[int]) -> Tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = reduce(gcd, values, 0)
    if g <= 1:
        return tuple(values)
    return tuple(x // g for x in values)


def integer_row(values: Sequence[RatLike]) -> Tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector with the same direction."""
    rats = [to_rat(v) for v in values]
    denominator = lcm(*(r.denominator for r in rats)) if rats else 1
    return primitive([int(r * denominator) for r in rats])


def sign(value) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class RatMatrix:
    """Dense row-major rational matrix."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RatLike]], cols: Optional[int] = None) -> 'RatMatrix':
        """Build a matrix from a list of rows; ``cols`` is needed only when there are no rows."""
        width = len(rows[0]) if rows else (cols or 0)
        entries: List[Fraction] = []
        for row in rows:
            if len(row) != width:
                raise ValueError("all rows must have the same length")
            entries.extend(to_rat(x) for x in row)
        return cls(rows=len(rows), cols=width, entries=tuple(entries))

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> 'RatMatrix':
        entries = tuple(
            self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)
        )
        return RatMatrix(rows=self.cols, cols=self.rows, entries=entries)


class Echelon:
    """
    Incremental integer row-echelon basis.

    Rows are kept primitive and sorted by pivot column. Adding a row reduces it
    against the basis; a nonzero remainder becomes a new basis row.
    """

    def __init__(self, width: int):
        self.width = width
        self._rows: List[Tuple[int, List[int]]] = []  # (pivot column, row)

    def copy(self) -> 'Echelon':
        clone = Echelon(self.width)
        clone._rows = [(p, list(r)) for p, r in self._rows]
        return clone

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> List[int]:
        return [p for p, _ in self._rows]

    def reduce(self, values: Sequence[RatLike]) -> List[int]:
        """Return the remainder of a row after elimination against the basis."""
        row = list(integer_row(values)) if values else []
        for pivot, basis_row in self._rows:
            entry = row[pivot]
            if entry == 0:
                continue
            lead = basis_row[pivot]
            row = [lead * x - entry * y for x, y in zip(row, basis_row)]
            row = list(primitive(row))
        return row

    def contains(self, values: Sequence[RatLike]) -> bool:
        """True iff the row lies in the span of the basis."""
        return not any(self.reduce(values))

    def add(self, values: Sequence[RatLike]) -> bool:
        """Add a row; returns True iff it was independent of the basis."""
        row = self.reduce(values)
        pivot = next((j for j, x in enumerate(row) if x != 0), None)
        if pivot is None:
            return False
        if row[pivot] < 0:
            row = [-x for x in row]
        position = 0
        while position < len(self._rows) and self._rows[position][0] < pivot:
            position += 1
        self._rows.insert(position, (pivot, row))
        return True


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    basis = Echelon(m.cols)
    for row in m.row_list():
        basis.add(row)
    return basis.rank


def rows_rank(rows: Iterable[Sequence[RatLike]], width: int) -> int:
    basis = Echelon(width)
    for row in rows:
        basis.add(row)
    return basis.rank


def affine_rank(points: Sequence[Sequence[RatLike]]) -> int:
    """Dimension of the affine span of a point list (-1 for no points)."""
    if not points:
        return -1
    base = [to_rat(x) for x in points[0]]
    basis = Echelon(len(base))
    for point in points[1:]:
        basis.add([to_rat(x) - b for x, b in zip(point, base)])
    return basis.rank


def rref(m: RatMatrix) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over the rationals; returns nonzero rows and pivots."""
    rows = [list(r) for r in m.row_list()]
    pivots: List[int] = []
    lead = 0
    for col in range(m.cols):
        pivot_row = next((r for r in range(lead, len(rows)) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        scale = rows[lead][col]
        rows[lead] = [x / scale for x in rows[lead]]
        for r in range(len(rows)):
            if r != lead and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[lead])]
        pivots.append(col)
        lead += 1
        if lead == len(rows):
            break
    return rows[:lead], pivots


def nullspace(m: RatMatrix) -> List[Vector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis: List[Vector] = []
    for f in free:
        vector = [Fraction(0)] * m.cols
        vector[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vector[p] = -row[f]
        basis.append(tuple(vector))
    return basis


def solve(m: RatMatrix, rhs: Sequence[RatLike]) -> Optional[Vector]:
    """
    Solve m x = rhs exactly.

    Returns:
        One solution (free variables set to zero) or None if the system is inconsistent
    """
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length must match the row count")
    augmented = RatMatrix.from_rows(
        [list(m.row(i)) + [to_rat(rhs[i])] for i in range(m.rows)], cols=m.cols + 1
    )
    reduced, pivots = rref(augmented)
    if m.cols in pivots:
        return None
    solution = [Fraction(0)] * m.cols
    for row, p in zip(reduced, pivots):
        solution[p] = row[-1]
    return tuple(solution)


@dataclass(frozen=True)
class AffineHyperplane:
    """The hyperplane normal . x = offset."""

    normal: Tuple[int, ...]
    offset: Fraction


def canonical_sign(values: Sequence[int]) -> Tuple[int, ...]:
    """Flip a vector so its first nonzero entry is positive."""
    first = next((x for x in values if x != 0), 0)
    return tuple(-x for x in values) if first < 0 else tuple(values)


def affine_normal(points: Sequence[Sequence[RatLike]], d: int) -> Optional[AffineHyperplane]:
    """
    Hyperplane through a point set in R^d.

    Args:
        points: at least d points in R^d
        d: ambient dimension

    Returns:
        Primitive integer normal (first nonzero entry positive) with its offset,
        or None if the points do not span a hyperplane
    """
    if len(points) < d:
        raise ValueError(f"need at least {d} points in R^{d}")
    base = [to_rat(x) for x in points[0]]
    differences = [[to_rat(x) - b for x, b in zip(p, base)] for p in points[1:]]
    if rows_rank(differences, d) != d - 1:
        return None
    if d == 1:
        kernel = [(Fraction(1),)]
    else:
        kernel = nullspace(RatMatrix.from_rows(differences, cols=d))
    normal = canonical_sign(integer_row(kernel[0]))
    return AffineHyperplane(normal=normal, offset=dot(normal, base))
