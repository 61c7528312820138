"""The Wasserstein arrangement: hyperplanes, sign vectors, flats and symmetry."""
import logging
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

import sympy as sp
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from ..errors import TooLargeError
from ..models.hyperplane import (
    CycleHyperplane,
    Flat,
    IntersectionPoset,
    SignVector,
    Stabilizer,
)
from ..models.metric import Metric, pair_index
from .exactnum import Echelon, RatMatrix, nullspace, rows_rank
from .metrics import elementary_split, inverse, symmetric_group

logger = logging.getLogger(__name__)

MAX_COUNTING_POINTS = 5

Permutation = Tuple[int, ...]


def hyperplane_count(n: int) -> int:
    """(1/2) sum over k >= 2 of C(n, 2k) (2k - 1)!."""
    return sum(comb(n, 2 * k) * factorial(2 * k - 1) for k in range(2, n // 2 + 1)) // 2


def _tuples_from_cycle(w: Tuple[int, ...]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    k = len(w) // 2
    a = [w[0]] + [w[2 * (k - i + 1)] for i in range(2, k + 1)]
    b = [w[1]] + [w[2 * (k - i + 1) + 1] for i in range(2, k + 1)]
    return tuple(a), tuple(b)


def _cycle_readings(w: Tuple[int, ...]) -> Iterable[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    size = len(w)
    backwards = tuple(reversed(w))
    for s in range(size):
        yield _tuples_from_cycle(w[s:] + w[:s])
        yield _tuples_from_cycle(backwards[s:] + backwards[:s])


def canonical_hyperplane(n: int, a: Tuple[int, ...], b: Tuple[int, ...]) -> CycleHyperplane:
    """
    Canonical representative of the hyperplane of the even cycle a1, b1, a_k, b_k, ..., a2, b2.

    The lexicographically least a + b over all rotations and reflections wins.
    For k = 2 this puts the smallest vertex first and orders b increasingly,
    which fixes the positive side.
    """
    w = CycleHyperplane.from_tuples(n, a, b).cycle()
    best = min(_cycle_readings(w), key=lambda ab: ab[0] + ab[1])
    return CycleHyperplane.from_tuples(n, best[0], best[1])


def _hyperplanes(n: int) -> List[CycleHyperplane]:
    found: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], CycleHyperplane] = {}
    for k in range(2, n // 2 + 1):
        for vertices in combinations(range(1, n + 1), 2 * k):
            first, rest = vertices[0], vertices[1:]
            for order in permutations(rest):
                a, b = _tuples_from_cycle((first,) + order)
                h = canonical_hyperplane(n, a, b)
                found.setdefault((h.a, h.b), h)
    return sorted(found.values(), key=lambda h: (h.k, h.a, h.b))


def generate(n: int) -> List[CycleHyperplane]:
    """
    All canonical hyperplanes of W_n.

    Args:
        n: number of points, at least 4

    Returns:
        Hyperplanes sorted by (k, a, b); list positions are the hyperplane ids
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    return list(arrangement(n).hyperplanes)


class WassersteinArrangement:
    """W_n with its canonical hyperplane order and the S_n action on it."""

    def __init__(self, n: int):
        self.n = n
        self.dim = n * (n - 1) // 2
        self.hyperplanes: Tuple[CycleHyperplane, ...] = tuple(_hyperplanes(n))
        self._by_support: Dict[FrozenSet[int], int] = {
            h.support(): index for index, h in enumerate(self.hyperplanes)
        }
        logger.debug("W_%d: %d hyperplanes", n, len(self.hyperplanes))

    def __len__(self) -> int:
        return len(self.hyperplanes)

    def sign_vector(self, m: Metric) -> SignVector:
        if m.n != self.n:
            raise ValueError(f"metric has {m.n} points, arrangement {self.n}")
        return SignVector(n=self.n, entries=tuple(h.side(m) for h in self.hyperplanes))

    def containing(self, m: Metric) -> List[int]:
        """Ids of hyperplanes through m."""
        return [i for i, h in enumerate(self.hyperplanes) if h.evaluate(m) == 0]

    def image(self, index: int, sigma: Permutation) -> Tuple[int, int]:
        """
        Where sigma sends a hyperplane.

        Returns:
            (id of the image hyperplane, +1 if orientations agree else -1)
        """
        h = self.hyperplanes[index]
        a = tuple(sigma[x - 1] for x in h.a)
        b = tuple(sigma[x - 1] for x in h.b)
        support = frozenset(
            [pair_index(self.n, x, y) for x, y in zip(a, b)]
            + [pair_index(self.n, a[i], b[(i + 1) % h.k]) for i in range(h.k)]
        )
        target = self._by_support[support]
        agrees = self.hyperplanes[target].normal[pair_index(self.n, a[0], b[0])] == 1
        return target, 1 if agrees else -1

    def act(self, sv: SignVector, sigma: Permutation) -> SignVector:
        """Sign vector of permute(m, sigma) for any m realizing sv."""
        back = inverse(sigma)
        entries = []
        for index in range(len(self.hyperplanes)):
            target, orientation = self.image(index, back)
            entries.append(orientation * sv.entries[target])
        return SignVector(n=self.n, entries=tuple(entries))

    def fixes(self, sv: SignVector, sigma: Permutation) -> bool:
        back = inverse(sigma)
        for index, entry in enumerate(sv.entries):
            target, orientation = self.image(index, back)
            if orientation * sv.entries[target] != entry:
                return False
        return True

    def stabilizer(self, sv: SignVector) -> Stabilizer:
        """
        Permutations of [n] fixing a sign vector.

        Args:
            sv: SignVector of this arrangement

        Returns:
            Stabilizer with all elements, a small generating set and its cycle notation
        """
        elements = tuple(sigma for sigma in symmetric_group(self.n) if self.fixes(sv, sigma))
        generators: List[Permutation] = []
        group = PermutationGroup([SymPermutation(list(range(self.n)))])
        for sigma in elements:
            candidate = _to_sympy(sigma)
            if not group.contains(candidate):
                generators.append(sigma)
                group = PermutationGroup([_to_sympy(g) for g in generators])
        if group.order() != len(elements):
            raise ValueError("stabilizer elements do not form a group")
        return Stabilizer(
            n=self.n,
            elements=elements,
            generators=tuple(generators),
            cycle_notation=tuple(cycle_notation(g) for g in generators),
        )

    def orbit(self, sv: SignVector) -> Set[SignVector]:
        return {self.act(sv, sigma) for sigma in symmetric_group(self.n)}

    def orbit_size(self, sv: SignVector) -> int:
        return factorial(self.n) // self.stabilizer(sv).order

    def lineality(self) -> Tuple[int, bool]:
        """
        Dimension of the common intersection of all hyperplanes.

        Returns:
            (dimension, True iff the n elementary splits lie in it and span it)
        """
        normals = RatMatrix.from_rows([h.normal for h in self.hyperplanes], cols=self.dim)
        dimension = len(nullspace(normals))
        splits = [elementary_split(self.n, i).values for i in range(1, self.n + 1)]
        inside = all(
            sum(c * v for c, v in zip(h.normal, split)) == 0
            for h in self.hyperplanes
            for split in splits
        )
        spans = inside and rows_rank(splits, self.dim) == dimension
        return dimension, spans

    def poset(self) -> IntersectionPoset:
        """
        Intersection poset by closing the hyperplanes under intersection.

        A flat is identified by the set of hyperplanes containing it; flats of
        rank r + 1 come from flats of rank r by adding one more hyperplane and
        taking the closure.
        """
        if self.n > MAX_COUNTING_POINTS:
            raise TooLargeError(
                f"the intersection poset of W_{self.n} is not enumerated (n must be at most {MAX_COUNTING_POINTS})"
            )
        normals = [h.normal for h in self.hyperplanes]
        count = len(normals)
        ranks: Dict[int, int] = {0: 0}
        layer: Dict[int, Echelon] = {0: Echelon(self.dim)}
        rank = 0
        while layer:
            rank += 1
            following: Dict[int, Echelon] = {}
            for mask, basis in layer.items():
                remaining = [h for h in range(count) if not mask >> h & 1]
                while remaining:
                    h = remaining.pop(0)
                    extended = basis.copy()
                    extended.add(normals[h])
                    closure = mask
                    for other in range(count):
                        if not closure >> other & 1 and extended.contains(normals[other]):
                            closure |= 1 << other
                    remaining = [x for x in remaining if not closure >> x & 1]
                    if closure not in following:
                        following[closure] = extended
            for mask in following:
                ranks[mask] = rank
            layer = following

        ordered = sorted(ranks, key=lambda mask: (ranks[mask], mask))
        mobius: Dict[int, int] = {}
        for mask in ordered:
            if mask == 0:
                mobius[mask] = 1
                continue
            mobius[mask] = -sum(
                value for below, value in mobius.items() if below != mask and below & mask == below
            )
        flats = tuple(
            Flat(
                hyperplanes=frozenset(h for h in range(count) if mask >> h & 1),
                rank=ranks[mask],
                mobius=mobius[mask],
            )
            for mask in ordered
        )
        logger.debug("W_%d: %d flats", self.n, len(flats))
        return IntersectionPoset(n=self.n, ambient_dim=self.dim, flats=flats)


@lru_cache(maxsize=None)
def arrangement(n: int) -> WassersteinArrangement:
    return WassersteinArrangement(n)


def _to_sympy(sigma: Permutation) -> SymPermutation:
    return SymPermutation([x - 1 for x in sigma])


def cycle_notation(sigma: Permutation) -> str:
    """Cycle notation on 1..n, e.g. "(1 5)(2 4)"; "()" for the identity."""
    cycles = _to_sympy(sigma).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


def sign_vector(m: Metric) -> SignVector:
    """Exact sign of each canonical hyperplane's form at m."""
    return arrangement(m.n).sign_vector(m)


def same_open_cone(m1: Metric, m2: Metric) -> bool:
    return m1.n == m2.n and sign_vector(m1) == sign_vector(m2)


def lineality(n: int) -> Tuple[int, bool]:
    if n < 4:
        raise ValueError("n must be at least 4")
    return arrangement(n).lineality()


def characteristic_polynomial(poset: IntersectionPoset) -> sp.Poly:
    t = sp.Symbol('t')
    coefficients = poset.coefficients()
    return sp.Poly(sum(c * t ** (poset.ambient_dim - r) for r, c in enumerate(coefficients)), t)


def chamber_count(poset: IntersectionPoset) -> int:
    """Number of chambers, (-1)^d chi(-1)."""
    chi = characteristic_polynomial(poset)
    return int((-1) ** poset.ambient_dim * chi.eval(-1))


def poset_and_charpoly(n: int) -> Tuple[IntersectionPoset, List[int]]:
    """
    Intersection poset of W_n and its characteristic polynomial.

    Returns:
        (poset, coefficients from t^C(n,2) down to t^0)

    Raises:
        TooLargeError: for n >= 6
    """
    if n > MAX_COUNTING_POINTS:
        raise TooLargeError(
            f"chamber counting for n={n} is out of scope (n must be at most {MAX_COUNTING_POINTS})"
        )
    poset = arrangement(n).poset()
    return poset, list(poset.coefficients())


def stabilizer(sv: SignVector, n: int) -> Stabilizer:
    return arrangement(n).stabilizer(sv)


def chamber_sign_vectors(n: int, values: Iterable[int] = range(1, 4)) -> Set[SignVector]:
    """Full-support sign vectors met by integer points of a box; exhaustive for n=4."""
    if n > 4:
        raise TooLargeError("box search for chambers is only run for n=4")
    grid = list(values)
    space = arrangement(n)
    found: Set[SignVector] = set()
    for point in product(grid, repeat=space.dim):
        sv = space.sign_vector(Metric.from_values(n, point))
        if sv.is_chamber():
            found.add(sv)
    return found


def chamber_adjacency(chambers: Iterable[SignVector]) -> int:
    """Number of chamber pairs separated by exactly one hyperplane."""
    listed = sorted(chambers, key=str)
    return sum(
        1
        for x, y in combinations(listed, 2)
        if sum(1 for p, q in zip(x.entries, y.entries) if p != q) == 1
    )
