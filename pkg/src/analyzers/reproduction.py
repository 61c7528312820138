"""Recompute the published tables from the bundled sample metrics."""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Sequence

from ..clients.fixture_client import FixtureClient
from ..errors import TooLargeError
from ..models.metric import Metric
from ..models.report import OUT_OF_SCOPE, ReproductionCheck, ReproductionResult
from ..models.sample import SampleMetric
from .arrangement import (
    MAX_COUNTING_POINTS,
    arrangement,
    chamber_count,
    hyperplane_count,
    poset_and_charpoly,
)
from .krw import build_krw, f01_strict, is_generic
from .metrics import path_metric, strictify

logger = logging.getLogger(__name__)


def _text(values: Sequence[int]) -> str:
    return " ".join(str(v) for v in values)


def _trimmed(coefficients: Sequence[int]) -> List[int]:
    values = list(coefficients)
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return values


def _chamber_representatives(n: int, fixtures: FixtureClient) -> List[Metric]:
    """One metric per S_n-orbit of chambers, as far as the bundled tables list them."""
    if n == 3:
        return [strictify(path_metric(2))]
    if n == 4:
        return [s.metric for s in fixtures.strict4() if s.row == '1']
    if n == 5:
        return [s.metric for s in fixtures.generic5()]
    return []


def _unlabeled(n: int, labeled: int, fixtures: FixtureClient) -> str:
    """
    Orbit count of chambers, certified by representatives.

    The representatives must lie in distinct orbits whose sizes add up to the
    labeled chamber count; otherwise the count is reported as incomplete.
    """
    space = arrangement(n)
    seen = set()
    total = 0
    for m in _chamber_representatives(n, fixtures):
        sv = space.sign_vector(m)
        if not sv.is_chamber() or sv in seen:
            return "incomplete"
        orbit = space.orbit(sv)
        seen |= orbit
        total += len(orbit)
    if total != labeled:
        return "incomplete"
    return str(len(_chamber_representatives(n, fixtures)))


def reproduce_table1(fixtures: FixtureClient, threads: int = 1) -> List[ReproductionCheck]:
    """Hyperplane counts, characteristic polynomials and chamber counts for n = 3..6."""
    target = 'table1'
    checks = []
    for row in fixtures.chamber_counts():
        label = f"n={row.n}"
        actual_hyperplanes = len(arrangement(row.n).hyperplanes)
        checks.append(ReproductionCheck.compare(target, label, 'hyperplanes', row.hyperplanes, actual_hyperplanes))
        checks.append(ReproductionCheck.compare(
            target, label, 'hyperplane_formula', row.hyperplanes, hyperplane_count(row.n)
        ))
        if row.n > MAX_COUNTING_POINTS:
            for quantity, expected in (('labeled', row.labeled), ('unlabeled', row.unlabeled)):
                checks.append(ReproductionCheck(target, label, quantity, str(expected), '', OUT_OF_SCOPE))
            continue
        poset, coefficients = poset_and_charpoly(row.n)
        labeled = chamber_count(poset)
        checks.append(ReproductionCheck.compare(target, label, 'labeled', row.labeled, labeled))
        checks.append(ReproductionCheck.compare(
            target, label, 'unlabeled', row.unlabeled, _unlabeled(row.n, labeled, fixtures)
        ))
        if row.charpoly:
            checks.append(ReproductionCheck.compare(
                target, label, 'charpoly', row.charpoly, _text(_trimmed(coefficients))
            ))
    return checks


def _strict4_checks(sample: SampleMetric) -> List[ReproductionCheck]:
    target = 'table2'
    krw = build_krw(sample.metric)
    f0, f1 = f01_strict(sample.metric)
    return [
        ReproductionCheck.compare(target, sample.row, 'f_vector', _text(sample.f_vector), _text(krw.f_vector)),
        ReproductionCheck.compare(target, sample.row, 'f01_formula', _text(sample.f_vector[:2]), _text((f0, f1))),
    ]


def _generic5_checks(sample: SampleMetric) -> List[ReproductionCheck]:
    target = 'generic5'
    krw = build_krw(sample.metric)
    order = arrangement(5).stabilizer(arrangement(5).sign_vector(sample.metric)).order
    return [
        ReproductionCheck.compare(target, sample.row, 'f_vector', _text(sample.f_vector), _text(krw.f_vector)),
        ReproductionCheck.compare(target, sample.row, 'generic', True, is_generic(sample.metric)),
        ReproductionCheck.compare(target, sample.row, 'stabilizer_order', sample.stabilizer_order, order),
    ]


def _strict5_checks(sample: SampleMetric) -> List[ReproductionCheck]:
    target = 'table3-strict5'
    krw = build_krw(sample.metric)
    order = arrangement(5).stabilizer(arrangement(5).sign_vector(sample.metric)).order
    f0, f1 = f01_strict(sample.metric)
    return [
        ReproductionCheck.compare(target, sample.row, 'f_vector', _text(sample.f_vector), _text(krw.f_vector)),
        ReproductionCheck.compare(target, sample.row, 'generic', False, is_generic(sample.metric)),
        ReproductionCheck.compare(target, sample.row, 'stabilizer_order', sample.stabilizer_order, order),
        ReproductionCheck.compare(target, sample.row, 'f01_formula', _text(sample.f_vector[:2]), _text((f0, f1))),
    ]


def _run_rows(
    samples: List[SampleMetric],
    check: Callable[[SampleMetric], List[ReproductionCheck]],
    threads: int,
) -> List[ReproductionCheck]:
    # executor.map keeps input order
    with ThreadPoolExecutor(max_workers=threads) as executor:
        per_row = list(executor.map(check, samples))
    return [c for checks in per_row for c in checks]


def reproduce_table2(fixtures: FixtureClient, threads: int = 1) -> List[ReproductionCheck]:
    return _run_rows(fixtures.strict4(), _strict4_checks, threads)


def reproduce_generic5(fixtures: FixtureClient, threads: int = 1) -> List[ReproductionCheck]:
    samples = fixtures.generic5()
    checks = _run_rows(samples, _generic5_checks, threads)
    space = arrangement(5)
    orbit_total = sum(space.orbit_size(space.sign_vector(s.metric)) for s in samples)
    checks.append(ReproductionCheck.compare('generic5', 'all', 'orbit_size_sum', 882, orbit_total))
    return checks


def reproduce_strict5(fixtures: FixtureClient, threads: int = 1) -> List[ReproductionCheck]:
    return _run_rows(fixtures.strict5(), _strict5_checks, threads)


TARGETS: Dict[str, Callable[[FixtureClient, int], List[ReproductionCheck]]] = {
    'table1': reproduce_table1,
    'table2': reproduce_table2,
    'table3-strict5': reproduce_strict5,
    'generic5': reproduce_generic5,
}


def reproduce(target: str, fixtures: FixtureClient, threads: int = 1) -> ReproductionResult:
    """
    Recompute one published table.

    Args:
        target: one of TARGETS
        fixtures: source of sample metrics and expected values
        threads: worker count for per-row work

    Returns:
        ReproductionResult with one check per recomputed cell

    Raises:
        ValueError: for an unknown target
    """
    if target not in TARGETS:
        raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
    started = time.monotonic()
    try:
        checks = TARGETS[target](fixtures, threads)
    except TooLargeError as e:
        checks = [ReproductionCheck(target, 'all', 'run', '', str(e), OUT_OF_SCOPE)]
    result = ReproductionResult(target=target, checks=checks, seconds=time.monotonic() - started)
    logger.debug("%s: %d checks, %d mismatches", target, len(checks), len(result.mismatches))
    return result
