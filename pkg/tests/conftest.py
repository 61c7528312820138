import json
import random

import pytest

from src.analyzers.metrics import free_sum, path_metric, permute
from src.clients.fixture_client import FixtureClient
from src.models.metric import Metric


@pytest.fixture(scope="session")
def fixtures():
    return FixtureClient()


@pytest.fixture(scope="session")
def strict4(fixtures):
    """Table 2 samples keyed by row."""
    return {s.row: s for s in fixtures.strict4()}


@pytest.fixture(scope="session")
def generic5(fixtures):
    return fixtures.generic5()


@pytest.fixture(scope="session")
def strict5(fixtures):
    return fixtures.strict5()


@pytest.fixture(scope="session")
def quadrilateral_pair(fixtures):
    """Two 4-point metrics with the same tight span but different KRW polytopes."""
    return fixtures.example("same_span_a"), fixtures.example("same_span_b")


@pytest.fixture(scope="session")
def decomposable_pair(fixtures):
    """Two 5-point metrics in one Wasserstein cone; only the first is totally split-decomposable."""
    return fixtures.example("same_cone_a"), fixtures.example("same_cone_b")


@pytest.fixture(scope="session")
def seven_point_pair(decomposable_pair):
    """The decomposable pair with an 840-scaled path glued at point 1 (relabeled to 5)."""
    path = path_metric(2).scaled(840)
    return tuple(free_sum(permute(rho, (5, 2, 3, 4, 1)), path) for rho in decomposable_pair)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def cycle5():
    """Graph metric of the 5-cycle 1-2-3-4-5-1."""
    return Metric.from_values(5, [1, 2, 2, 1, 1, 2, 2, 1, 2, 1])


@pytest.fixture
def metric_file(tmp_path):
    """Write a metric to a JSON file and return its path."""

    def write(m: Metric, name: str = "metric.json"):
        path = tmp_path / name
        path.write_text(json.dumps(m.to_dict()))
        return str(path)

    return write
