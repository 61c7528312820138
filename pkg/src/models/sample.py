"""Published sample metrics and their expected values."""
from dataclasses import dataclass
from typing import Optional, Tuple

from .metric import Metric


@dataclass(frozen=True)
class SampleMetric:
    """One row of a bundled table."""

    row: str
    metric: Metric
    f_vector: Tuple[int, ...]
    stabilizer: str = ""  # group name as printed in the table
    stabilizer_order: Optional[int] = None
    case: str = ""


@dataclass(frozen=True)
class ChamberCountRow:
    """One row of the generic type count table."""

    n: int
    unlabeled: int
    labeled: int
    hyperplanes: int
    charpoly: str = ""  # coefficients by rank, highest degree first
