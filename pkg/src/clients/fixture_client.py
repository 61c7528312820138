"""Access to the bundled tables of sample metrics."""
import csv
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..errors import MetricParseError
from ..models.metric import Metric
from ..models.sample import ChamberCountRow, SampleMetric
from .metric_reader import MetricReader

logger = logging.getLogger(__name__)

DEFAULT_DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def _ints(text: str) -> tuple:
    return tuple(int(x) for x in text.split())


class FixtureClient:
    """Loads sample metrics and expected values from the data directory."""

    def __init__(self, data_dir: Optional[Union[str, Path]] = None):
        """Initialize with a data directory; defaults to the bundled one."""
        self.data_dir = Path(data_dir) if data_dir else DEFAULT_DATA_DIR
        self.reader = MetricReader()
        self.cache: Dict[str, List[dict]] = {}

    def _table(self, name: str) -> List[dict]:
        if name in self.cache:
            return self.cache[name]
        path = self.data_dir / name
        try:
            with path.open(newline='') as handle:
                rows = list(csv.DictReader(handle))
        except OSError as e:
            raise MetricParseError(f"cannot read fixture {path}: {e}") from e
        logger.debug("loaded %d rows from %s", len(rows), path)
        self.cache[name] = rows
        return rows

    def _samples(self, name: str) -> List[SampleMetric]:
        samples = []
        for row in self._table(name):
            order = row.get('stabilizer_order')
            samples.append(SampleMetric(
                row=row['row'],
                metric=Metric.from_row(row['values'].split()),
                f_vector=_ints(row['f_vector']),
                stabilizer=row.get('stabilizer', ''),
                stabilizer_order=int(order) if order else None,
                case=row.get('case', ''),
            ))
        return samples

    def chamber_counts(self) -> List[ChamberCountRow]:
        return [
            ChamberCountRow(
                n=int(row['n']),
                unlabeled=int(row['unlabeled']),
                labeled=int(row['labeled']),
                hyperplanes=int(row['hyperplanes']),
                charpoly=row.get('charpoly') or '',
            )
            for row in self._table('table1.csv')
        ]

    def strict4(self) -> List[SampleMetric]:
        """The four strict 4-point types."""
        return self._samples('table2.csv')

    def generic5(self) -> List[SampleMetric]:
        """The twelve generic 5-point types."""
        return self._samples('generic5.csv')

    def strict5(self) -> List[SampleMetric]:
        """The 65 strict, non-generic 5-point types."""
        return self._samples('table3_strict5.csv')

    def example(self, name: str) -> Metric:
        """
        A named example metric, e.g. "same_cone_a".

        Raises:
            MetricParseError: if no such example is bundled
        """
        return self.reader.read(self.data_dir / "examples" / f"{name}.json")

    def example_names(self) -> List[str]:
        return sorted(p.stem for p in (self.data_dir / "examples").glob("*.json"))
