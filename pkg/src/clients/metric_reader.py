"""Metric file reader."""
import csv
import io
import json
import logging
from pathlib import Path
from typing import List, Union

from ..errors import MetricParseError
from ..models.metric import Metric

logger = logging.getLogger(__name__)


class MetricReader:
    """
    Reads metrics from disk.

    Accepted formats:
        - JSON ``{"n": 4, "d": ["8", "7", ...]}`` with upper-triangular values
        - JSON ``{"matrix": [[0, 8, ...], ...]}``
        - CSV or whitespace text holding a full square matrix
        - a single line of upper-triangular values
    Values may be integers or "p/q" strings.
    """

    def read(self, path: Union[str, Path]) -> Metric:
        """
        Read one metric file.

        Args:
            path: file to read

        Returns:
            Parsed Metric

        Raises:
            MetricParseError: if the file is missing or malformed
        """
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as e:
            raise MetricParseError(f"cannot read {path}: {e}") from e
        if path.suffix.lower() == '.json' or text.lstrip().startswith('{'):
            metric = self.parse_json(text)
        else:
            metric = self.parse_table(text)
        logger.debug("read %s: %d points", path, metric.n)
        return metric

    def parse_json(self, text: str) -> Metric:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MetricParseError(f"invalid JSON: {e}") from e
        if isinstance(data, dict) and 'matrix' in data:
            return Metric.from_matrix(data['matrix'])
        return Metric.from_dict(data)

    def parse_table(self, text: str) -> Metric:
        rows = self._rows(text)
        if not rows:
            raise MetricParseError("metric file is empty")
        if len(rows) == 1:
            return Metric.from_row(rows[0])
        return Metric.from_matrix(rows)

    def _rows(self, text: str) -> List[List[str]]:
        rows = []
        for line in text.splitlines():
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if ',' in line:
                cells = next(csv.reader(io.StringIO(line)))
            else:
                cells = line.split()
            rows.append([cell.strip() for cell in cells if cell.strip()])
        return rows
