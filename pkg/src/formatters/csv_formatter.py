"""CSV output of reproduction checks."""
import csv
import io
from typing import Iterable

from ..models.report import ReproductionCheck

HEADER = ['target', 'row', 'quantity', 'expected', 'actual', 'status']


class CsvFormatter:
    """One line per recomputed table cell."""

    def format(self, checks: Iterable[ReproductionCheck]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(HEADER)
        for check in checks:
            writer.writerow(check.as_row())
        return buffer.getvalue()
