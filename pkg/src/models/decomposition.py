"""Split decomposition and metric-class report models."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..analyzers.exactnum import format_rat
from .metric import Metric, Split


@dataclass(frozen=True)
class SplitDecomposition:
    """
    A symmetric function written as residual + sum of weighted split metrics.

    Weights are the isolation indices of their splits; the residual is
    split-prime.
    """

    summands: Tuple[Tuple[Split, Fraction], ...]
    residual: Metric

    @property
    def is_total(self) -> bool:
        return self.residual.is_zero()

    def to_dict(self) -> Dict[str, object]:
        return {
            'splits': [
                {'A': sorted(s.part_a), 'label': s.label(), 'weight': format_rat(w)}
                for s, w in self.summands
            ],
            'residual': self.residual.to_dict(),
            'residual_norm_zero': self.is_total,
        }


@dataclass
class ClassReport:
    """Membership of a metric in the classes compared against the fan."""

    tree_like: bool
    kalmanson: Optional[bool]
    kalmanson_order: Optional[Tuple[int, ...]]
    totally_split_decomposable: bool
    six_point: bool
    decomposition: SplitDecomposition
    notes: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return self.totally_split_decomposable and self.six_point

    def to_dict(self) -> Dict[str, object]:
        return {
            'tree_like': self.tree_like,
            'kalmanson': {
                'holds': self.kalmanson,
                'order': list(self.kalmanson_order) if self.kalmanson_order else None,
            },
            'totally_split_decomposable': self.totally_split_decomposable,
            'six_point': self.six_point,
            'consistent': self.consistent,
            'splits': self.decomposition.to_dict()['splits'],
            'residual_norm_zero': self.decomposition.is_total,
            'notes': list(self.notes),
        }
