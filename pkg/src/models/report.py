"""Report models produced by the command-line surface."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .decomposition import ClassReport
from .metric import Metric


@dataclass
class AnalysisReport:
    """Everything `metrofan analyze` computes for one metric."""

    metric: Metric
    validity: str
    generic: Optional[bool]  # None unless the metric is strict
    f_vector: Optional[Tuple[int, ...]]  # None for pseudometrics, which have no KRW polytope
    simplicial: Optional[bool]
    sign_vector: str
    sign_vector_digest: str
    classes: ClassReport
    tight_span_cells: int
    stabilizer_order: int
    stabilizer_generators: Tuple[str, ...] = ()
    facets: Optional[List[str]] = None  # edge lists of facet graphs, with --facets

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {
            'metric': self.metric.to_dict(),
            'validity': self.validity,
            'generic': self.generic,
            'f_vector': list(self.f_vector) if self.f_vector is not None else None,
            'simplicial': self.simplicial,
            'sign_vector': {'id': self.sign_vector_digest, 'signs': self.sign_vector},
            'classes': self.classes.to_dict(),
            'tight_span_cells': self.tight_span_cells,
            'stabilizer': {
                'order': self.stabilizer_order,
                'generators': list(self.stabilizer_generators),
            },
        }
        if self.facets is not None:
            data['facets'] = list(self.facets)
        return data


@dataclass
class ComparisonReport:
    """Which of the three stratifications put two metrics together."""

    same_wasserstein_cone: bool
    same_tight_span_type: bool
    same_f_vector: Optional[bool]  # None when either side has a zero distance

    def to_dict(self) -> Dict[str, Optional[bool]]:
        return {
            'same_wasserstein_cone': self.same_wasserstein_cone,
            'same_tight_span_type': self.same_tight_span_type,
            'same_f_vector': self.same_f_vector,
        }


OK = "ok"
MISMATCH = "mismatch"
OUT_OF_SCOPE = "out of scope"


@dataclass
class ReproductionCheck:
    """One recomputed table cell."""

    target: str
    row: str
    quantity: str
    expected: str
    actual: str
    status: str = OK

    @classmethod
    def compare(cls, target: str, row: str, quantity: str, expected, actual) -> 'ReproductionCheck':
        status = OK if str(expected) == str(actual) else MISMATCH
        return cls(target, row, quantity, str(expected), str(actual), status)

    def as_row(self) -> List[str]:
        return [self.target, self.row, self.quantity, self.expected, self.actual, self.status]


@dataclass
class ReproductionResult:
    """All checks of one reproduction target."""

    target: str
    checks: List[ReproductionCheck] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def mismatches(self) -> List[ReproductionCheck]:
        return [c for c in self.checks if c.status == MISMATCH]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def count(self, status: str) -> int:
        return sum(1 for c in self.checks if c.status == status)
