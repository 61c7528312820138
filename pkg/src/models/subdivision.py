"""Regular subdivision model."""
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Hashable, Tuple

from ..analyzers.exactnum import format_rat

Label = Hashable


@dataclass(frozen=True)
class RegularSubdivision:
    """
    Maximal lower cells of a lifted point configuration.

    ``supports[c]`` is the (normal, offset) of the lifted hyperplane carrying
    cell ``c``; it is empty for a trivial subdivision.
    """

    labels: Tuple[Label, ...]
    points: Tuple[Tuple[Fraction, ...], ...]
    heights: Tuple[Fraction, ...]
    maximal_cells: Tuple[FrozenSet[Label], ...]
    supports: Tuple[Tuple[Tuple[int, ...], Fraction], ...] = ()

    @property
    def cell_count(self) -> int:
        return len(self.maximal_cells)

    def cell_set(self) -> FrozenSet[FrozenSet[Label]]:
        return frozenset(self.maximal_cells)

    def is_trivial(self) -> bool:
        return len(self.maximal_cells) == 1

    def to_dict(self) -> dict:
        return {
            'config_labels': [_label_text(x) for x in self.labels],
            'heights': [format_rat(h) for h in self.heights],
            'maximal_cells': [sorted(_label_text(x) for x in cell) for cell in self.maximal_cells],
        }


def _label_text(label: Label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(str(x) for x in label) + ")"
    return str(label)
