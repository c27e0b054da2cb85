"""
Distribuição de saída de um interferômetro
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np


@dataclass(frozen=True)
class OutputDistribution:
    """Probabilidades por ocupação de saída, para uma entrada e uma matriz R fixas"""

    entries: Dict[Tuple[int, ...], float]
    input: Tuple[int, ...]
    R: np.ndarray = field(compare=False, repr=False)

    def total(self) -> float:
        return float(sum(self.entries.values()))

    def probability(self, occupations) -> float:
        return self.entries.get(tuple(occupations), 0.0)

    def rows(self) -> List[Tuple[Tuple[int, ...], float]]:
        return sorted(self.entries.items())


def total_variation(p: Dict[Tuple[int, ...], float], q: Dict[Tuple[int, ...], float]) -> float:
    keys = set(p) | set(q)
    return 0.5 * sum(abs(p.get(k, 0.0) - q.get(k, 0.0)) for k in keys)
