"""
Vetor de estado denso
"""
from dataclasses import dataclass

import numpy as np


@dataclass
class StateVector:
    """Amplitudes complexas sobre 2^Q estados; o bit k do índice é o qubit k"""

    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        size = self.amplitudes.shape[0]
        if size == 0 or size & (size - 1):
            raise ValueError(f"Comprimento {size} não é potência de 2")

    @property
    def width(self) -> int:
        return self.amplitudes.shape[0].bit_length() - 1

    @classmethod
    def basis(cls, width: int, index: int) -> "StateVector":
        amplitudes = np.zeros(1 << width, dtype=complex)
        amplitudes[index] = 1.0
        return cls(amplitudes)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def copy(self) -> "StateVector":
        return StateVector(self.amplitudes.copy())
