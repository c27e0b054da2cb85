"""
Registros de Fock e estados da base codificados (mapeamento unário)
"""
from dataclasses import dataclass
from typing import Dict, Tuple


@dataclass(frozen=True)
class FockRegister:
    """Ocupações de M modos com corte N_P por modo"""

    occupations: Tuple[int, ...]
    cutoff: int

    def __post_init__(self):
        object.__setattr__(self, "occupations", tuple(int(n) for n in self.occupations))

    @property
    def modes(self) -> int:
        return len(self.occupations)

    @property
    def block_size(self) -> int:
        return self.cutoff + 1

    @property
    def qubit_count(self) -> int:
        return self.modes * self.block_size

    @property
    def total_photons(self) -> int:
        return sum(self.occupations)


def mode_layout(modes: int, cutoff: int) -> Dict[Tuple[int, int], int]:
    """(modo j, slot n) -> índice global j·(N_P+1)+n."""
    block = cutoff + 1
    return {(j, n): j * block + n for j in range(modes) for n in range(block)}


@dataclass(frozen=True)
class EncodedBasisState:
    """Bitstring codificado, slot 0 primeiro dentro de cada bloco"""

    bits: str
    modes: int
    cutoff: int

    @property
    def width(self) -> int:
        return len(self.bits)

    @property
    def mode_layout(self) -> Dict[Tuple[int, int], int]:
        return mode_layout(self.modes, self.cutoff)

    @property
    def index(self) -> int:
        """Índice na base computacional (bit k = qubit k)."""
        return sum(1 << k for k, bit in enumerate(self.bits) if bit == "1")

    def blocks(self):
        block = self.cutoff + 1
        return [self.bits[j * block:(j + 1) * block] for j in range(self.modes)]

    def in_code_space(self) -> bool:
        return all(b.count("0") == 1 for b in self.blocks())
