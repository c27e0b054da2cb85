"""
Modelos do interferômetro (fatoração de Reck)
"""
from typing import List

import numpy as np
from pydantic import BaseModel, Field

from app.models.modelo import ComplexInput, from_complex_matrix, to_complex_matrix


class ReckLayer(BaseModel):
    """Camada T(i, j, θ, φ): fase φ no modo j seguida de divisor de feixe θ entre i e j"""
    i: int = Field(..., description="Modo eliminado")
    j: int = Field(..., description="Modo pivô (recebe a fase)")
    theta: float = Field(..., description="Ângulo de mistura θ")
    phi: float = Field(..., description="Fase φ")


class InterferometerSpec(BaseModel):
    """Matriz unitária M×M e sua malha triangular de M(M-1)/2 camadas"""
    R: List[List[ComplexInput]] = Field(..., description="Matriz unitária")
    layers: List[ReckLayer] = Field(default_factory=list, description="Camadas, na ordem de aplicação")
    output_phases: List[float] = Field(default_factory=list, description="Fases de saída por modo")

    class Config:
        json_schema_extra = {
            "example": {
                "R": [[0.7071067811865476, [0, 0.7071067811865476]], [[0, 0.7071067811865476], 0.7071067811865476]],
                "layers": [{"i": 0, "j": 1, "theta": 0.7853981633974483, "phi": 0.0}],
                "output_phases": [0.0, 0.0],
            }
        }

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, layers: List[ReckLayer], output_phases: List[float]) -> "InterferometerSpec":
        return cls(R=from_complex_matrix(matrix), layers=layers, output_phases=[float(p) for p in output_phases])

    @property
    def modes(self) -> int:
        return len(self.R)

    def matrix(self) -> np.ndarray:
        return to_complex_matrix(self.R)


class MatrixFile(BaseModel):
    """Arquivo de matriz para os comandos reck e oracle: {"R": [[...]]}"""
    R: List[List[ComplexInput]] = Field(..., description="Matriz quadrada (entradas número ou [re, im])")

    class Config:
        extra = "forbid"

    def matrix(self) -> np.ndarray:
        matrix = to_complex_matrix(self.R)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"R deve ser quadrada, formato {matrix.shape}")
        return matrix
