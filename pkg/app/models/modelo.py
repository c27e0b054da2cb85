"""
Modelos de especificação bosônica e do arquivo de modelo ("boqc-model/1")
Responsabilidade: validar parâmetros antes de qualquer cálculo
"""
from typing import Annotated, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

ComplexInput = Union[float, List[float]]


def parse_complex(value: ComplexInput) -> complex:
    """Número real ou par [re, im] -> complex."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"Complexo deve ser [re, im], recebido {value!r}")
        return complex(float(value[0]), float(value[1]))
    return complex(float(value))


def to_complex_matrix(rows: List[List[ComplexInput]]) -> np.ndarray:
    return np.array([[parse_complex(v) for v in row] for row in rows], dtype=complex)


def from_complex_matrix(matrix: np.ndarray) -> List[List[ComplexInput]]:
    """Matriz numpy -> listas JSON ([re, im] só quando há parte imaginária)."""
    out = []
    for row in np.asarray(matrix, dtype=complex):
        out.append([float(v.real) if v.imag == 0 else [float(v.real), float(v.imag)] for v in row])
    return out


def _check_square(rows: List[List[ComplexInput]], size: int, name: str) -> None:
    if len(rows) != size or any(len(row) != size for row in rows):
        raise ValueError(f"{name} deve ser uma matriz {size}x{size}")


class _ModelBase(BaseModel):
    modes: int = Field(..., ge=1, description="Número de modos M")
    cutoff: int = Field(..., ge=1, description="Corte N_P (fótons máximos por modo)")

    class Config:
        extra = "forbid"
        frozen = True

    @property
    def encoded_modes(self) -> int:
        return self.modes

    @property
    def width(self) -> int:
        return self.encoded_modes * (self.cutoff + 1)


class _TwoModeBase(_ModelBase):
    i: int = Field(0, ge=0, description="Primeiro modo")
    j: int = Field(1, ge=0, description="Segundo modo")

    @model_validator(mode="after")
    def _check_pair(self):
        if self.i == self.j:
            raise ValueError("Os modos i e j devem ser diferentes")
        if max(self.i, self.j) >= self.modes:
            raise ValueError(f"Modos ({self.i}, {self.j}) fora de [0, {self.modes})")
        return self


class BeamSplitterSpec(_TwoModeBase):
    """Divisor de feixe ε(e^{iϕ} b_i†b_j + h.c.)"""
    kind: Literal["BeamSplitter"] = "BeamSplitter"
    epsilon: float = Field(..., description="Acoplamento ε")
    phase: float = Field(0.0, description="Fase ϕ do acoplamento")

    class Config:
        json_schema_extra = {
            "example": {"kind": "BeamSplitter", "modes": 2, "cutoff": 1, "i": 0, "j": 1, "epsilon": 1.5707963}
        }


class TwoModeSqueezerSpec(_TwoModeBase):
    """Compressor de dois modos β(−i e^{iϕ} a_i†a_j† + h.c.)"""
    kind: Literal["TwoModeSqueezer"] = "TwoModeSqueezer"
    beta: float = Field(..., description="Parâmetro de compressão β")
    phase: float = Field(0.0, description="Fase ϕ do acoplamento")


class BilinearSpec(_TwoModeBase):
    """Interação bilinear: divisor de feixe g_BS mais compressor g_TMS"""
    kind: Literal["Bilinear"] = "Bilinear"
    g_bs: float = Field(..., description="Acoplamento de divisor de feixe")
    g_tms: float = Field(..., description="Acoplamento de compressão")


class MolecularSpec(_ModelBase):
    """Osciladores anarmônicos Σ ω_j n_j + χ_j n_j²"""
    kind: Literal["Molecular"] = "Molecular"
    omega: List[float] = Field(..., description="Frequências ω_j")
    chi: List[float] = Field(..., description="Anarmonicidades χ_j")

    @model_validator(mode="after")
    def _check_lengths(self):
        if len(self.omega) != self.modes or len(self.chi) != self.modes:
            raise ValueError(f"omega e chi devem ter comprimento {self.modes}")
        return self

    class Config:
        json_schema_extra = {
            "example": {"kind": "Molecular", "modes": 1, "cutoff": 4, "omega": [1.0], "chi": [0.1]}
        }


class PhaseShifterSpec(_ModelBase):
    """Deslocador de fase φ·n_j"""
    kind: Literal["PhaseShifter"] = "PhaseShifter"
    j: int = Field(0, ge=0, description="Modo")
    phi: float = Field(..., description="Fase φ")

    @model_validator(mode="after")
    def _check_mode(self):
        if self.j >= self.modes:
            raise ValueError(f"Modo {self.j} fora de [0, {self.modes})")
        return self


class _MatrixBase(_ModelBase):
    R: List[List[ComplexInput]] = Field(..., description="Matriz unitária M×M (entradas número ou [re, im])")

    @model_validator(mode="after")
    def _check_shape(self):
        _check_square(self.R, self.modes, "R")
        return self

    def matrix(self) -> np.ndarray:
        return to_complex_matrix(self.R)


class BosonSamplingSpec(_MatrixBase):
    """Hamiltoniano de amostragem de bósons: registros a (0..M-1) e b (M..2M-1)"""
    kind: Literal["BosonSamplingH"] = "BosonSamplingH"
    omega: float = Field(0.0, description="Frequência livre ω")

    @property
    def encoded_modes(self) -> int:
        return 2 * self.modes


class InterferometerModelSpec(_MatrixBase):
    """Interferômetro compilado camada a camada pela malha de Reck"""
    kind: Literal["Interferometer"] = "Interferometer"


class BogoliubovSpec(_ModelBase):
    """Transformação de Bogoliubov a -> α a + β a†"""
    kind: Literal["Bogoliubov"] = "Bogoliubov"
    alpha: List[List[ComplexInput]] = Field(..., description="Matriz α")
    beta: List[List[ComplexInput]] = Field(..., description="Matriz β")

    @model_validator(mode="after")
    def _check_shape(self):
        _check_square(self.alpha, self.modes, "alpha")
        _check_square(self.beta, self.modes, "beta")
        return self

    def alpha_matrix(self) -> np.ndarray:
        return to_complex_matrix(self.alpha)

    def beta_matrix(self) -> np.ndarray:
        return to_complex_matrix(self.beta)


BosonicModelSpec = Annotated[
    Union[
        BeamSplitterSpec,
        TwoModeSqueezerSpec,
        BilinearSpec,
        MolecularSpec,
        PhaseShifterSpec,
        BosonSamplingSpec,
        InterferometerModelSpec,
        BogoliubovSpec,
    ],
    Field(discriminator="kind"),
]

MODEL_KINDS = (
    "BeamSplitter",
    "TwoModeSqueezer",
    "Bilinear",
    "Molecular",
    "PhaseShifter",
    "BosonSamplingH",
    "Interferometer",
    "Bogoliubov",
)


class ModelFile(BaseModel):
    """Documento de entrada da linha de comando e da API"""
    format: Literal["boqc-model/1"] = Field(..., description="Versão do formato")
    model: BosonicModelSpec
    time: float = Field(1.0, description="Tempo de evolução t")
    steps: int = Field(1, ge=1, description="Passos de Trotter s")
    target: Literal["zx", "cnot"] = Field("zx", description="Conjunto de portas alvo")
    optimize: bool = Field(True, description="Aplicar otimização peephole")
    initial: Optional[List[int]] = Field(None, description="Ocupações iniciais (padrão: vácuo)")
    shots: int = Field(2048, ge=1, description="Número de disparos")
    seed: Optional[int] = Field(None, description="Semente (padrão: BOQC_SEED)")

    class Config:
        extra = "forbid"
        json_schema_extra = {
            "example": {
                "format": "boqc-model/1",
                "model": {"kind": "BeamSplitter", "modes": 2, "cutoff": 1, "epsilon": 1.5707963267948966},
                "time": 1.0,
                "steps": 1,
                "target": "zx",
                "initial": [1, 0],
                "shots": 2048,
                "seed": 7,
            }
        }

    @field_validator("initial")
    @classmethod
    def _non_negative(cls, value):
        if value is not None and any(n < 0 for n in value):
            raise ValueError("Ocupações devem ser não negativas")
        return value

    @model_validator(mode="after")
    def _check_initial(self):
        if self.initial is not None and len(self.initial) != self.model.encoded_modes:
            raise ValueError(f"initial deve ter {self.model.encoded_modes} ocupações")
        return self

    def initial_occupations(self) -> List[int]:
        return list(self.initial) if self.initial is not None else [0] * self.model.encoded_modes
