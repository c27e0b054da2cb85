"""
Modelos de relatório (saídas estruturadas da CLI e da API)
Responsabilidade: forma legível por máquina, serializada em JSON determinístico
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.models.interferometro import ReckLayer


class GateCounts(BaseModel):
    single_qubit: int = Field(..., description="Rotações de um qubit")
    rzx: int = Field(..., description="Portas RZX")
    cnot: int = Field(..., description="Portas CNOT")
    total: int = Field(..., description="Total de portas")


class TermInventory(BaseModel):
    weight_1: int = Field(..., description="Strings de peso 1 por passo")
    weight_2: int = Field(..., description="Strings de peso 2 por passo")
    heavier: int = Field(..., description="Strings de peso maior que 2 por passo")


class CompileReport(BaseModel):
    """Relatório de compilação"""
    kind: str
    qubits: int
    time: float
    steps_requested: int
    steps_used: List[int]
    exact: bool
    target: str
    optimized: bool
    naive_counts: GateCounts
    final_counts: GateCounts
    term_inventory: TermInventory
    term_order: List[List[str]]
    global_phase: float

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "BeamSplitter",
                "qubits": 4,
                "time": 1.0,
                "steps_requested": 1,
                "steps_used": [1],
                "exact": True,
                "target": "zx",
                "optimized": False,
                "naive_counts": {"single_qubit": 56, "rzx": 48, "cnot": 0, "total": 104},
                "final_counts": {"single_qubit": 56, "rzx": 48, "cnot": 0, "total": 104},
                "term_inventory": {"weight_1": 0, "weight_2": 0, "heavier": 8},
                "term_order": [["XXXX", "XXYY", "XYXY", "XYYX", "YXXY", "YXYX", "YYXX", "YYYY"]],
                "global_phase": 0.0,
            }
        }


class FockProbability(BaseModel):
    occupations: List[int]
    probability: float


class SimulationReport(BaseModel):
    """Relatório de simulação"""
    kind: str
    qubits: int
    initial: List[int]
    shots: int
    seed: int
    exact: bool
    leakage: float = Field(..., description="Probabilidade fora do espaço de código")
    fock_probabilities: List[FockProbability]
    marginals: List[float] = Field(..., description="P(qubit k = 1)")
    counts: Dict[str, int]
    mean_photons: List[float]
    gate_counts: GateCounts


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SuiteResult(BaseModel):
    suite: str
    passed: bool
    checks: List[CheckResult]


class VerificationSummary(BaseModel):
    """Resumo das suites de verificação"""
    passed: bool
    suites: List[SuiteResult]
    failed_suites: List[str] = Field(default_factory=list)


class ReckReport(BaseModel):
    modes: int
    layers: List[ReckLayer]
    output_phases: List[float]
    reconstruction_error: float


class ComparisonReport(BaseModel):
    """Circuito compilado versus oráculo de permanentes"""
    modes: int
    cutoff: int
    steps: int
    input: List[int]
    tv_distance: float
    leakage: float
    circuit_distribution: List[FockProbability]
    oracle_distribution: List[FockProbability]
    gate_counts: Optional[GateCounts] = None
