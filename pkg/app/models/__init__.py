"""
Modelos de domínio e de entrada/saída
Responsabilidade: valores da álgebra (dataclasses) e documentos validados (pydantic)
"""

from app.models.common import (
    ErrorResponse,
    SuccessResponse,
    MessageResponse
)

from app.models.modelo import (
    MODEL_KINDS,
    BosonicModelSpec,
    ModelFile,
)

from app.models.relatorios import (
    CompileReport,
    SimulationReport,
    VerificationSummary,
    ReckReport,
    ComparisonReport,
)

__all__ = [
    # Common
    "ErrorResponse",
    "SuccessResponse",
    "MessageResponse",
    # Modelos
    "MODEL_KINDS",
    "BosonicModelSpec",
    "ModelFile",
    # Relatórios
    "CompileReport",
    "SimulationReport",
    "VerificationSummary",
    "ReckReport",
    "ComparisonReport",
]
