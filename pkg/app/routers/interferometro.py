"""
Router para a fatoração de Reck de interferômetros
"""
from fastapi import APIRouter

from app.core.config import CLI_CONFIG
from app.core.exceptions import SchemaError
from app.models.common import ErrorResponse
from app.models.interferometro import MatrixFile
from app.models.relatorios import ReckReport
from app.services.hamiltonianos_service import HamiltonianosService
from app.services.pipeline_service import PipelineService

router = APIRouter(prefix="/reck", tags=["Interferômetro"], responses={422: {"model": ErrorResponse}})


@router.post("", response_model=ReckReport)
def reck(body: MatrixFile):
    """Fatora R em M(M-1)/2 camadas e fases de saída"""
    try:
        R = body.matrix()
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    return PipelineService.reck_report(R)


@router.get("/haar/{modes}", response_model=ReckReport)
def reck_haar(modes: int, seed: int = CLI_CONFIG["default_seed"]):
    """Fatora uma unitária de Haar semeada"""
    return PipelineService.reck_report(HamiltonianosService.haar_random_unitary(modes, seed))
