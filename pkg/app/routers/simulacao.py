"""
Router para simulação de modelos compilados
"""
from typing import Optional

from fastapi import APIRouter, UploadFile, File

from app.models.common import ErrorResponse
from app.models.relatorios import SimulationReport
from app.routers._upload import read_model_upload
from app.services.pipeline_service import PipelineService

router = APIRouter(tags=["Simulação"], responses={422: {"model": ErrorResponse}})


@router.post("/simulate", response_model=SimulationReport)
def simulate_model(file: UploadFile = File(...), shots: Optional[int] = None, seed: Optional[int] = None):
    """
    Compila, simula a partir de 'initial' e amostra 'shots' disparos com semente fixa
    """
    model_file = read_model_upload(file)
    return PipelineService.simulate_model(model_file, shots, seed)
