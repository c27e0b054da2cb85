"""
Router para as suites de verificação
"""
from fastapi import APIRouter, HTTPException

from app.core.config import VERIFY_CONFIG
from app.models.relatorios import VerificationSummary
from app.services.verificacao_service import VerificacaoService

router = APIRouter(prefix="/verify", tags=["Verificação"])


@router.get("/{suite}", response_model=VerificationSummary)
def run_suite(suite: str):
    """Executa uma suite (encoding, algebra, compiler, oracle) ou todas ('all')"""
    if suite != "all" and suite not in VERIFY_CONFIG["suites"]:
        raise HTTPException(status_code=404, detail=f"Suite desconhecida: {suite}")
    return VerificacaoService.run(suite)
