"""
Router para endpoints de sistema (raiz, health, info)
"""
from datetime import datetime

from fastapi import APIRouter

from app.core.cache import cache_stats
from app.core.config import CLI_CONFIG, LIMITS_CONFIG, VERIFY_CONFIG
from app.models.common import MessageResponse
from app.models.modelo import MODEL_KINDS

router = APIRouter(tags=["Sistema"])


@router.get("/", response_model=MessageResponse)
def root():
    """Rota raiz da API"""
    return MessageResponse(message="API boqc está funcionando corretamente")


@router.get("/health")
def health():
    """Verificação simples de disponibilidade"""
    return {"status": "ok", "timestamp": datetime.now().isoformat()}


@router.get("/info")
def info():
    """Formatos aceitos, tipos de modelo, limites e rotas disponíveis"""
    return {
        "model_format": CLI_CONFIG["model_format"],
        "circuit_format": CLI_CONFIG["circuit_format"],
        "model_kinds": list(MODEL_KINDS),
        "targets": ["zx", "cnot"],
        "suites": VERIFY_CONFIG["suites"] + ["all"],
        "limits": dict(LIMITS_CONFIG),
        "caches": cache_stats(),
        "routes_available": [
            "POST /compile - Compila um arquivo de modelo (upload)",
            "POST /hamiltonian - Expansão de Pauli do modelo (upload)",
            "POST /simulate - Simula e amostra um arquivo de modelo (upload)",
            "GET /verify/{suite} - Executa suites de verificação",
            "POST /reck - Fatoração de Reck de uma matriz",
            "GET /reck/haar/{modes}?seed= - Fatoração de uma unitária de Haar",
        ],
    }
