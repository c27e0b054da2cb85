"""
API boqc
Arquivo principal da aplicação FastAPI (mesmos serviços da linha de comando)
"""
import logging

from fastapi import FastAPI, Request, HTTPException
from fastapi.responses import JSONResponse
from fastapi.middleware.cors import CORSMiddleware

from app.core.config import VALID_API_KEY, EXCLUDED_PATHS
from app.core.exceptions import BoqcError
from app.core.log import configure_logging

from app.routers import compilacao, interferometro, simulacao, sistema, verificacao

logger = logging.getLogger(__name__)

app = FastAPI(
    title="API boqc",
    description="Compilação de Hamiltonianos bosônicos em circuitos de qubits, simulação e verificação",
    version="1.0.0"
)


# ========================================
# MIDDLEWARE: Validação de API Key (apenas se BOQC_API_KEY estiver definida)
# ========================================
@app.middleware("http")
async def api_key_middleware(request: Request, call_next):
    """
    Middleware para validar API key em todas as rotas exceto as excluídas
    """
    if not VALID_API_KEY or request.url.path in EXCLUDED_PATHS:
        return await call_next(request)

    api_key = request.query_params.get("api_key")
    if not api_key:
        logger.warning("❌ Nenhuma API key fornecida para %s", request.url.path)
        return JSONResponse(
            status_code=401,
            content={
                "error": "API key é obrigatória",
                "detail": "Adicione ?api_key=sua-chave na URL",
            }
        )
    if api_key != VALID_API_KEY:
        logger.warning("❌ API key inválida para %s", request.url.path)
        return JSONResponse(
            status_code=401,
            content={
                "error": "API key inválida",
                "detail": "Verifique se você está usando a API key correta"
            }
        )
    return await call_next(request)


@app.on_event("startup")
async def startup_event():
    """Evento executado quando a aplicação inicia"""
    configure_logging()
    logger.info("🚀 API boqc pronta para receber requisições")


app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


# ========================================
# EXCEPTION HANDLERS
# ========================================
@app.exception_handler(HTTPException)
async def http_exception_handler(request, exc):
    return JSONResponse(status_code=exc.status_code, content={"return": exc.detail})


@app.exception_handler(BoqcError)
async def boqc_exception_handler(request, exc: BoqcError):
    logger.warning("❌ %s em %s: %s", type(exc).__name__, request.url.path, exc.message)
    return JSONResponse(status_code=422, content=exc.to_dict())


# ========================================
# ROUTERS
# ========================================
app.include_router(sistema.router)
app.include_router(compilacao.router)
app.include_router(simulacao.router)
app.include_router(verificacao.router)
app.include_router(interferometro.router)


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
