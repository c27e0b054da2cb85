"""
Configurações centralizadas da aplicação
"""
import os
from typing import Set

from dotenv import load_dotenv

# Carrega um .env local, se existir (variáveis já definidas têm prioridade)
load_dotenv()

# Configuração da API Key (opcional: sem chave, a API fica aberta)
VALID_API_KEY = os.getenv("BOQC_API_KEY") or None

# Rotas que não precisam de autenticação
EXCLUDED_PATHS: Set[str] = {
    "/",
    "/health",
    "/info",
    "/docs",
    "/openapi.json",
    "/redoc",
    "/favicon.ico",
}

# Tolerâncias numéricas
NUMERIC_CONFIG = {
    "prune_tolerance": 1e-12,
    "unitary_tolerance": 1e-10,
    "bogoliubov_tolerance": 1e-8,
    "angle_tolerance": 1e-12,
}

# Limites de tamanho (qubits, modos, fótons)
LIMITS_CONFIG = {
    "max_sim_qubits": int(os.getenv("BOQC_MAX_SIM_QUBITS", "24")),
    "max_matrix_qubits": int(os.getenv("BOQC_MAX_MATRIX_QUBITS", "12")),
    "max_cutoff": 7,
    "max_permanent_size": 16,
    "max_oracle_photons": 4,
    "max_oracle_modes": 6,
    "max_reck_modes": 8,
}

# Configurações da linha de comando e dos formatos de arquivo
CLI_CONFIG = {
    "model_format": "boqc-model/1",
    "circuit_format": "boqc-circuit/1",
    "default_shots": 2048,
    "default_seed": int(os.getenv("BOQC_SEED", "2048")),
    "default_steps": 1,
}

# Configurações de log
LOG_CONFIG = {
    "level": os.getenv("BOQC_LOG_LEVEL", "WARNING").upper(),
    "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
}

# Configurações de cache
CACHE_CONFIG = {
    "default_maxsize": int(os.getenv("BOQC_CACHE_MAXSIZE", "256")),
}

# Configurações da verificação (suites de invariantes)
VERIFY_CONFIG = {
    "suites": ["encoding", "algebra", "compiler", "oracle"],
    "hom_steps": 64,
    "hom_cutoff": 2,
    "random_seed": 20240,
}
