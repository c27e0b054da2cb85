"""
Configuração de log
"""
import logging
import sys

from app.core.config import LOG_CONFIG


def configure_logging(level: str = None) -> None:
    """Configura o logger raiz uma única vez, em stderr (stdout fica para os relatórios)."""
    logging.basicConfig(
        level=getattr(logging, (level or LOG_CONFIG["level"]).upper(), logging.WARNING),
        format=LOG_CONFIG["format"],
        stream=sys.stderr,
    )
