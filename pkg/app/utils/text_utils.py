"""
Utilitários para manipulação de texto
"""
import json
import logging
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

ENCODINGS = ["utf-8", "utf-8-sig", "iso-8859-1", "windows-1252", "latin1"]


def decode_upload(content: bytes) -> Optional[str]:
    """Tenta decodificar bytes com diferentes encodings; None se nenhum servir."""
    for encoding in ENCODINGS:
        try:
            text = content.decode(encoding)
            logger.debug("✅ Arquivo decodificado com sucesso usando: %s", encoding)
            return text.lstrip("\ufeff")
        except UnicodeDecodeError:
            continue
    return None


def to_json(data: Any) -> str:
    """JSON determinístico (chaves ordenadas, indentado)."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_format_value(v)}" for k, v in value.items())
    if isinstance(value, list) and value and all(isinstance(v, (int, float)) for v in value):
        return "[" + ", ".join(_format_value(v) for v in value) + "]"
    return str(value)


def human_report(title: str, data: Dict[str, Any]) -> str:
    """Relatório legível: uma linha 'chave: valor' por campo de primeiro nível."""
    width = max((len(key) for key in data), default=0)
    lines = [title, "=" * len(title)]
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend(f"  - {_format_value(item)}" for item in value)
        else:
            lines.append(f"{key.ljust(width)} : {_format_value(value)}")
    return "\n".join(lines) + "\n"
