"""
Leitura de arquivos de modelo enviados por upload
"""
from fastapi import UploadFile

from app.core.exceptions import SchemaError
from app.models.modelo import ModelFile
from app.services.pipeline_service import PipelineService
from app.utils.text_utils import decode_upload


def read_model_upload(file: UploadFile) -> ModelFile:
    """Decodifica o upload (vários encodings) e valida como boqc-model/1."""
    content = file.file.read()
    text = decode_upload(content)
    if text is None:
        raise SchemaError(
            "Não foi possível decodificar o arquivo. Certifique-se de que está em JSON válido.",
            {"arquivo": file.filename},
        )
    return PipelineService.parse_model_file(text)
