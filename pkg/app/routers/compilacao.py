"""
Router para compilação de modelos bosônicos em circuitos
"""
from typing import Literal, Optional

from fastapi import APIRouter, UploadFile, File

from app.models.common import ErrorResponse, SuccessResponse
from app.routers._upload import read_model_upload
from app.services.hamiltonianos_service import HamiltonianosService
from app.services.pipeline_service import PipelineService
from app.utils.serializacao import dumps_circuit, to_qasm

router = APIRouter(tags=["Compilação"], responses={422: {"model": ErrorResponse}})


@router.post("/compile", response_model=SuccessResponse)
def compile_model(
    file: UploadFile = File(...),
    target: Optional[Literal["zx", "cnot"]] = None,
    optimize: Optional[bool] = None,
    steps: Optional[int] = None,
    qasm: bool = False,
):
    """
    Compila um arquivo boqc-model/1 em circuito

    Parâmetros:
    - file: Arquivo JSON do modelo
    - target, optimize, steps: sobrescrevem os valores do arquivo
    - qasm: inclui a exportação OpenQASM 2.0
    """
    model_file = read_model_upload(file)
    circuit, report = PipelineService.compile_model(model_file, target, optimize, steps)
    data = {"circuit": dumps_circuit(circuit), "report": report.model_dump()}
    if qasm:
        data["qasm"] = to_qasm(circuit)
    return SuccessResponse(message="Circuito compilado com sucesso", data=data)


@router.post("/hamiltonian", response_model=SuccessResponse)
def render_hamiltonian(file: UploadFile = File(...)):
    """Expansão de Pauli do modelo, uma string por linha"""
    model_file = read_model_upload(file)
    h = HamiltonianosService.hamiltonian(model_file.model)
    return SuccessResponse(
        message=f"{len(h)} strings de Pauli em {h.width} qubits",
        data={"qubits": h.width, "terms": len(h), "render": h.render()},
    )
