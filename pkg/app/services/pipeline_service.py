"""
Serviço de pipelines (compilar, simular, Reck) compartilhado pela CLI e pela API
"""
import logging
from typing import Optional, Tuple

import numpy as np
from pydantic import ValidationError

from app.core.config import CLI_CONFIG
from app.core.exceptions import SchemaError
from app.models.circuito import Circuit
from app.models.fock import FockRegister
from app.models.interferometro import MatrixFile
from app.models.modelo import ModelFile
from app.models.relatorios import (
    CompileReport,
    FockProbability,
    GateCounts,
    ReckReport,
    SimulationReport,
    TermInventory,
)
from app.services.codificacao_service import CodificacaoBosonicaService
from app.services.compilador_service import CompiladorService
from app.services.hamiltonianos_service import HamiltonianosService
from app.services.simulador_service import SimuladorService

logger = logging.getLogger(__name__)


def _validation_details(exc: ValidationError) -> dict:
    return {
        "erros": [
            {"campo": ".".join(str(p) for p in err["loc"]), "mensagem": err["msg"]}
            for err in exc.errors()
        ]
    }


class PipelineService:
    """Pipelines de ponta a ponta sobre um arquivo de modelo"""

    @staticmethod
    def parse_model_file(text: str) -> ModelFile:
        """
        Valida o documento JSON "boqc-model/1"

        Raises:
            SchemaError: JSON inválido, campo desconhecido ou parâmetro fora de formato
        """
        try:
            return ModelFile.model_validate_json(text)
        except ValidationError as exc:
            raise SchemaError("Arquivo de modelo inválido", _validation_details(exc)) from exc

    @staticmethod
    def parse_matrix_file(text: str) -> np.ndarray:
        """
        Lê {"R": [[...]]} (entradas número ou [re, im])

        Raises:
            SchemaError: documento inválido ou matriz não quadrada
        """
        try:
            return MatrixFile.model_validate_json(text).matrix()
        except ValidationError as exc:
            raise SchemaError("Arquivo de matriz inválido", _validation_details(exc)) from exc
        except ValueError as exc:
            raise SchemaError(f"Arquivo de matriz inválido: {exc}") from exc

    @staticmethod
    def compile_model(
        model_file: ModelFile,
        target: Optional[str] = None,
        optimize: Optional[bool] = None,
        steps: Optional[int] = None,
    ) -> Tuple[Circuit, CompileReport]:
        """
        Raises:
            CutoffExceeded: ocupação inicial declarada acima de N_P
        """
        model = model_file.model
        CodificacaoBosonicaService.encode_fock(FockRegister(tuple(model_file.initial_occupations()), model.cutoff))
        target = target or model_file.target
        optimize = model_file.optimize if optimize is None else optimize
        steps = steps or model_file.steps
        circuit = CompiladorService.compile(model, model_file.time, steps, target, optimize)
        meta = circuit.metadata
        report = CompileReport(
            kind=meta["kind"],
            qubits=circuit.width,
            time=meta["time"],
            steps_requested=meta["steps_requested"],
            steps_used=meta["steps_used"],
            exact=meta["exact"],
            target=meta["target"],
            optimized=meta["optimized"],
            naive_counts=GateCounts(**meta["naive_counts"]),
            final_counts=GateCounts(**meta["final_counts"]),
            term_inventory=TermInventory(**meta["term_inventory"]),
            term_order=meta["term_order"],
            global_phase=circuit.global_phase,
        )
        return circuit, report

    @staticmethod
    def simulate_model(
        model_file: ModelFile,
        shots: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> SimulationReport:
        """
        Compila, executa a partir das ocupações iniciais e mede

        Raises:
            CutoffExceeded: ocupação inicial acima de N_P
        """
        shots = shots or model_file.shots
        if seed is None:
            seed = model_file.seed if model_file.seed is not None else CLI_CONFIG["default_seed"]
        model = model_file.model
        modes, cutoff = model.encoded_modes, model.cutoff
        initial = FockRegister(tuple(model_file.initial_occupations()), cutoff)
        encoded = CodificacaoBosonicaService.encode_fock(initial)

        circuit, _ = PipelineService.compile_model(model_file)
        state = SimuladorService.run(circuit, encoded)
        distribution = SimuladorService.fock_distribution(state, modes, cutoff)
        mean_photons = [
            SimuladorService.expectation(state, CodificacaoBosonicaService.map_number(j, modes, cutoff))
            for j in range(modes)
        ]
        report = SimulationReport(
            kind=model.kind,
            qubits=circuit.width,
            initial=list(initial.occupations),
            shots=shots,
            seed=seed,
            exact=circuit.metadata["exact"],
            leakage=SimuladorService.leakage(state, modes, cutoff),
            fock_probabilities=[
                FockProbability(occupations=list(occ), probability=p)
                for occ, p in sorted(distribution.items())
                if p > 1e-12
            ],
            marginals=SimuladorService.marginals(state),
            counts=SimuladorService.sample_counts(state, shots, seed),
            mean_photons=mean_photons,
            gate_counts=GateCounts(**circuit.counts()),
        )
        logger.info("✅ Simulação concluída: %s, vazamento=%.3e", model.kind, report.leakage)
        return report

    @staticmethod
    def reck_report(R: np.ndarray) -> ReckReport:
        mesh = HamiltonianosService.reck_decompose(R)
        error = float(np.linalg.norm(HamiltonianosService.reconstruct(mesh) - np.asarray(R, dtype=complex)))
        return ReckReport(
            modes=mesh.modes,
            layers=mesh.layers,
            output_phases=mesh.output_phases,
            reconstruction_error=error,
        )
