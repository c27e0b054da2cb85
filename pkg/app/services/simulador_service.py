"""
Serviço de simulação de vetor de estado
Responsabilidade: executar circuitos, montar unitárias densas e medir (marginais, amostras, vazamento, energia)
"""
import logging
import math
from typing import Dict, Tuple, Union

import numpy as np

from app.core.config import LIMITS_CONFIG
from app.core.exceptions import DimensionTooLarge, IndexOutOfRange, WidthMismatch
from app.models.circuito import Circuit, Gate, GateKind
from app.models.estado import StateVector
from app.models.fock import EncodedBasisState, FockRegister
from app.models.pauli import PauliSum, popcount, z_signs
from app.services.codificacao_service import CodificacaoBosonicaService as Cod, bits_from_index

logger = logging.getLogger(__name__)

_CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
_PHASES = (1, 1j, -1, -1j)


def gate_matrix(gate: Gate) -> np.ndarray:
    """Matriz da porta; para 2 qubits a base é |b_{q0} b_{q1}⟩ com q0 mais significativo."""
    if gate.kind is GateKind.CNOT:
        return _CNOT
    c, s = math.cos(gate.angle / 2), math.sin(gate.angle / 2)
    if gate.kind is GateKind.RX:
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if gate.kind is GateKind.RZ:
        return np.array([[c - 1j * s, 0], [0, c + 1j * s]], dtype=complex)
    c, s = math.cos(gate.angle), math.sin(gate.angle)
    return np.array([
        [c, 1j * s, 0, 0],
        [1j * s, c, 0, 0],
        [0, 0, c, -1j * s],
        [0, 0, -1j * s, c],
    ], dtype=complex)


def _apply_single(view: np.ndarray, matrix: np.ndarray, axis: int) -> None:
    index = [slice(None)] * view.ndim
    index[axis] = 0
    low = tuple(index)
    index[axis] = 1
    high = tuple(index)
    a0 = view[low].copy()
    a1 = view[high].copy()
    view[low] = matrix[0, 0] * a0 + matrix[0, 1] * a1
    view[high] = matrix[1, 0] * a0 + matrix[1, 1] * a1


def _apply_two(view: np.ndarray, matrix: np.ndarray, axis0: int, axis1: int) -> None:
    def idx(b0, b1):
        index = [slice(None)] * view.ndim
        index[axis0], index[axis1] = b0, b1
        return tuple(index)

    parts = [view[idx(b0, b1)].copy() for b0 in (0, 1) for b1 in (0, 1)]
    for row in range(4):
        b0, b1 = divmod(row, 2)
        acc = np.zeros_like(parts[0])
        for col in range(4):
            if matrix[row, col] != 0:
                acc += matrix[row, col] * parts[col]
        view[idx(b0, b1)] = acc


def apply_gates(buffer: np.ndarray, circuit: Circuit) -> None:
    """Aplica as portas in place; buffer tem forma (2^Q,) ou (2^Q, colunas)."""
    width = circuit.width
    view = buffer.reshape([2] * width + list(buffer.shape[1:]))
    for gate in circuit.gates:
        axes = [width - 1 - q for q in gate.qubits]
        matrix = gate_matrix(gate)
        if len(axes) == 1:
            _apply_single(view, matrix, axes[0])
        else:
            _apply_two(view, matrix, axes[0], axes[1])
    if circuit.global_phase:
        buffer *= np.exp(1j * circuit.global_phase)


class SimuladorService:
    """Execução densa de circuitos compilados"""

    @staticmethod
    def _check_sim_width(width: int) -> None:
        if width > LIMITS_CONFIG["max_sim_qubits"]:
            raise DimensionTooLarge(
                f"{width} qubits excede o limite de simulação de {LIMITS_CONFIG['max_sim_qubits']}",
                {"qubits": width},
            )

    @staticmethod
    def initial_state(initial: Union[EncodedBasisState, StateVector, FockRegister], width: int) -> StateVector:
        if isinstance(initial, FockRegister):
            initial = Cod.encode_fock(initial)
        if isinstance(initial, EncodedBasisState):
            if initial.width != width:
                raise WidthMismatch(
                    f"Estado de {initial.width} qubits para circuito de {width}",
                    {"estado": initial.width, "circuito": width},
                )
            return StateVector.basis(width, initial.index)
        if initial.width != width:
            raise WidthMismatch(
                f"Estado de {initial.width} qubits para circuito de {width}",
                {"estado": initial.width, "circuito": width},
            )
        return initial.copy()

    @staticmethod
    def run(c: Circuit, initial: Union[EncodedBasisState, StateVector, FockRegister]) -> StateVector:
        """
        Aplica as portas em sequência sobre uma cópia do estado inicial

        Raises:
            WidthMismatch: larguras diferentes
            DimensionTooLarge: Q acima do limite
        """
        SimuladorService._check_sim_width(c.width)
        state = SimuladorService.initial_state(initial, c.width)
        apply_gates(state.amplitudes, c)
        logger.debug("Circuito de %d portas executado em %d qubits", len(c), c.width)
        return state

    @staticmethod
    def unitary_of(c: Circuit) -> np.ndarray:
        """Produto das matrizes das portas vezes e^{i·global_phase}."""
        if c.width > LIMITS_CONFIG["max_matrix_qubits"]:
            raise DimensionTooLarge(
                f"Unitária de {c.width} qubits excede o limite de {LIMITS_CONFIG['max_matrix_qubits']}",
                {"qubits": c.width},
            )
        unitary = np.eye(1 << c.width, dtype=complex)
        apply_gates(unitary, c)
        return unitary

    @staticmethod
    def marginal_probability(v: StateVector, qubit: int, outcome: int) -> float:
        if not 0 <= qubit < v.width:
            raise IndexOutOfRange(f"Qubit {qubit} fora de [0, {v.width})", {"qubit": qubit})
        if outcome not in (0, 1):
            raise IndexOutOfRange(f"Resultado {outcome} deve ser 0 ou 1", {"resultado": outcome})
        indices = np.arange(1 << v.width, dtype=np.int64)
        mask = ((indices >> qubit) & 1) == outcome
        return float(np.clip(v.probabilities()[mask].sum(), 0.0, 1.0))

    @staticmethod
    def marginals(v: StateVector) -> list:
        """P(qubit k = 1) para cada qubit."""
        return [SimuladorService.marginal_probability(v, k, 1) for k in range(v.width)]

    @staticmethod
    def sample_counts(v: StateVector, shots: int, seed: int) -> Dict[str, int]:
        """Sorteio multinomial por CDF inversa; chaves com o qubit 0 à esquerda."""
        if shots < 1:
            raise ValueError("shots deve ser >= 1")
        probabilities = v.probabilities()
        cdf = np.cumsum(probabilities)
        cdf /= cdf[-1]
        rng = np.random.default_rng(seed)
        draws = np.searchsorted(cdf, rng.random(shots), side="right")
        draws = np.minimum(draws, len(cdf) - 1)
        values, counts = np.unique(draws, return_counts=True)
        histogram = {bits_from_index(int(index), v.width): int(count) for index, count in zip(values, counts)}
        return dict(sorted(histogram.items()))

    @staticmethod
    def leakage(v: StateVector, modes: int, cutoff: int) -> float:
        """1 − Σ |amplitude|² sobre as palavras de código."""
        expected = modes * (cutoff + 1)
        if v.width != expected:
            raise WidthMismatch(
                f"Estado de {v.width} qubits; esperado {expected} para M={modes}, N_P={cutoff}",
                {"estado": v.width, "esperado": expected},
            )
        inside = v.probabilities()[Cod.code_space_projector(modes, cutoff)].sum()
        return float(np.clip(1.0 - inside, 0.0, 1.0))

    @staticmethod
    def fock_distribution(v: StateVector, modes: int, cutoff: int) -> Dict[Tuple[int, ...], float]:
        """Probabilidade de cada palavra de código, indexada pelas ocupações."""
        probabilities = v.probabilities()
        return {
            tuple(Cod.decode_index(index, modes, cutoff).occupations): float(probabilities[index])
            for index in Cod.code_space_projector(modes, cutoff)
        }

    @staticmethod
    def expectation(v: StateVector, h: PauliSum) -> float:
        """⟨v|H|v⟩ termo a termo, sem montar a matriz."""
        if h.width != v.width:
            raise WidthMismatch(
                f"Operador de {h.width} qubits para estado de {v.width}",
                {"operador": h.width, "estado": v.width},
            )
        amplitudes = v.amplitudes
        indices = np.arange(1 << v.width, dtype=np.int64)
        total = 0j
        for term in h.terms:
            phase = term.coefficient * _PHASES[popcount(term.x_bits & term.z_bits) % 4]
            image = phase * z_signs(indices, term.z_bits) * amplitudes
            total += np.vdot(amplitudes[indices ^ term.x_bits], image)
        if abs(total.imag) > 1e-10:
            logger.warning("⚠️ Valor esperado com resíduo imaginário %.3e", total.imag)
        return float(total.real)
