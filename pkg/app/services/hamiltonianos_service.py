"""
Serviço da biblioteca de Hamiltonianos
Responsabilidade: construir os modelos bosônicos como PauliSums sobre o registro codificado,
fatorar interferômetros (Reck) e decompor redes de Bogoliubov
"""
import cmath
import logging
import math
from typing import List, Sequence

import numpy as np

from app.core.config import LIMITS_CONFIG, NUMERIC_CONFIG
from app.core.exceptions import (
    DimensionTooLarge,
    ModeIndexOutOfRange,
    NonUnitary,
    NotSymplectic,
    ShapeMismatch,
    UnsupportedBogoliubov,
)
from app.models.interferometro import InterferometerSpec, ReckLayer
from app.models.modelo import (
    BeamSplitterSpec,
    BilinearSpec,
    BogoliubovSpec,
    BosonSamplingSpec,
    InterferometerModelSpec,
    MolecularSpec,
    PhaseShifterSpec,
    TwoModeSqueezerSpec,
)
from app.models.pauli import PauliSum
from app.services.codificacao_service import CodificacaoBosonicaService as Cod
from app.utils.matrix_utils import unitarity_error

logger = logging.getLogger(__name__)


def _check_pair(i: int, j: int, modes: int) -> None:
    if i == j or not (0 <= i < modes and 0 <= j < modes):
        raise ModeIndexOutOfRange(
            f"Par de modos inválido ({i}, {j}) para M={modes}",
            {"i": i, "j": j, "modos": modes},
        )


def _check_unitary(matrix: np.ndarray, name: str = "R") -> None:
    tol = NUMERIC_CONFIG["unitary_tolerance"]
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NonUnitary(f"{name} não é quadrada: formato {matrix.shape}", {"formato": list(matrix.shape)})
    error = unitarity_error(matrix)
    if error >= tol:
        raise NonUnitary(f"{name} não é unitária: ‖R†R − I‖ = {error:.3e}", {"erro": error})


def _layer_matrix(layer: ReckLayer, modes: int) -> np.ndarray:
    """T(i, j, θ, φ) = B(θ)·P_j(φ) no espaço de uma partícula."""
    out = np.eye(modes, dtype=complex)
    c, s = math.cos(layer.theta), math.sin(layer.theta)
    e = cmath.exp(1j * layer.phi)
    i, j = layer.i, layer.j
    out[i, i] = c
    out[i, j] = 1j * s * e
    out[j, i] = 1j * s
    out[j, j] = c * e
    return out


class HamiltonianosService:
    """Construtores dos modelos bosônicos"""

    @staticmethod
    def beam_splitter(i: int, j: int, epsilon: float, modes: int, cutoff: int, phase: float = 0.0) -> PauliSum:
        """Gerador ε(e^{iϕ} b_i†b_j + h.c.)."""
        _check_pair(i, j, modes)
        coupling = epsilon * cmath.exp(1j * phase)
        hop = Cod.map_creation(i, modes, cutoff) * Cod.map_annihilation(j, modes, cutoff)
        return (hop.scaled(coupling) + hop.adjoint().scaled(coupling.conjugate())).simplify()

    @staticmethod
    def two_mode_squeezer(i: int, j: int, beta: float, modes: int, cutoff: int, phase: float = 0.0) -> PauliSum:
        """Gerador β(−i e^{iϕ} a_i†a_j† + h.c.); sob e^{iG}, a_i -> cosh β a_i + e^{iϕ} sinh β a_j†."""
        _check_pair(i, j, modes)
        coupling = -1j * beta * cmath.exp(1j * phase)
        pair = Cod.map_creation(i, modes, cutoff) * Cod.map_creation(j, modes, cutoff)
        return (pair.scaled(coupling) + pair.adjoint().scaled(coupling.conjugate())).simplify()

    @staticmethod
    def bilinear(i: int, j: int, g_bs: float, g_tms: float, modes: int, cutoff: int) -> PauliSum:
        return (
            HamiltonianosService.beam_splitter(i, j, g_bs, modes, cutoff)
            + HamiltonianosService.two_mode_squeezer(i, j, g_tms, modes, cutoff)
        )

    @staticmethod
    def phase_shifter(j: int, phi: float, modes: int, cutoff: int) -> PauliSum:
        return Cod.map_number(j, modes, cutoff).scaled(phi)

    @staticmethod
    def molecular_fragments(omega: Sequence[float], chi: Sequence[float], modes: int, cutoff: int) -> List[PauliSum]:
        """[ω_0 n_0, χ_0 n_0², ω_1 n_1, ...] sem fundir os fragmentos."""
        if len(omega) != modes or len(chi) != modes:
            raise ShapeMismatch(
                f"omega e chi devem ter comprimento {modes}",
                {"omega": len(omega), "chi": len(chi), "modos": modes},
            )
        fragments = []
        for j in range(modes):
            fragments.append(Cod.map_number(j, modes, cutoff).scaled(omega[j]))
            fragments.append(Cod.map_number_squared(j, modes, cutoff).scaled(chi[j]))
        return fragments

    @staticmethod
    def molecular(omega: Sequence[float], chi: Sequence[float], modes: int, cutoff: int) -> PauliSum:
        """Σ_j ω_j n_j + χ_j n_j² (diagonal)."""
        total = PauliSum.zero(modes * (cutoff + 1))
        for fragment in HamiltonianosService.molecular_fragments(omega, chi, modes, cutoff):
            total = total + fragment
        return total

    @staticmethod
    def boson_sampling_hamiltonian(R: np.ndarray, omega: float, cutoff: int) -> PauliSum:
        """
        H = Σ_{ij} (R_ji b_j† a_i + h.c.) + ω Σ (b†b + a†a)

        Registro a nos modos 0..M-1 e registro b nos modos M..2M-1.
        """
        R = np.asarray(R, dtype=complex)
        _check_unitary(R)
        size = R.shape[0]
        modes = 2 * size
        total = PauliSum.zero(modes * (cutoff + 1))
        for j in range(size):
            for i in range(size):
                value = R[j, i]
                if abs(value) < NUMERIC_CONFIG["prune_tolerance"]:
                    continue
                total = total + HamiltonianosService.beam_splitter(
                    size + j, i, abs(value), modes, cutoff, phase=cmath.phase(value)
                )
        if omega:
            total = total + Cod.total_number(modes, cutoff).scaled(omega)
        logger.debug("H de amostragem de bósons: %d strings em %d qubits", len(total), total.width)
        return total

    @staticmethod
    def reck_decompose(R: np.ndarray) -> InterferometerSpec:
        """
        Eliminação triangular por colunas: R = D·T_L···T_1

        Para cada linha r (de baixo para cima) zera W[r, q], q < r, misturando as
        colunas q e r; cada mistura é registrada como T(q, r, θ, φ).
        """
        R = np.asarray(R, dtype=complex)
        _check_unitary(R)
        modes = R.shape[0]
        if modes > LIMITS_CONFIG["max_reck_modes"]:
            raise DimensionTooLarge(
                f"Reck limitado a {LIMITS_CONFIG['max_reck_modes']} modos (recebido {modes})",
                {"modos": modes},
            )
        W = R.copy()
        layers: List[ReckLayer] = []
        for r in range(modes - 1, 0, -1):
            p = r
            for q in range(r):
                a, b = W[r, p], W[r, q]
                theta = math.atan2(abs(b), abs(a))
                if abs(a) == 0 or abs(b) == 0:
                    phi = 0.0
                else:
                    phi = cmath.phase(a) - cmath.phase(b) + math.pi / 2
                    phi = cmath.phase(cmath.exp(1j * phi))
                c, s = math.cos(theta), math.sin(theta)
                e = cmath.exp(-1j * phi)
                mix = np.array([[c * e, -1j * s * e], [-1j * s, c]], dtype=complex)
                W[:, [p, q]] = W[:, [p, q]] @ mix
                layers.append(ReckLayer(i=q, j=p, theta=theta, phi=phi))
        output_phases = [float(cmath.phase(W[k, k])) for k in range(modes)]
        return InterferometerSpec.from_matrix(R, layers, output_phases)

    @staticmethod
    def reconstruct(spec: InterferometerSpec) -> np.ndarray:
        """D·T_L···T_1 a partir das camadas."""
        modes = spec.modes
        out = np.eye(modes, dtype=complex)
        for layer in spec.layers:
            out = _layer_matrix(layer, modes) @ out
        return np.diag(np.exp(1j * np.asarray(spec.output_phases, dtype=float))) @ out

    @staticmethod
    def haar_random_unitary(modes: int, seed: int) -> np.ndarray:
        """
        QR de uma gaussiana complexa semeada, com diagonal de R real positiva

        Raises:
            ShapeMismatch: modes < 1
            DimensionTooLarge: modes acima de max_reck_modes
        """
        if modes < 1:
            raise ShapeMismatch(f"Número de modos deve ser >= 1 (recebido {modes})", {"modos": modes})
        if modes > LIMITS_CONFIG["max_reck_modes"]:
            raise DimensionTooLarge(
                f"Haar limitado a {LIMITS_CONFIG['max_reck_modes']} modos (recebido {modes})",
                {"modos": modes},
            )
        rng = np.random.default_rng(seed)
        z = (rng.standard_normal((modes, modes)) + 1j * rng.standard_normal((modes, modes))) / math.sqrt(2)
        q, r = np.linalg.qr(z)
        d = np.diag(r)
        return q * (d / np.abs(d))

    @staticmethod
    def bogoliubov_network(alpha: np.ndarray, beta: np.ndarray, cutoff: int = 1) -> list:
        """
        Decompõe a -> α a + β a† em divisores de feixe, deslocadores de fase e compressores

        Raises:
            ShapeMismatch: α e β com formatos diferentes ou não quadrados
            NotSymplectic: αα† − ββ† ≠ I ou αβᵀ ≠ βαᵀ
            UnsupportedBogoliubov: fora das estruturas em blocos suportadas
        """
        alpha = np.asarray(alpha, dtype=complex)
        beta = np.asarray(beta, dtype=complex)
        if alpha.ndim != 2 or alpha.shape[0] != alpha.shape[1] or alpha.shape != beta.shape:
            raise ShapeMismatch(
                "α e β devem ser quadradas e do mesmo tamanho",
                {"alpha": list(alpha.shape), "beta": list(beta.shape)},
            )
        tol = NUMERIC_CONFIG["bogoliubov_tolerance"]
        modes = alpha.shape[0]
        identity = np.eye(modes)
        norm_error = float(np.linalg.norm(alpha @ alpha.conj().T - beta @ beta.conj().T - identity))
        sym_error = float(np.linalg.norm(alpha @ beta.T - beta @ alpha.T))
        if norm_error > tol or sym_error > tol:
            raise NotSymplectic(
                "Restrições de Bogoliubov violadas",
                {"erro_normalizacao": norm_error, "erro_simetria": sym_error},
            )

        if np.linalg.norm(beta) <= tol:
            return HamiltonianosService._passive_network(alpha, cutoff)
        return HamiltonianosService._squeezing_network(alpha, beta, cutoff)

    @staticmethod
    def _passive_network(alpha: np.ndarray, cutoff: int) -> list:
        tol = NUMERIC_CONFIG["bogoliubov_tolerance"]
        modes = alpha.shape[0]
        if np.linalg.norm(alpha - np.eye(modes)) <= tol:
            return []
        a01 = alpha[0, 1] if modes == 2 else 0
        if (
            modes == 2
            and abs(alpha[0, 0].imag) <= tol
            and abs(alpha[0, 0] - alpha[1, 1]) <= tol
            and abs(alpha[1, 0] + np.conj(a01)) <= tol
            and abs(a01) > tol
        ):
            epsilon = math.atan2(abs(a01), alpha[0, 0].real)
            phase = cmath.phase(a01) - math.pi / 2
            return [BeamSplitterSpec(modes=2, cutoff=cutoff, i=0, j=1, epsilon=epsilon, phase=phase)]

        mesh = HamiltonianosService.reck_decompose(alpha)
        specs = []
        for layer in mesh.layers:
            if abs(layer.phi) > tol:
                specs.append(PhaseShifterSpec(modes=modes, cutoff=cutoff, j=layer.j, phi=layer.phi))
            if abs(layer.theta) > tol:
                specs.append(BeamSplitterSpec(
                    modes=modes, cutoff=cutoff, i=layer.i, j=layer.j, epsilon=layer.theta
                ))
        for k, phi in enumerate(mesh.output_phases):
            if abs(phi) > tol:
                specs.append(PhaseShifterSpec(modes=modes, cutoff=cutoff, j=k, phi=phi))
        return specs

    @staticmethod
    def _squeezing_network(alpha: np.ndarray, beta: np.ndarray, cutoff: int) -> list:
        tol = NUMERIC_CONFIG["bogoliubov_tolerance"]
        modes = alpha.shape[0]
        unsupported = UnsupportedBogoliubov(
            "Somente compressões em pares (α diagonal cosh r, β anti-diagonal por par) são suportadas",
            {"modos": modes},
        )
        if np.linalg.norm(alpha - np.diag(np.diag(alpha))) > tol:
            raise unsupported
        specs = []
        seen = set()
        for i in range(modes):
            partners = [j for j in range(modes) if abs(beta[i, j]) > tol]
            if not partners:
                if abs(alpha[i, i] - 1) > tol:
                    raise unsupported
                continue
            if len(partners) != 1 or partners[0] == i:
                raise unsupported
            j = partners[0]
            if (min(i, j), max(i, j)) in seen:
                continue
            seen.add((min(i, j), max(i, j)))
            value = beta[i, j]
            r = math.asinh(abs(value))
            if (
                abs(beta[j, i] - value) > tol
                or abs(alpha[i, i] - math.cosh(r)) > tol
                or abs(alpha[j, j] - math.cosh(r)) > tol
            ):
                raise unsupported
            specs.append(TwoModeSqueezerSpec(
                modes=modes, cutoff=cutoff, i=min(i, j), j=max(i, j), beta=r, phase=cmath.phase(value)
            ))
        return specs

    @staticmethod
    def hamiltonian(spec) -> PauliSum:
        """Hamiltoniano total de uma especificação (soma de todos os fragmentos)."""
        total = PauliSum.zero(spec.width)
        for segment in HamiltonianosService.segments(spec):
            for fragment in segment:
                total = total + fragment
        return total

    @staticmethod
    def segments(spec) -> List[List[PauliSum]]:
        """
        Segmentos sequenciais de fragmentos; cada segmento é trotterizado em conjunto

        Para Interferometer e Bogoliubov a transformação completa é realizada em t = 1.
        """
        if isinstance(spec, BeamSplitterSpec):
            return [[HamiltonianosService.beam_splitter(
                spec.i, spec.j, spec.epsilon, spec.modes, spec.cutoff, spec.phase
            )]]
        if isinstance(spec, TwoModeSqueezerSpec):
            return [[HamiltonianosService.two_mode_squeezer(
                spec.i, spec.j, spec.beta, spec.modes, spec.cutoff, spec.phase
            )]]
        if isinstance(spec, BilinearSpec):
            return [[HamiltonianosService.bilinear(spec.i, spec.j, spec.g_bs, spec.g_tms, spec.modes, spec.cutoff)]]
        if isinstance(spec, PhaseShifterSpec):
            return [[HamiltonianosService.phase_shifter(spec.j, spec.phi, spec.modes, spec.cutoff)]]
        if isinstance(spec, MolecularSpec):
            return [HamiltonianosService.molecular_fragments(spec.omega, spec.chi, spec.modes, spec.cutoff)]
        if isinstance(spec, BosonSamplingSpec):
            return [[HamiltonianosService.boson_sampling_hamiltonian(spec.matrix(), spec.omega, spec.cutoff)]]
        if isinstance(spec, InterferometerModelSpec):
            return HamiltonianosService.interferometer_segments(
                HamiltonianosService.reck_decompose(spec.matrix()), spec.cutoff
            )
        if isinstance(spec, BogoliubovSpec):
            segments = []
            for part in HamiltonianosService.bogoliubov_network(spec.alpha_matrix(), spec.beta_matrix(), spec.cutoff):
                segments.extend(HamiltonianosService.segments(part))
            return segments
        raise ShapeMismatch(f"Tipo de modelo desconhecido: {type(spec).__name__}")

    @staticmethod
    def interferometer_segments(mesh: InterferometerSpec, cutoff: int) -> List[List[PauliSum]]:
        """Por camada: [fase φ no pivô], [divisor θ]; por fim as fases de saída juntas."""
        modes = mesh.modes
        tol = NUMERIC_CONFIG["angle_tolerance"]
        segments: List[List[PauliSum]] = []
        for layer in mesh.layers:
            if abs(layer.phi) > tol:
                segments.append([HamiltonianosService.phase_shifter(layer.j, layer.phi, modes, cutoff)])
            if abs(layer.theta) > tol:
                segments.append([HamiltonianosService.beam_splitter(layer.i, layer.j, layer.theta, modes, cutoff)])
        phases = [
            HamiltonianosService.phase_shifter(k, phi, modes, cutoff)
            for k, phi in enumerate(mesh.output_phases)
            if abs(phi) > tol
        ]
        if phases:
            segments.append(phases)
        return segments
