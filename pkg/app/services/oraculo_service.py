"""
Serviço do oráculo de permanentes
Responsabilidade: referência independente para óptica linear com poucos modos
"""
import logging
import math
from typing import Iterator, Sequence, Tuple

import numpy as np

from app.core.config import LIMITS_CONFIG
from app.core.exceptions import CutoffExceeded, DimensionTooLarge, ShapeMismatch
from app.models.distribuicao import OutputDistribution, total_variation
from app.models.fock import FockRegister
from app.models.modelo import InterferometerModelSpec, from_complex_matrix
from app.models.relatorios import ComparisonReport, FockProbability, GateCounts
from app.services.compilador_service import CompiladorService
from app.services.simulador_service import SimuladorService

logger = logging.getLogger(__name__)


def fixed_sum_tuples(length: int, total: int) -> Iterator[Tuple[int, ...]]:
    """Tuplas de comprimento dado com soma fixa, em ordem lexicográfica."""
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in fixed_sum_tuples(length - 1, total - first):
            yield (first,) + rest


def _repeat_indices(occupations: Sequence[int]) -> list:
    return [mode for mode, count in enumerate(occupations) for _ in range(count)]


class OraculoPermanenteService:
    """Permanentes e distribuições exatas de amostragem de bósons"""

    @staticmethod
    def permanent(A: np.ndarray) -> complex:
        """
        Fórmula de Ryser em ordem de código de Gray

        Raises:
            DimensionTooLarge: n acima de LIMITS_CONFIG['max_permanent_size']
        """
        A = np.asarray(A, dtype=complex)
        n = A.shape[0]
        if A.ndim != 2 or A.shape[1] != n:
            raise ValueError(f"Matriz deve ser quadrada, recebida {A.shape}")
        if n > LIMITS_CONFIG["max_permanent_size"]:
            raise DimensionTooLarge(
                f"Permanente {n}x{n} excede o limite de {LIMITS_CONFIG['max_permanent_size']}",
                {"n": n},
            )
        if n == 0:
            return 1.0 + 0j
        row_sums = np.zeros(n, dtype=complex)
        total = 0j
        previous = 0
        for k in range(1, 1 << n):
            gray = k ^ (k >> 1)
            diff = gray ^ previous
            column = diff.bit_length() - 1
            if gray & diff:
                row_sums += A[:, column]
            else:
                row_sums -= A[:, column]
            sign = -1 if bin(gray).count("1") % 2 else 1
            total += sign * np.prod(row_sums)
            previous = gray
        return complex((-1) ** n * total)

    @staticmethod
    def transition_amplitude(R: np.ndarray, inputs: Sequence[int], outputs: Sequence[int]) -> complex:
        """Perm(R[t, s]) / √(∏ s! ∏ t!) com |l⟩ -> Σ_k R_kl |k⟩."""
        rows = _repeat_indices(outputs)
        cols = _repeat_indices(inputs)
        sub = np.asarray(R, dtype=complex)[np.ix_(rows, cols)]
        norm = math.prod(math.factorial(n) for n in inputs) * math.prod(math.factorial(n) for n in outputs)
        return OraculoPermanenteService.permanent(sub) / math.sqrt(norm)

    @staticmethod
    def output_distribution(R: np.ndarray, inputs: Sequence[int]) -> OutputDistribution:
        """
        Distribuição completa sobre as saídas com o mesmo número total de fótons

        Raises:
            DimensionTooLarge: mais de 4 fótons ou mais de 6 modos
        """
        R = np.asarray(R, dtype=complex)
        modes = R.shape[0]
        photons = int(sum(inputs))
        if len(inputs) != modes:
            raise ShapeMismatch(f"Entrada com {len(inputs)} modos para matriz {modes}x{modes}")
        if photons > LIMITS_CONFIG["max_oracle_photons"] or modes > LIMITS_CONFIG["max_oracle_modes"]:
            raise DimensionTooLarge(
                f"Oráculo limitado a {LIMITS_CONFIG['max_oracle_photons']} fótons e "
                f"{LIMITS_CONFIG['max_oracle_modes']} modos",
                {"fotons": photons, "modos": modes},
            )
        entries = {}
        for outputs in fixed_sum_tuples(modes, photons):
            amplitude = OraculoPermanenteService.transition_amplitude(R, inputs, outputs)
            entries[outputs] = float(abs(amplitude) ** 2)
        return OutputDistribution(entries=entries, input=tuple(int(n) for n in inputs), R=R)

    @staticmethod
    def pair_probability_untruncated(beta: float) -> float:
        """P(|1,1⟩) do vácuo comprimido de dois modos sem truncamento: tanh²β/cosh²β."""
        return math.tanh(beta) ** 2 / math.cosh(beta) ** 2

    @staticmethod
    def mean_photons_untruncated(beta: float) -> float:
        """Número médio de fótons por modo sem truncamento: sinh²β."""
        return math.sinh(beta) ** 2

    @staticmethod
    def compare_with_circuit(R: np.ndarray, inputs: Sequence[int], cutoff: int, steps: int) -> ComparisonReport:
        """
        Compila a malha de Reck de R, simula, decodifica e compara com o oráculo

        As probabilidades do circuito são renormalizadas por (1 − vazamento); o vazamento
        é reportado junto da distância de variação total.

        Raises:
            CutoffExceeded: N_P menor que o número total de fótons
        """
        R = np.asarray(R, dtype=complex)
        modes = R.shape[0]
        photons = int(sum(inputs))
        if cutoff < photons:
            raise CutoffExceeded(
                f"N_P={cutoff} menor que o total de {photons} fótons",
                {"cutoff": cutoff, "fotons": photons},
            )
        oracle = OraculoPermanenteService.output_distribution(R, inputs)
        spec = InterferometerModelSpec(modes=modes, cutoff=cutoff, R=from_complex_matrix(R))
        circuit = CompiladorService.compile(spec, t=1.0, s=steps, target="zx", optimize=True)
        state = SimuladorService.run(circuit, FockRegister(tuple(inputs), cutoff))
        leakage = SimuladorService.leakage(state, modes, cutoff)
        raw = SimuladorService.fock_distribution(state, modes, cutoff)
        kept = 1.0 - leakage
        circuit_dist = {occ: p / kept for occ, p in raw.items()} if kept > 0 else raw
        tv = total_variation(circuit_dist, oracle.entries)
        logger.info("📊 Comparação com o oráculo: TV=%.3e, vazamento=%.3e (s=%d)", tv, leakage, steps)
        return ComparisonReport(
            modes=modes,
            cutoff=cutoff,
            steps=steps,
            input=list(inputs),
            tv_distance=tv,
            leakage=leakage,
            circuit_distribution=[
                FockProbability(occupations=list(occ), probability=p)
                for occ, p in sorted(circuit_dist.items())
                if p > 1e-15 or occ in oracle.entries
            ],
            oracle_distribution=[
                FockProbability(occupations=list(occ), probability=p) for occ, p in oracle.rows()
            ],
            gate_counts=GateCounts(**circuit.counts()),
        )
