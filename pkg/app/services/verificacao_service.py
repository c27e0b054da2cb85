"""
Serviço de verificação
Responsabilidade: suites de invariantes (codificação, álgebra, compilador, oráculo) com resumo legível por máquina
"""
import itertools
import logging
import math
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from app.core.config import VERIFY_CONFIG
from app.core.exceptions import VerificationFailed
from app.models.circuito import Circuit, Gate
from app.models.fock import FockRegister
from app.models.modelo import BeamSplitterSpec, MolecularSpec
from app.models.pauli import PauliSum, PauliTerm
from app.models.relatorios import CheckResult, SuiteResult, VerificationSummary
from app.services.algebra_pauli_service import AlgebraPauliService
from app.services.codificacao_service import CodificacaoBosonicaService as Cod
from app.services.compilador_service import CompiladorService
from app.services.hamiltonianos_service import HamiltonianosService
from app.services.oraculo_service import OraculoPermanenteService
from app.services.simulador_service import SimuladorService
from app.utils.matrix_utils import (
    commutator_norm,
    phase_insensitive_distance,
    project,
    truncated_creation,
)

logger = logging.getLogger(__name__)

# Expansão do divisor de feixe em N_P=1 (ε = 1): sinal de cada string, |coef| = 1/8
BEAM_SPLITTER_SIGNS = {
    "XXXX": 1, "XXYY": 1, "XYXY": 1, "XYYX": -1,
    "YXXY": -1, "YXYX": 1, "YYXX": 1, "YYYY": 1,
}

Check = Tuple[str, Callable[[], Tuple[bool, str]]]


def _exp(h: PauliSum, t: float) -> np.ndarray:
    return expm(1j * t * AlgebraPauliService.to_matrix(h))


# ========================================
# SUITE: codificação
# ========================================
def _check_round_trip():
    count = 0
    for modes in range(1, 4):
        for cutoff in range(1, 5):
            for levels in itertools.product(range(cutoff + 1), repeat=modes):
                reg = FockRegister(levels, cutoff)
                if Cod.decode_basis(Cod.encode_fock(reg).bits, modes, cutoff) != reg:
                    return False, f"falhou em {levels} com N_P={cutoff}"
                count += 1
    return True, f"{count} registros"


def _check_reference_kets():
    one = Cod.encode_fock(FockRegister((1, 0), 1)).bits
    other = Cod.encode_fock(FockRegister((0, 1), 1)).bits
    vacuum = Cod.encode_fock(FockRegister((0,), 4)).bits
    ok = (one, other, vacuum) == ("1001", "0110", "01111")
    return ok, f"[1,0]->{one}, [0,1]->{other}, [0] (N_P=4)->{vacuum}"


def _check_creation_fidelity():
    worst = 0.0
    for cutoff in range(1, 5):
        matrix = AlgebraPauliService.to_matrix(Cod.map_creation(0, 1, cutoff))
        code = project(matrix, Cod.fock_ordered_indices(1, cutoff))
        worst = max(worst, float(np.abs(code - truncated_creation(cutoff)).max()))
    return worst < 1e-12, f"erro máximo {worst:.2e}"


def _check_number_eigenvalues():
    for cutoff in range(1, 5):
        number = Cod.map_number(0, 1, cutoff).diagonal()
        squared = Cod.map_number_squared(0, 1, cutoff).diagonal()
        for n in range(cutoff + 1):
            index = Cod.encode_index([n], cutoff)
            if abs(number[index] - n) > 1e-12 or abs(squared[index] - n * n) > 1e-12:
                return False, f"autovalor errado em |{n}⟩, N_P={cutoff}"
    return True, "n e n² corretos em todas as palavras de código"


def _check_number_is_bdagger_b():
    cutoff = 3
    creation = Cod.map_creation(0, 1, cutoff)
    product = creation * creation.adjoint()
    indices = Cod.fock_ordered_indices(1, cutoff)
    diff = project(product.to_matrix() - Cod.map_number(0, 1, cutoff).to_matrix(), indices)
    error = float(np.abs(diff).max())
    return error < 1e-12, f"erro {error:.2e}"


def _check_number_commutation():
    modes, cutoff = 2, 2
    n0, n1 = Cod.map_number(0, modes, cutoff), Cod.map_number(1, modes, cutoff)
    ok = len(n0.commutator(n1)) == 0 and len(n0.commutator(n0)) == 0
    return ok, "[n_j, n_k] = 0"


# ========================================
# SUITE: álgebra
# ========================================
def _check_beam_splitter_golden():
    h = HamiltonianosService.beam_splitter(0, 1, 1.0, 2, 1)
    signs = {t.axes: t.coefficient for t in h.terms}
    expected = {label: sign / 8 for label, sign in BEAM_SPLITTER_SIGNS.items()}
    ok = set(signs) == set(expected) and all(abs(signs[k] - expected[k]) < 1e-12 for k in expected)
    return ok, h.render().replace("\n", " | ")


def _check_beam_splitter_commutes():
    terms = HamiltonianosService.beam_splitter(0, 1, 1.0, 2, 1).terms
    pairs = list(itertools.combinations(terms, 2))
    bad = [(a.axes, b.axes) for a, b in pairs if not AlgebraPauliService.commutes(a, b)]
    return not bad and len(pairs) == 28, f"{len(pairs)} pares, {len(bad)} não comutam"


def _check_multiply_faithful():
    rng = np.random.default_rng(VERIFY_CONFIG["random_seed"])
    for _ in range(100):
        width = int(rng.integers(1, 5))
        a = PauliTerm.from_label("".join(rng.choice(list("IXYZ"), width)), complex(rng.normal(), rng.normal()))
        b = PauliTerm.from_label("".join(rng.choice(list("IXYZ"), width)), complex(rng.normal(), rng.normal()))
        product = AlgebraPauliService.term_matrix(AlgebraPauliService.multiply(a, b))
        expected = AlgebraPauliService.term_matrix(a) @ AlgebraPauliService.term_matrix(b)
        if np.abs(product - expected).max() > 1e-12:
            return False, f"{a.axes}·{b.axes}"
    return True, "100 pares aleatórios"


def _check_commutes_matches_matrix():
    labels = ["".join(p) for p in itertools.product("IXYZ", repeat=2)]
    for la, lb in itertools.product(labels, repeat=2):
        a, b = PauliTerm.from_label(la), PauliTerm.from_label(lb)
        by_matrix = commutator_norm(AlgebraPauliService.term_matrix(a), AlgebraPauliService.term_matrix(b)) < 1e-12
        if by_matrix != AlgebraPauliService.commutes(a, b):
            return False, f"{la} vs {lb}"
    return True, f"{len(labels) ** 2} pares em 2 qubits"


def _check_simplify_idempotent():
    h = HamiltonianosService.bilinear(0, 1, 0.3, 0.2, 2, 1)
    again = h.simplify()
    ok = again == h and np.abs(again.to_matrix() - h.to_matrix()).max() < 1e-12
    return ok, f"{len(h)} strings"


# ========================================
# SUITE: compilador
# ========================================
def _check_string_soundness():
    labels = list(BEAM_SPLITTER_SIGNS) + ["XXXY", "ZZII", "IZIZ", "XZYI", "YIIZ", "ZIIX"]
    worst = 0.0
    for label in labels:
        term = PauliTerm.from_label(label)
        for theta in (0.1, -0.7, 1.3):
            circuit = CompiladorService.string_to_gates(term, theta)
            expected = expm(1j * theta * AlgebraPauliService.term_matrix(term))
            worst = max(worst, phase_insensitive_distance(SimuladorService.unitary_of(circuit), expected))
    return worst < 1e-10, f"erro máximo {worst:.2e}"


def _check_cnot_identity():
    zx = SimuladorService.unitary_of(Circuit(2, (Gate.rzx(0, 1, math.pi / 4),)))
    lowered = SimuladorService.unitary_of(CompiladorService.lower_to_cnot(Circuit(2, (Gate.rzx(0, 1, math.pi / 4),))))
    error = float(np.abs(zx - lowered).max())
    return error < 1e-12, f"erro {error:.2e} (com fase global)"


def _check_beam_splitter_exact():
    epsilon = 0.9
    spec = BeamSplitterSpec(modes=2, cutoff=1, epsilon=epsilon)
    circuit = CompiladorService.compile(spec, 1.0, 1, "zx", optimize=False)
    expected = _exp(HamiltonianosService.beam_splitter(0, 1, epsilon, 2, 1), 1.0)
    error = phase_insensitive_distance(SimuladorService.unitary_of(circuit), expected)
    lowered = CompiladorService.compile(spec, 1.0, 1, "cnot", optimize=True)
    lowered_error = phase_insensitive_distance(SimuladorService.unitary_of(lowered), expected)
    ok = error < 1e-9 and lowered_error < 1e-9 and circuit.metadata["exact"]
    return ok, f"ZX {error:.2e}, CNOT {lowered_error:.2e}"


def _check_molecular_exact():
    spec = MolecularSpec(modes=1, cutoff=4, omega=[1.0], chi=[0.1])
    circuit = CompiladorService.compile(spec, 0.7, 1, "zx", optimize=True)
    expected = _exp(HamiltonianosService.molecular([1.0], [0.1], 1, 4), 0.7)
    error = float(np.abs(SimuladorService.unitary_of(circuit) - expected).max())
    inventory = circuit.metadata["term_inventory"]
    ok = error < 1e-9 and inventory == {"weight_1": 8, "weight_2": 6, "heavier": 0}
    return ok, f"erro {error:.2e}, inventário {inventory}"


def _check_optimizer():
    spec = BeamSplitterSpec(modes=2, cutoff=1, epsilon=0.4)
    naive = CompiladorService.compile(spec, 1.0, 1, "zx", optimize=False)
    optimized = CompiladorService.peephole_optimize(naive)
    error = phase_insensitive_distance(SimuladorService.unitary_of(naive), SimuladorService.unitary_of(optimized))
    before, after = naive.counts()["rzx"], optimized.counts()["rzx"]
    return error < 1e-10 and after < before, f"RZX {before} -> {after}, erro {error:.2e}"


# ========================================
# SUITE: oráculo
# ========================================
def _check_permanent_brute_force():
    rng = np.random.default_rng(VERIFY_CONFIG["random_seed"])
    for n in range(1, 7):
        A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        brute = sum(np.prod([A[i, p[i]] for i in range(n)]) for p in itertools.permutations(range(n)))
        if abs(OraculoPermanenteService.permanent(A) - brute) > 1e-10 * max(1.0, abs(brute)):
            return False, f"n={n}"
    return True, "n ≤ 6"


def _balanced_splitter() -> np.ndarray:
    c = 1 / math.sqrt(2)
    return np.array([[c, 1j * c], [1j * c, c]])


def _check_hom_distribution():
    dist = OraculoPermanenteService.output_distribution(_balanced_splitter(), [1, 1])
    ok = (
        dist.probability((1, 1)) < 1e-12
        and abs(dist.probability((2, 0)) - 0.5) < 1e-12
        and abs(dist.probability((0, 2)) - 0.5) < 1e-12
    )
    return ok, f"P(1,1)={dist.probability((1, 1)):.2e}"


def _check_hom_circuit():
    report = OraculoPermanenteService.compare_with_circuit(
        _balanced_splitter(), [1, 1], VERIFY_CONFIG["hom_cutoff"], VERIFY_CONFIG["hom_steps"]
    )
    coincidence = next(
        (e.probability for e in report.circuit_distribution if e.occupations == [1, 1]), 0.0
    )
    ok = report.tv_distance < 1e-3 and coincidence < 1e-3
    return ok, f"TV={report.tv_distance:.2e}, P(1,1)={coincidence:.2e}"


def _check_single_photon_haar():
    R = HamiltonianosService.haar_random_unitary(3, VERIFY_CONFIG["random_seed"])
    report = OraculoPermanenteService.compare_with_circuit(R, [1, 0, 0], 1, 1)
    return report.tv_distance < 1e-6, f"TV={report.tv_distance:.2e}"


SUITES: Dict[str, List[Check]] = {
    "encoding": [
        ("round_trip", _check_round_trip),
        ("reference_kets", _check_reference_kets),
        ("creation_fidelity", _check_creation_fidelity),
        ("number_eigenvalues", _check_number_eigenvalues),
        ("number_is_bdagger_b", _check_number_is_bdagger_b),
        ("number_commutation", _check_number_commutation),
    ],
    "algebra": [
        ("beam_splitter_golden", _check_beam_splitter_golden),
        ("beam_splitter_commutes", _check_beam_splitter_commutes),
        ("multiply_faithful", _check_multiply_faithful),
        ("commutes_matches_matrix", _check_commutes_matches_matrix),
        ("simplify_idempotent", _check_simplify_idempotent),
    ],
    "compiler": [
        ("string_soundness", _check_string_soundness),
        ("cnot_identity", _check_cnot_identity),
        ("beam_splitter_exact", _check_beam_splitter_exact),
        ("molecular_exact", _check_molecular_exact),
        ("optimizer", _check_optimizer),
    ],
    "oracle": [
        ("permanent_brute_force", _check_permanent_brute_force),
        ("hom_distribution", _check_hom_distribution),
        ("hom_circuit", _check_hom_circuit),
        ("single_photon_haar", _check_single_photon_haar),
    ],
}


class VerificacaoService:
    """Executa as suites de invariantes"""

    @staticmethod
    def run_suite(name: str, checks: Sequence[Check] = None) -> SuiteResult:
        if checks is None:
            if name not in SUITES:
                raise ValueError(f"Suite desconhecida: {name}")
            checks = SUITES[name]
        results = []
        for check_name, check in checks:
            try:
                passed, detail = check()
            except Exception as exc:  # exceção conta como falha
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            results.append(CheckResult(name=check_name, passed=bool(passed), detail=detail))
            if not passed:
                logger.warning("❌ %s/%s: %s", name, check_name, detail)
        suite = SuiteResult(suite=name, passed=all(r.passed for r in results), checks=results)
        logger.info("%s Suite %s", "✅" if suite.passed else "❌", name)
        return suite

    @staticmethod
    def run(suite: str = "all") -> VerificationSummary:
        names = VERIFY_CONFIG["suites"] if suite == "all" else [suite]
        results = [VerificacaoService.run_suite(name) for name in names]
        failed = [r.suite for r in results if not r.passed]
        return VerificationSummary(passed=not failed, suites=results, failed_suites=failed)

    @staticmethod
    def run_or_raise(suite: str = "all") -> VerificationSummary:
        summary = VerificacaoService.run(suite)
        if not summary.passed:
            raise VerificationFailed(
                f"Suites com falha: {', '.join(summary.failed_suites)}",
                summary.model_dump(),
            )
        return summary
