"""
Testes unitários para CompiladorService
"""
import math

import numpy as np
import pytest
from scipy.linalg import expm

from app.core.exceptions import IdentityString, NonHermitianGenerator, UnsupportedAngle
from app.models.circuito import Circuit, Gate, GateKind
from app.models.modelo import BeamSplitterSpec, InterferometerModelSpec, MolecularSpec, TwoModeSqueezerSpec
from app.models.pauli import PauliSum, PauliTerm
from app.services.algebra_pauli_service import AlgebraPauliService
from app.services.compilador_service import CompiladorService
from app.services.hamiltonianos_service import HamiltonianosService
from app.services.simulador_service import SimuladorService
from app.utils.matrix_utils import operator_distance, phase_insensitive_distance

STRING_CORPUS = [
    "XXXX", "XXYY", "XYXY", "XYYX", "YXXY", "YXYX", "YYXX", "YYYY",
    "XXXY", "YYYX", "ZZII", "IZIZ", "XZYI", "YIIZ", "ZIIX", "IIYI",
]


class TestTrotter:
    """Testes para o agendamento de Trotter"""

    def test_termos_comutantes_forcam_um_passo(self):
        """Testa s = 1 e exact para o divisor de feixe em N_P=1"""
        h = HamiltonianosService.beam_splitter(0, 1, 1.0, 2, 1)
        schedule = CompiladorService.trotterize(h, 0.5, 8)

        assert schedule.exact
        assert schedule.steps == 1
        assert len(schedule) == 8
        assert all(abs(abs(angle) - 0.0625) < 1e-12 for _, angle in schedule.entries)

    def test_termos_nao_comutantes(self):
        """Testa s passos com ângulo coef·t/s"""
        h = PauliSum.from_terms(1, [PauliTerm.from_label("X", 1.0), PauliTerm.from_label("Z", 2.0)])
        schedule = CompiladorService.trotterize(h, 1.0, 4)

        assert not schedule.exact
        assert schedule.steps == 4
        assert len(schedule) == 8
        assert schedule.entries[1][1] == 0.5

    def test_identidade_vira_fase(self):
        """Testa que o termo identidade vira fase global"""
        h = PauliSum.from_terms(1, [PauliTerm.identity(1, 0.3), PauliTerm.from_label("Z", 1.0)])
        schedule = CompiladorService.trotterize(h, 2.0, 1)

        assert abs(schedule.identity_phase - 0.6) < 1e-12
        assert schedule.term_order == ("Z",)

    def test_ordem_simetrica(self):
        """Testa a ordem direta nos passos pares e inversa nos ímpares"""
        h = PauliSum.from_terms(1, [PauliTerm.from_label("X", 1.0), PauliTerm.from_label("Z", 2.0)])
        schedule = CompiladorService.trotterize(h, 1.0, 4, symmetric=True)

        assert schedule.symmetric
        assert [term.axes for term, _ in schedule.entries] == ["X", "Z", "Z", "X", "X", "Z", "Z", "X"]
        assert schedule.term_order == ("X", "Z")

    def test_ordem_simetrica_ignorada_quando_exato(self):
        """Testa que termos comutantes mantêm um passo sem inversão"""
        schedule = CompiladorService.trotterize(HamiltonianosService.beam_splitter(0, 1, 1.0, 2, 1), 1.0, 8, symmetric=True)

        assert schedule.exact
        assert not schedule.symmetric
        assert schedule.steps == 1

    def test_coeficiente_nao_real(self):
        """Testa NonHermitianGenerator para coeficiente com parte imaginária"""
        h = PauliSum.from_terms(1, [PauliTerm.from_label("X", 0.5j), PauliTerm.from_label("Z", 1.0)])

        with pytest.raises(NonHermitianGenerator) as info:
            CompiladorService.trotterize(h, 1.0, 2)
        assert info.value.exit_code == 4

    def test_passos_invalidos(self):
        """Testa s < 1"""
        with pytest.raises(ValueError):
            CompiladorService.trotterize(PauliSum.single(1, 0, "X"), 1.0, 0)


class TestDecomposicao:
    """Testes para string_to_gates"""

    @pytest.mark.parametrize("label", STRING_CORPUS)
    def test_exponencial_exata(self, label):
        """Testa unitary_of(string_to_gates(P, θ)) = e^{iθP} inclusive a fase"""
        term = PauliTerm.from_label(label)
        for theta in (0.37, -1.1):
            circuit = CompiladorService.string_to_gates(term, theta)
            expected = expm(1j * theta * AlgebraPauliService.term_matrix(term))
            assert phase_insensitive_distance(SimuladorService.unitary_of(circuit), expected) < 1e-10

    def test_peso_um(self):
        """Testa que strings de peso 1 viram uma rotação"""
        circuit = CompiladorService.string_to_gates(PauliTerm.from_label("IZ"), 0.5)

        assert circuit.gates == (Gate.rz(1, -1.0),)

    def test_rzx_quarto_de_volta(self):
        """Testa que todas as portas de dois qubits são RZX(±π/4)"""
        circuit = CompiladorService.string_to_gates(PauliTerm.from_label("XYYX"), 0.2)
        two = [g for g in circuit.gates if g.kind is GateKind.RZX]

        assert len(two) == 6
        assert all(abs(abs(g.angle) - math.pi / 4) < 1e-15 for g in two)

    def test_identidade(self):
        """Testa IdentityString"""
        with pytest.raises(IdentityString):
            CompiladorService.string_to_gates(PauliTerm.identity(3), 0.1)


class TestCnot:
    """Testes para lower_to_cnot"""

    def test_identidade_rzx_cnot(self):
        """Testa RZX(π/4) = CNOT·RZ·RX com fase global −π/4"""
        zx = Circuit(2, (Gate.rzx(0, 1, math.pi / 4),))
        lowered = CompiladorService.lower_to_cnot(zx)

        assert [g.kind for g in lowered.gates] == [GateKind.CNOT, GateKind.RZ, GateKind.RX]
        assert abs(lowered.global_phase + math.pi / 4) < 1e-15
        assert np.allclose(SimuladorService.unitary_of(zx), SimuladorService.unitary_of(lowered), atol=1e-12)

    def test_rzx_negativo(self):
        """Testa RZX(−π/4) com fase +π/4"""
        zx = Circuit(3, (Gate.rzx(2, 0, -math.pi / 4),))
        lowered = CompiladorService.lower_to_cnot(zx)

        assert abs(lowered.global_phase - math.pi / 4) < 1e-15
        assert np.allclose(SimuladorService.unitary_of(zx), SimuladorService.unitary_of(lowered), atol=1e-12)

    def test_angulo_nao_suportado(self):
        """Testa UnsupportedAngle"""
        with pytest.raises(UnsupportedAngle):
            CompiladorService.lower_to_cnot(Circuit(2, (Gate.rzx(0, 1, 0.3),)))


class TestPeephole:
    """Testes para peephole_optimize"""

    def test_cancelamento_de_inversos(self):
        """Testa RZX(θ)·RZX(−θ) e CNOT·CNOT removidos"""
        circuit = Circuit(2, (
            Gate.rzx(0, 1, 0.3), Gate.rzx(0, 1, -0.3), Gate.cnot(1, 0), Gate.cnot(1, 0),
        ))

        assert len(CompiladorService.peephole_optimize(circuit)) == 0

    def test_fusao_de_rotacoes(self):
        """Testa RZ(a)·RZ(b) -> RZ(a+b)"""
        circuit = Circuit(1, (Gate.rz(0, 0.25), Gate.rz(0, 0.5)))
        optimized = CompiladorService.peephole_optimize(circuit)

        assert optimized.gates == (Gate.rz(0, 0.75),)

    def test_rotacao_2pi_vira_fase(self):
        """Testa RX(2π) = −I absorvido na fase global"""
        circuit = Circuit(1, (Gate.rx(0, 2 * math.pi),))
        optimized = CompiladorService.peephole_optimize(circuit)

        assert len(optimized) == 0
        assert np.allclose(SimuladorService.unitary_of(optimized), SimuladorService.unitary_of(circuit))

    def test_portas_em_qubits_disjuntos_nao_bloqueiam(self):
        """Testa a fusão através de uma porta em outro qubit"""
        circuit = Circuit(2, (Gate.rx(0, 0.1), Gate.rz(1, 0.2), Gate.rx(0, -0.1)))
        optimized = CompiladorService.peephole_optimize(circuit)

        assert optimized.gates == (Gate.rz(1, 0.2),)

    def test_preserva_unitaria_e_reduz_rzx(self):
        """Testa que o otimizador preserva a unitária e reduz o RZX do divisor de feixe"""
        naive = CompiladorService.compile(BeamSplitterSpec(modes=2, cutoff=1, epsilon=0.7), 1.0, 1, "zx", optimize=False)
        optimized = CompiladorService.peephole_optimize(naive)

        assert optimized.counts()["rzx"] < naive.counts()["rzx"]
        assert operator_distance(SimuladorService.unitary_of(naive), SimuladorService.unitary_of(optimized)) < 1e-10


class TestCompilacao:
    """Testes para compile"""

    def test_contagem_ingenua_divisor(self):
        """Testa a contagem ingênua de 48 RZX e 56 rotações de um qubit"""
        circuit = CompiladorService.compile(BeamSplitterSpec(modes=2, cutoff=1, epsilon=1.0), 1.0, 1, "zx", optimize=False)

        assert circuit.metadata["naive_counts"]["rzx"] == 48
        assert circuit.metadata["naive_counts"]["single_qubit"] == 56
        assert circuit.metadata["exact"]

    @pytest.mark.parametrize("epsilon", [math.pi / 8, math.pi / 4, math.pi / 2])
    def test_divisor_igual_exponencial(self, epsilon):
        """Testa o circuito do divisor de feixe contra e^{iH} incluindo a fase"""
        spec = BeamSplitterSpec(modes=2, cutoff=1, epsilon=epsilon)
        expected = expm(1j * HamiltonianosService.beam_splitter(0, 1, epsilon, 2, 1).to_matrix())
        for target in ("zx", "cnot"):
            circuit = CompiladorService.compile(spec, 1.0, 1, target, optimize=True)
            assert operator_distance(SimuladorService.unitary_of(circuit), expected) < 1e-9

    def test_alvo_cnot_sem_rzx(self):
        """Testa que o alvo CNOT não deixa portas RZX"""
        circuit = CompiladorService.compile(BeamSplitterSpec(modes=2, cutoff=1, epsilon=0.5), 1.0, 1, "cnot")

        assert circuit.counts()["rzx"] == 0
        assert circuit.counts()["cnot"] > 0

    def test_compressor_exato(self):
        """Testa o compressor de dois modos em N_P=1"""
        spec = TwoModeSqueezerSpec(modes=2, cutoff=1, beta=0.5)
        circuit = CompiladorService.compile(spec, 1.0, 1)
        expected = expm(1j * HamiltonianosService.two_mode_squeezer(0, 1, 0.5, 2, 1).to_matrix())

        assert circuit.metadata["exact"]
        assert operator_distance(SimuladorService.unitary_of(circuit), expected) < 1e-9

    def test_molecular_exato_e_inventario(self):
        """Testa o molecular (M=1, N_P=4) contra e^{iHt} para parâmetros aleatórios"""
        rng = np.random.default_rng(5)
        for _ in range(10):
            omega, chi, t = rng.uniform(-2, 2), rng.uniform(-1, 1), rng.uniform(0.1, 3)
            spec = MolecularSpec(modes=1, cutoff=4, omega=[omega], chi=[chi])
            circuit = CompiladorService.compile(spec, t, 1)
            expected = expm(1j * t * HamiltonianosService.molecular([omega], [chi], 1, 4).to_matrix())
            assert circuit.width == 5
            assert operator_distance(SimuladorService.unitary_of(circuit), expected) < 1e-9
        assert circuit.metadata["term_inventory"] == {"weight_1": 8, "weight_2": 6, "heavier": 0}

    def test_interferometro_usa_ordem_simetrica(self):
        """Testa a ordem alternada só para a malha do interferômetro"""
        c = 1 / math.sqrt(2)
        spec = InterferometerModelSpec(modes=2, cutoff=2, R=[[c, [0.0, c]], [[0.0, c], c]])
        circuit = CompiladorService.compile(spec, 1.0, 4)
        plain = CompiladorService.compile(BeamSplitterSpec(modes=2, cutoff=2, epsilon=1.0), 1.0, 4)

        assert circuit.metadata["symmetric_order"]
        assert not plain.metadata["symmetric_order"]

    def test_escala_de_trotter(self):
        """Testa que o erro de Trotter cai à metade quando s dobra (N_P=2)"""
        epsilon = 1.0
        spec = BeamSplitterSpec(modes=2, cutoff=2, epsilon=epsilon)
        expected = expm(1j * HamiltonianosService.beam_splitter(0, 1, epsilon, 2, 2).to_matrix())
        errors = []
        for steps in (4, 8, 16, 32):
            circuit = CompiladorService.compile(spec, 1.0, steps, "zx", optimize=False)
            assert not circuit.metadata["exact"]
            errors.append(operator_distance(SimuladorService.unitary_of(circuit), expected))
        for coarse, fine in zip(errors, errors[1:]):
            assert 1.7 <= coarse / fine <= 2.3

    def test_metadados(self):
        """Testa os metadados do relatório de compilação"""
        circuit = CompiladorService.compile(BeamSplitterSpec(modes=2, cutoff=1, epsilon=1.0), 2.0, 3, "zx")

        assert circuit.metadata["kind"] == "BeamSplitter"
        assert circuit.metadata["steps_requested"] == 3
        assert circuit.metadata["steps_used"] == [1]
        assert circuit.metadata["term_order"][0][0] == "XXXX"

    def test_deterministico(self):
        """Testa que duas compilações geram o mesmo circuito"""
        spec = BeamSplitterSpec(modes=2, cutoff=2, epsilon=0.3)

        assert CompiladorService.compile(spec, 1.0, 2) == CompiladorService.compile(spec, 1.0, 2)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
