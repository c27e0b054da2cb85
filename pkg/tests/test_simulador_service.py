"""
Testes unitários para SimuladorService
"""
import math

import numpy as np
import pytest

from app.core.exceptions import DimensionTooLarge, IndexOutOfRange, WidthMismatch
from app.models.circuito import Circuit, Gate
from app.models.estado import StateVector
from app.models.fock import FockRegister
from app.models.modelo import BeamSplitterSpec, TwoModeSqueezerSpec
from app.services.codificacao_service import CodificacaoBosonicaService
from app.services.compilador_service import CompiladorService
from app.services.simulador_service import SimuladorService, gate_matrix


class TestPortas:
    """Testes para as matrizes e a execução de portas"""

    def test_rx_pi_inverte_bit(self):
        """Testa RX(π)|0⟩ = −i|1⟩ no qubit 0"""
        state = SimuladorService.run(Circuit(2, (Gate.rx(0, math.pi),)), StateVector.basis(2, 0))

        assert abs(state.amplitudes[1] + 1j) < 1e-12
        assert abs(state.amplitudes[0]) < 1e-12

    def test_cnot_controle_e_alvo(self):
        """Testa CNOT(0, 1) em |q0=1, q1=0⟩"""
        state = SimuladorService.run(Circuit(2, (Gate.cnot(0, 1),)), StateVector.basis(2, 1))

        assert abs(state.amplitudes[3] - 1) < 1e-12

    def test_rzx_convencao(self):
        """Testa RZX(θ) = e^{iθ Z_a X_b}"""
        theta = 0.3
        state = SimuladorService.run(Circuit(2, (Gate.rzx(0, 1, theta),)), StateVector.basis(2, 0))

        assert abs(state.amplitudes[0] - math.cos(theta)) < 1e-12
        assert abs(state.amplitudes[2] - 1j * math.sin(theta)) < 1e-12

    def test_matriz_rz(self):
        """Testa RZ(θ) = diag(e^{−iθ/2}, e^{iθ/2})"""
        matrix = gate_matrix(Gate.rz(0, 0.4))

        assert np.allclose(np.diag(matrix), [np.exp(-0.2j), np.exp(0.2j)])

    def test_fase_global(self):
        """Testa que a fase global multiplica o estado"""
        state = SimuladorService.run(Circuit(1, (), math.pi / 2), StateVector.basis(1, 0))

        assert abs(state.amplitudes[0] - 1j) < 1e-12

    def test_estado_inicial_intacto(self):
        """Testa que run não altera o estado passado"""
        initial = StateVector.basis(1, 0)
        SimuladorService.run(Circuit(1, (Gate.rx(0, 1.0),)), initial)

        assert initial.amplitudes[0] == 1

    def test_largura_incompativel(self):
        """Testa WidthMismatch entre estado e circuito"""
        with pytest.raises(WidthMismatch):
            SimuladorService.run(Circuit(3, ()), StateVector.basis(2, 0))

    def test_unitaria_grande_demais(self):
        """Testa DimensionTooLarge em unitary_of"""
        with pytest.raises(DimensionTooLarge):
            SimuladorService.unitary_of(Circuit(13, ()))


class TestMedidas:
    """Testes para marginais, amostragem, vazamento e valores esperados"""

    def test_divisor_transfere_foton(self):
        """Testa ε = π/2 a partir de [1,0]: marginal(qubit 0, 0) = 1"""
        circuit = CompiladorService.compile(BeamSplitterSpec(modes=2, cutoff=1, epsilon=math.pi / 2), 1.0)
        state = SimuladorService.run(circuit, FockRegister((1, 0), 1))

        assert abs(SimuladorService.marginal_probability(state, 0, 0) - 1.0) < 1e-9
        assert abs(SimuladorService.fock_distribution(state, 2, 1)[(0, 1)] - 1.0) < 1e-9

    def test_probabilidade_sin2(self):
        """Testa P([0,1]) = sin²ε"""
        for epsilon in (math.pi / 8, math.pi / 4):
            circuit = CompiladorService.compile(BeamSplitterSpec(modes=2, cutoff=1, epsilon=epsilon), 1.0)
            state = SimuladorService.run(circuit, FockRegister((1, 0), 1))
            assert abs(SimuladorService.fock_distribution(state, 2, 1)[(0, 1)] - math.sin(epsilon) ** 2) < 1e-9

    def test_compressor_par(self):
        """Testa P(pair) = sin²β a partir do vácuo"""
        beta = 0.5
        circuit = CompiladorService.compile(TwoModeSqueezerSpec(modes=2, cutoff=1, beta=beta), 1.0)
        state = SimuladorService.run(circuit, FockRegister((0, 0), 1))
        distribution = SimuladorService.fock_distribution(state, 2, 1)

        assert abs(distribution[(1, 1)] - math.sin(beta) ** 2) < 1e-9
        assert abs(distribution[(1, 1)] - 0.2299) < 1e-4

    def test_vazamento(self):
        """Testa vazamento zero no espaço de código e um fora dele"""
        inside = StateVector.basis(4, CodificacaoBosonicaService.encode_index([1, 0], 1))
        outside = StateVector.basis(4, 0)

        assert SimuladorService.leakage(inside, 2, 1) == 0.0
        assert SimuladorService.leakage(outside, 2, 1) == 1.0

    def test_vazamento_largura_errada(self):
        """Testa WidthMismatch em leakage"""
        with pytest.raises(WidthMismatch):
            SimuladorService.leakage(StateVector.basis(3, 0), 2, 1)

    def test_marginal_fora_do_intervalo(self):
        """Testa IndexOutOfRange"""
        state = StateVector.basis(2, 0)
        with pytest.raises(IndexOutOfRange):
            SimuladorService.marginal_probability(state, 2, 0)
        with pytest.raises(IndexOutOfRange):
            SimuladorService.marginal_probability(state, 0, 2)

    def test_amostragem_deterministica(self):
        """Testa que a mesma semente gera o mesmo histograma"""
        amplitudes = np.array([1, 1, 1, 1], dtype=complex) / 2
        state = StateVector(amplitudes)
        first = SimuladorService.sample_counts(state, 2048, 7)
        second = SimuladorService.sample_counts(state, 2048, 7)

        assert first == second
        assert sum(first.values()) == 2048
        assert set(first) <= {"00", "10", "01", "11"}

    def test_amostragem_estado_de_base(self):
        """Testa que um estado de base sempre sai o mesmo bitstring"""
        counts = SimuladorService.sample_counts(StateVector.basis(3, 1), 100, 1)

        assert counts == {"100": 100}

    def test_valor_esperado_numero(self):
        """Testa ⟨n⟩ = 2 em |2⟩ com N_P = 3"""
        state = StateVector.basis(4, CodificacaoBosonicaService.encode_index([2], 3))
        number = CodificacaoBosonicaService.map_number(0, 1, 3)

        assert abs(SimuladorService.expectation(state, number) - 2.0) < 1e-12


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
