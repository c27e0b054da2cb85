"""
Testes unitários para CodificacaoBosonicaService
"""
import itertools
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from app.core.cache import cache_stats, clear_caches
from app.core.exceptions import CutoffExceeded, DimensionTooLarge, LeakageState, ModeIndexOutOfRange, WidthMismatch
from app.models.fock import EncodedBasisState, FockRegister, mode_layout
from app.services.codificacao_service import CodificacaoBosonicaService, bits_from_index, index_from_bits
from app.utils.matrix_utils import project, truncated_creation, truncated_mode_operator


class TestCodificacao:
    """Testes para a tradução Fock <-> bitstring"""

    def test_kets_de_referencia(self):
        """Testa os kets |1,0⟩ -> 1001 e |0,1⟩ -> 0110 em N_P=1"""
        one = CodificacaoBosonicaService.encode_fock(FockRegister((1, 0), 1))
        other = CodificacaoBosonicaService.encode_fock(FockRegister((0, 1), 1))

        assert one.bits == "1001"
        assert other.bits == "0110"

    def test_vacuo_um_modo(self):
        """Testa o vácuo de um modo com N_P=4"""
        state = CodificacaoBosonicaService.encode_fock(FockRegister((0,), 4))

        assert state.bits == "01111"
        assert state.width == 5
        assert state.in_code_space()

    def test_ida_e_volta_exaustiva(self):
        """Testa encode/decode para todos os registros com M ≤ 3 e N_P ≤ 4"""
        for modes in range(1, 4):
            for cutoff in range(1, 5):
                for levels in itertools.product(range(cutoff + 1), repeat=modes):
                    reg = FockRegister(levels, cutoff)
                    encoded = CodificacaoBosonicaService.encode_fock(reg)
                    assert CodificacaoBosonicaService.decode_basis(encoded.bits, modes, cutoff) == reg

    def test_largura_do_registro(self):
        """Testa Q = M·(N_P+1)"""
        assert CodificacaoBosonicaService.register_width(3, 2) == 9
        assert FockRegister((0, 1, 2), 2).qubit_count == 9

    def test_layout_dos_modos(self):
        """Testa o índice global j·(N_P+1)+n"""
        layout = mode_layout(2, 2)

        assert layout[(0, 0)] == 0
        assert layout[(1, 0)] == 3
        assert layout[(1, 2)] == 5

    def test_ocupacao_acima_do_corte(self):
        """Testa CutoffExceeded para ocupação maior que N_P"""
        with pytest.raises(CutoffExceeded):
            CodificacaoBosonicaService.encode_fock(FockRegister((2, 0), 1))

    def test_bloco_com_vazamento(self):
        """Testa LeakageState para blocos sem exatamente um bit 0"""
        with pytest.raises(LeakageState):
            CodificacaoBosonicaService.decode_basis("1101", 2, 1)
        with pytest.raises(LeakageState):
            CodificacaoBosonicaService.decode_basis("0001", 2, 1)

    def test_largura_errada(self):
        """Testa WidthMismatch na decodificação"""
        with pytest.raises(WidthMismatch):
            CodificacaoBosonicaService.decode_basis("100", 2, 1)

    def test_indices_e_bitstrings(self):
        """Testa que o qubit 0 é o bit menos significativo e o caractere mais à esquerda"""
        assert bits_from_index(1, 4) == "1000"
        assert index_from_bits("0110") == 6
        assert EncodedBasisState("1001", 2, 1).index == 9

    def test_espaco_de_codigo(self):
        """Testa o número de palavras de código (N_P+1)^M"""
        indices = CodificacaoBosonicaService.code_space_projector(2, 2)

        assert len(indices) == 9
        assert indices == sorted(indices)
        assert [r.occupations for r in CodificacaoBosonicaService.code_words(1, 1)] == [(1,), (0,)]


class TestOperadoresMapeados:
    """Testes para as imagens de Pauli de b†, b, n e n²"""

    @pytest.mark.parametrize("cutoff", [1, 2, 3, 4])
    def test_criacao_no_espaco_de_codigo(self, cutoff):
        """Testa que b† mapeado reproduz √(n+1) no espaço de código"""
        matrix = CodificacaoBosonicaService.map_creation(0, 1, cutoff).to_matrix()
        code = project(matrix, CodificacaoBosonicaService.fock_ordered_indices(1, cutoff))

        assert np.allclose(code, truncated_creation(cutoff), atol=1e-12)

    def test_criacao_dois_modos(self):
        """Testa b_1† em dois modos contra o produto de Kronecker"""
        cutoff = 2
        matrix = CodificacaoBosonicaService.map_creation(1, 2, cutoff).to_matrix()
        code = project(matrix, CodificacaoBosonicaService.fock_ordered_indices(2, cutoff))
        expected = truncated_mode_operator(truncated_creation(cutoff), 1, 2)

        assert np.allclose(code, expected, atol=1e-12)

    def test_aniquilacao_e_adjunto(self):
        """Testa que b é o adjunto de b†"""
        creation = CodificacaoBosonicaService.map_creation(0, 2, 1).to_matrix()
        annihilation = CodificacaoBosonicaService.map_annihilation(0, 2, 1).to_matrix()

        assert np.allclose(annihilation, creation.conj().T)

    def test_numero_e_diagonal(self):
        """Testa que n e n² são diagonais com autovalores n e n²"""
        cutoff = 3
        number = CodificacaoBosonicaService.map_number(0, 1, cutoff)
        squared = CodificacaoBosonicaService.map_number_squared(0, 1, cutoff)

        assert number.is_diagonal()
        assert squared.is_diagonal()
        for n in range(cutoff + 1):
            index = CodificacaoBosonicaService.encode_index([n], cutoff)
            assert abs(number.diagonal()[index] - n) < 1e-12
            assert abs(squared.diagonal()[index] - n * n) < 1e-12

    def test_numero_igual_bdagger_b(self):
        """Testa n = b†b no espaço de código"""
        cutoff = 3
        creation = CodificacaoBosonicaService.map_creation(0, 1, cutoff)
        product = (creation * creation.adjoint()).to_matrix()
        number = CodificacaoBosonicaService.map_number(0, 1, cutoff).to_matrix()
        indices = CodificacaoBosonicaService.fock_ordered_indices(1, cutoff)

        assert np.allclose(project(product, indices), project(number, indices), atol=1e-12)

    def test_numeros_comutam(self):
        """Testa [n_0, n_1] = 0 simbolicamente"""
        n0 = CodificacaoBosonicaService.map_number(0, 2, 2)
        n1 = CodificacaoBosonicaService.map_number(1, 2, 2)

        assert len(n0.commutator(n1)) == 0

    def test_modo_invalido(self):
        """Testa ModeIndexOutOfRange"""
        with pytest.raises(ModeIndexOutOfRange):
            CodificacaoBosonicaService.map_creation(2, 2, 1)

    def test_corte_invalido(self):
        """Testa DimensionTooLarge para N_P fora de [1, 7]"""
        with pytest.raises(DimensionTooLarge):
            CodificacaoBosonicaService.map_number(0, 1, 8)
        with pytest.raises(DimensionTooLarge):
            CodificacaoBosonicaService.map_creation(0, 1, 0)


class TestCacheConcorrente:
    """Testes para os construtores memoizados sob várias threads"""

    def test_chamadas_paralelas(self):
        """Testa resultados iguais e cache dentro do limite com 8 threads"""
        clear_caches()
        calls = [(mode, 3, cutoff) for mode in range(3) for cutoff in range(1, 4)] * 20
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda args: CodificacaoBosonicaService.map_number_squared(*args), calls))

        for args, result in zip(calls, results):
            assert result == CodificacaoBosonicaService.map_number_squared(*args)
        stats = cache_stats()["app.services.codificacao_service.CodificacaoBosonicaService.map_number_squared"]
        assert stats["size"] == 9
        assert stats["size"] <= stats["maxsize"]

    def test_limpeza(self):
        """Testa que clear_caches esvazia todos os caches"""
        CodificacaoBosonicaService.map_creation(0, 2, 1)
        clear_caches()

        assert all(entry["size"] == 0 for entry in cache_stats().values())


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
