"""
Testes unitários para PauliTerm, PauliSum e AlgebraPauliService
"""
import itertools

import numpy as np
import pytest

from app.core.exceptions import DimensionTooLarge, WidthMismatch
from app.models.pauli import PauliSum, PauliTerm
from app.services.algebra_pauli_service import AlgebraPauliService

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _kron_label(label: str) -> np.ndarray:
    """Matriz de referência; o qubit 0 é o bit menos significativo (fator mais à direita)."""
    out = np.array([[1.0 + 0j]])
    for char in reversed(label):
        out = np.kron(out, _SINGLE[char])
    return out


class TestPauliTerm:
    """Testes para strings de Pauli"""

    def test_rotulo_e_eixos(self):
        """Testa a ida e volta rótulo -> bits -> eixos"""
        term = PauliTerm.from_label("XYZI")

        assert term.axes == "XYZI"
        assert term.support == [0, 1, 2]
        assert term.weight == 3

    def test_rotulo_invalido(self):
        """Testa rótulo com caractere desconhecido"""
        with pytest.raises(ValueError):
            PauliTerm.from_label("XQ")

    def test_produto_xy(self):
        """Testa X·Y = iZ"""
        product = AlgebraPauliService.multiply(PauliTerm.from_label("X"), PauliTerm.from_label("Y"))

        assert product.axes == "Z"
        assert product.coefficient == 1j

    def test_produto_yx(self):
        """Testa Y·X = −iZ"""
        product = AlgebraPauliService.multiply(PauliTerm.from_label("Y"), PauliTerm.from_label("X"))

        assert product.axes == "Z"
        assert product.coefficient == -1j

    def test_produto_contra_matrizes(self):
        """Testa o produto simbólico contra o produto de matrizes em 2 qubits"""
        labels = ["".join(p) for p in itertools.product("IXYZ", repeat=2)]
        for la, lb in itertools.product(labels, repeat=2):
            a, b = PauliTerm.from_label(la, 0.5), PauliTerm.from_label(lb, -2j)
            product = AlgebraPauliService.term_matrix(a.dot(b))
            assert np.allclose(product, AlgebraPauliService.term_matrix(a) @ AlgebraPauliService.term_matrix(b))

    def test_matriz_de_referencia(self):
        """Testa to_matrix contra produtos de Kronecker"""
        for label in ("XZ", "YI", "ZY", "XYZ"):
            assert np.allclose(AlgebraPauliService.term_matrix(PauliTerm.from_label(label)), _kron_label(label))

    def test_comutacao(self):
        """Testa o critério simplético"""
        assert AlgebraPauliService.commutes(PauliTerm.from_label("XX"), PauliTerm.from_label("YY"))
        assert not AlgebraPauliService.commutes(PauliTerm.from_label("XI"), PauliTerm.from_label("ZI"))
        assert AlgebraPauliService.commutes(PauliTerm.from_label("XI"), PauliTerm.from_label("IZ"))

    def test_comutacao_larguras_diferentes(self):
        """Testa WidthMismatch entre termos"""
        with pytest.raises(WidthMismatch):
            AlgebraPauliService.commutes(PauliTerm.from_label("X"), PauliTerm.from_label("XX"))

    def test_render(self):
        """Testa a forma textual com rótulos a partir de 1"""
        assert PauliTerm.from_label("XXYY", 0.125).render() == "0.125·X1 X2 Y3 Y4"
        assert PauliTerm.from_label("IZIX", -0.5).render() == "-0.5·Z2 X4"
        assert PauliTerm.identity(2, 3.0).render() == "3·I"


class TestPauliSum:
    """Testes para combinações lineares de strings"""

    def test_simplify_funde_e_poda(self):
        """Testa fusão de eixos iguais e poda de coeficientes nulos"""
        s = PauliSum(2, (
            PauliTerm.from_label("XI", 1.0),
            PauliTerm.from_label("ZZ", 0.5),
            PauliTerm.from_label("XI", -1.0),
            PauliTerm.from_label("ZZ", 0.25),
        )).simplify()

        assert s.labels() == ["ZZ"]
        assert s.coefficient_of("ZZ") == 0.75

    def test_ordem_lexicografica(self):
        """Testa a ordem I < X < Y < Z"""
        s = PauliSum.from_terms(2, [PauliTerm.from_label(label) for label in ("ZI", "YX", "IX", "XZ", "XX")])

        assert s.labels() == ["IX", "XX", "XZ", "YX", "ZI"]

    def test_simplify_idempotente(self):
        """Testa simplify(simplify(s)) == simplify(s)"""
        s = PauliSum.sigma_plus(3, 1) * PauliSum.sigma_minus(3, 2) + PauliSum.constant(3, 0.5)

        assert s.simplify() == s
        assert s.simplify().simplify() == s.simplify()

    def test_sigma_mais_e_menos(self):
        """Testa σ+|1⟩ = |0⟩ e σ-|0⟩ = |1⟩"""
        plus = PauliSum.sigma_plus(1, 0).to_matrix()
        minus = PauliSum.sigma_minus(1, 0).to_matrix()

        assert np.allclose(plus, [[0, 1], [0, 0]])
        assert np.allclose(minus, [[0, 0], [1, 0]])

    def test_soma_larguras_diferentes(self):
        """Testa WidthMismatch na soma"""
        with pytest.raises(WidthMismatch):
            PauliSum.single(2, 0, "X") + PauliSum.single(3, 0, "X")

    def test_adjunto_e_hermitiano(self):
        """Testa que s + s† é hermitiano"""
        s = PauliSum.sigma_plus(2, 0) * PauliSum.sigma_minus(2, 1)
        h = s + s.adjoint()

        assert not s.is_hermitian()
        assert h.is_hermitian()
        assert np.allclose(h.to_matrix(), h.to_matrix().conj().T)

    def test_comutador(self):
        """Testa [X, Z] = −2iY"""
        commutator = PauliSum.single(1, 0, "X").commutator(PauliSum.single(1, 0, "Z"))

        assert commutator.labels() == ["Y"]
        assert commutator.coefficient_of("Y") == -2j

    def test_embutir(self):
        """Testa o deslocamento de qubits num registro maior"""
        s = PauliSum.single(2, 1, "Y").embedded(4, offset=2)

        assert s.labels() == ["IIIY"]

    def test_render_vazio(self):
        """Testa a soma vazia"""
        assert PauliSum.zero(3).render() == "0"

    def test_grupos_comutantes(self):
        """Testa a partição gulosa em grupos comutantes"""
        s = PauliSum.from_terms(1, [PauliTerm.from_label(label) for label in ("X", "Y", "Z")])
        groups = AlgebraPauliService.commuting_groups(s)

        assert len(groups) == 3
        assert not AlgebraPauliService.all_commute(s)
        assert AlgebraPauliService.all_commute(PauliSum.from_terms(2, [PauliTerm.from_label("XX"), PauliTerm.from_label("YY")]))

    def test_matriz_grande_demais(self):
        """Testa DimensionTooLarge acima de 12 qubits"""
        with pytest.raises(DimensionTooLarge):
            AlgebraPauliService.to_matrix(PauliSum.single(13, 0, "X"))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
