"""
Testes unitários para VerificacaoService
"""
import pytest

from app.core.exceptions import VerificationFailed
from app.models.pauli import PauliSum
from app.services.hamiltonianos_service import HamiltonianosService
from app.services.verificacao_service import SUITES, VerificacaoService


def _flip_beam_splitter_sign(monkeypatch, label: str) -> None:
    """Troca o sinal de uma string na expansão do divisor de feixe."""
    original = HamiltonianosService.beam_splitter

    def flipped(*args, **kwargs):
        h = original(*args, **kwargs)
        return PauliSum(h.width, tuple(t.scaled(-1) if t.axes == label else t for t in h.terms))

    monkeypatch.setattr(HamiltonianosService, "beam_splitter", staticmethod(flipped))


class TestSuites:
    """Testes para as suites de invariantes"""

    @pytest.mark.parametrize("suite", ["encoding", "algebra", "compiler"])
    def test_suite_passa(self, suite):
        """Testa que a suite passa num build correto"""
        result = VerificacaoService.run_suite(suite)

        assert result.passed, [c for c in result.checks if not c.passed]
        assert len(result.checks) == len(SUITES[suite])

    def test_suite_oraculo(self):
        """Testa a suite do oráculo (HOM com s = 64)"""
        summary = VerificacaoService.run("oracle")

        assert summary.passed
        assert summary.failed_suites == []

    def test_sinal_trocado_localizado(self, monkeypatch):
        """Testa que um sinal trocado no construtor do divisor falha somente a suite de álgebra"""
        _flip_beam_splitter_sign(monkeypatch, "XYYX")

        summary = VerificacaoService.run("all")
        algebra = next(s for s in summary.suites if s.suite == "algebra")

        assert not summary.passed
        assert summary.failed_suites == ["algebra"]
        assert [c.name for c in algebra.checks if not c.passed] == ["beam_splitter_golden"]

    def test_excecao_conta_como_falha(self):
        """Testa que uma verificação que lança exceção é registrada como falha"""
        def broken():
            raise RuntimeError("quebrou")

        result = VerificacaoService.run_suite("custom", [("broken", broken), ("ok", lambda: (True, ""))])

        assert not result.passed
        assert result.checks[0].detail == "RuntimeError: quebrou"
        assert result.checks[1].passed

    def test_run_or_raise(self, monkeypatch):
        """Testa VerificationFailed com o resumo nos detalhes"""
        _flip_beam_splitter_sign(monkeypatch, "YYYY")

        with pytest.raises(VerificationFailed) as info:
            VerificacaoService.run_or_raise("algebra")

        assert info.value.exit_code == 5
        assert info.value.details["failed_suites"] == ["algebra"]

    def test_suite_desconhecida(self):
        """Testa ValueError para suite inexistente"""
        with pytest.raises(ValueError):
            VerificacaoService.run_suite("inexistente")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
