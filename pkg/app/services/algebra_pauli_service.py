"""
Serviço de álgebra de Pauli
Responsabilidade: produtos, comutação, simplificação, partição em grupos comutantes e matrizes densas
"""
from typing import List

import numpy as np

from app.core.config import LIMITS_CONFIG
from app.core.exceptions import DimensionTooLarge, WidthMismatch
from app.models.pauli import PauliSum, PauliTerm


def _same_width(a: PauliTerm, b: PauliTerm) -> None:
    if a.width != b.width:
        raise WidthMismatch(
            f"Larguras diferentes: {a.width} e {b.width}",
            {"esquerda": a.axes, "direita": b.axes},
        )


class AlgebraPauliService:
    """Operações sobre PauliTerm/PauliSum"""

    @staticmethod
    def multiply(a: PauliTerm, b: PauliTerm) -> PauliTerm:
        _same_width(a, b)
        return a.dot(b)

    @staticmethod
    def commutes(a: PauliTerm, b: PauliTerm) -> bool:
        """Critério simplético: número par de posições com eixos não triviais diferentes."""
        _same_width(a, b)
        return a.commutes_with(b)

    @staticmethod
    def simplify(s: PauliSum) -> PauliSum:
        return s.simplify()

    @staticmethod
    def commuting_groups(s: PauliSum) -> List[List[PauliTerm]]:
        """Partição gulosa; cada termo entra no primeiro grupo com o qual comuta inteiramente."""
        groups: List[List[PauliTerm]] = []
        for term in s.terms:
            for group in groups:
                if all(term.commutes_with(member) for member in group):
                    group.append(term)
                    break
            else:
                groups.append([term])
        return groups

    @staticmethod
    def all_commute(s: PauliSum) -> bool:
        return len(AlgebraPauliService.commuting_groups(s)) <= 1

    @staticmethod
    def to_matrix(s: PauliSum) -> np.ndarray:
        """
        Matriz densa da soma

        Raises:
            DimensionTooLarge: largura acima de LIMITS_CONFIG['max_matrix_qubits']
        """
        if s.width > LIMITS_CONFIG["max_matrix_qubits"]:
            raise DimensionTooLarge(
                f"Matriz de {s.width} qubits excede o limite de {LIMITS_CONFIG['max_matrix_qubits']}",
                {"qubits": s.width},
            )
        return s.to_matrix()

    @staticmethod
    def term_matrix(term: PauliTerm) -> np.ndarray:
        return AlgebraPauliService.to_matrix(PauliSum(term.width, (term,)))

    @staticmethod
    def render(s: PauliSum) -> str:
        return s.render()
