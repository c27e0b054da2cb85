"""
Hierarquia de erros do domínio
Responsabilidade: erros com categoria de código de saída (CLI) e detalhes (API)
"""
from typing import Any, Dict, Optional

EXIT_OK = 0
EXIT_SCHEMA = 3
EXIT_COMPILE = 4
EXIT_VERIFICATION = 5


class BoqcError(Exception):
    """Erro base do domínio"""

    exit_code = EXIT_COMPILE

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "success": False,
            "error": f"{type(self).__name__}: {self.message}",
            "details": self.details or None,
        }


class SchemaError(BoqcError):
    """Documento de entrada inválido (formato, campos, tipos)"""

    exit_code = EXIT_SCHEMA


class CutoffExceeded(BoqcError):
    """Ocupação maior que o corte N_P"""


class LeakageState(BoqcError):
    """Bitstring fora do espaço de código"""


class DimensionTooLarge(BoqcError):
    """Dimensão acima dos limites configurados"""


class WidthMismatch(BoqcError):
    """Larguras de registro incompatíveis"""


class ModeIndexOutOfRange(BoqcError):
    """Índice de modo inválido"""


class ShapeMismatch(BoqcError):
    """Formato de parâmetros incompatível com o modelo"""


class NonUnitary(BoqcError):
    """Matriz não unitária"""


class NotSymplectic(BoqcError):
    """Par (alpha, beta) viola as restrições de Bogoliubov"""


class UnsupportedBogoliubov(NotSymplectic):
    """Transformação válida, mas fora da estrutura em blocos suportada"""


class IdentityString(BoqcError):
    """String de Pauli sem eixo não trivial"""


class UnsupportedAngle(BoqcError):
    """Ângulo de RZX diferente de ±π/4 na conversão para CNOT"""


class IndexOutOfRange(BoqcError):
    """Índice de qubit inválido"""


class VerificationFailed(BoqcError):
    """Alguma suite de verificação falhou"""

    exit_code = EXIT_VERIFICATION


class NonHermitianGenerator(BoqcError):
    """Gerador com coeficiente não real na trotterização"""
