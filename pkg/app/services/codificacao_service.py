"""
Serviço de codificação bosônica (mapeamento unário boson -> qubit)
Responsabilidade: tradução Fock <-> bitstring e imagens de Pauli de b†, b, n e n²
"""
import itertools
import logging
import math
from typing import List, Sequence

from app.core.cache import cached
from app.core.config import LIMITS_CONFIG
from app.core.exceptions import (
    CutoffExceeded,
    DimensionTooLarge,
    LeakageState,
    ModeIndexOutOfRange,
    WidthMismatch,
)
from app.models.fock import EncodedBasisState, FockRegister
from app.models.pauli import PauliSum, PauliTerm

logger = logging.getLogger(__name__)


def bits_from_index(index: int, width: int) -> str:
    """Índice da base -> bitstring com o qubit 0 à esquerda."""
    return "".join("1" if (index >> k) & 1 else "0" for k in range(width))


def index_from_bits(bits: str) -> int:
    return sum(1 << k for k, bit in enumerate(bits) if bit == "1")


def _check_cutoff(cutoff: int) -> None:
    if cutoff < 1 or cutoff > LIMITS_CONFIG["max_cutoff"]:
        raise DimensionTooLarge(
            f"Corte N_P={cutoff} fora do intervalo suportado [1, {LIMITS_CONFIG['max_cutoff']}]",
            {"cutoff": cutoff},
        )


def _check_mode(mode: int, modes: int) -> None:
    if not 0 <= mode < modes:
        raise ModeIndexOutOfRange(f"Modo {mode} fora de [0, {modes})", {"modo": mode, "modos": modes})


class CodificacaoBosonicaService:
    """Mapeamento unário: o nível n do modo j é marcado pelo único bit 0 no slot n do bloco"""

    @staticmethod
    def register_width(modes: int, cutoff: int) -> int:
        return modes * (cutoff + 1)

    @staticmethod
    def encode_fock(reg: FockRegister) -> EncodedBasisState:
        """
        Codifica ocupações em bits: bit n do bloco do modo é 0, os demais 1

        Raises:
            CutoffExceeded: ocupação acima de N_P
        """
        for j, n in enumerate(reg.occupations):
            if n < 0 or n > reg.cutoff:
                raise CutoffExceeded(
                    f"Ocupação {n} do modo {j} excede o corte N_P={reg.cutoff}",
                    {"modo": j, "ocupacao": n, "cutoff": reg.cutoff},
                )
        block = reg.block_size
        bits = "".join(
            "".join("0" if slot == n else "1" for slot in range(block)) for n in reg.occupations
        )
        return EncodedBasisState(bits=bits, modes=reg.modes, cutoff=reg.cutoff)

    @staticmethod
    def decode_basis(bits: str, modes: int, cutoff: int) -> FockRegister:
        """
        Inverso de encode_fock

        Raises:
            WidthMismatch: comprimento diferente de M·(N_P+1)
            LeakageState: bloco com zero ou mais de um bit 0
        """
        block = cutoff + 1
        if len(bits) != modes * block:
            raise WidthMismatch(
                f"Bitstring com {len(bits)} bits; esperado {modes * block}",
                {"bits": bits, "modos": modes, "cutoff": cutoff},
            )
        occupations = []
        for j in range(modes):
            chunk = bits[j * block:(j + 1) * block]
            zeros = [slot for slot, bit in enumerate(chunk) if bit == "0"]
            if len(zeros) != 1:
                raise LeakageState(
                    f"Bloco {chunk!r} do modo {j} fora do espaço de código",
                    {"bits": bits, "modo": j},
                )
            occupations.append(zeros[0])
        return FockRegister(tuple(occupations), cutoff)

    @staticmethod
    def encode_index(occupations: Sequence[int], cutoff: int) -> int:
        reg = FockRegister(tuple(occupations), cutoff)
        return CodificacaoBosonicaService.encode_fock(reg).index

    @staticmethod
    def decode_index(index: int, modes: int, cutoff: int) -> FockRegister:
        width = modes * (cutoff + 1)
        return CodificacaoBosonicaService.decode_basis(bits_from_index(index, width), modes, cutoff)

    @staticmethod
    @cached()
    def map_creation(mode: int, modes: int, cutoff: int) -> PauliSum:
        """b_j† = Σ_n √(n+1) σ-^{(n,j)} σ+^{(n+1,j)}, expandido em strings de Pauli."""
        _check_cutoff(cutoff)
        _check_mode(mode, modes)
        width = modes * (cutoff + 1)
        base = mode * (cutoff + 1)
        total = PauliSum.zero(width)
        for n in range(cutoff):
            lower = PauliSum.sigma_minus(width, base + n)
            upper = PauliSum.sigma_plus(width, base + n + 1)
            total = total + (lower * upper).scaled(math.sqrt(n + 1))
        logger.debug("b† do modo %d mapeado em %d strings", mode, len(total))
        return total

    @staticmethod
    @cached()
    def map_annihilation(mode: int, modes: int, cutoff: int) -> PauliSum:
        return CodificacaoBosonicaService.map_creation(mode, modes, cutoff).adjoint()

    @staticmethod
    @cached()
    def map_number(mode: int, modes: int, cutoff: int) -> PauliSum:
        """n_j = Σ_n n(1 + σz^{(n,j)})/2, com σz|0⟩ = +|0⟩."""
        _check_cutoff(cutoff)
        _check_mode(mode, modes)
        width = modes * (cutoff + 1)
        base = mode * (cutoff + 1)
        terms: List[PauliTerm] = []
        for n in range(cutoff + 1):
            terms.append(PauliTerm.identity(width, n / 2))
            terms.append(PauliTerm.from_ops(width, {base + n: "Z"}, n / 2))
        return PauliSum.from_terms(width, terms)

    @staticmethod
    @cached()
    def map_number_squared(mode: int, modes: int, cutoff: int) -> PauliSum:
        """Quadrado simbólico de map_number, simplificado."""
        number = CodificacaoBosonicaService.map_number(mode, modes, cutoff)
        return number * number

    @staticmethod
    def total_number(modes: int, cutoff: int) -> PauliSum:
        width = modes * (cutoff + 1)
        total = PauliSum.zero(width)
        for j in range(modes):
            total = total + CodificacaoBosonicaService.map_number(j, modes, cutoff)
        return total

    @staticmethod
    def code_space_projector(modes: int, cutoff: int) -> List[int]:
        """
        Índices (ordenados) das (N_P+1)^M palavras de código válidas

        Raises:
            DimensionTooLarge: M·(N_P+1) > limite de simulação
        """
        width = modes * (cutoff + 1)
        if width > LIMITS_CONFIG["max_sim_qubits"]:
            raise DimensionTooLarge(
                f"{width} qubits excede o limite de {LIMITS_CONFIG['max_sim_qubits']}",
                {"qubits": width},
            )
        return sorted(
            CodificacaoBosonicaService.encode_index(levels, cutoff)
            for levels in itertools.product(range(cutoff + 1), repeat=modes)
        )

    @staticmethod
    def fock_ordered_indices(modes: int, cutoff: int) -> List[int]:
        """Palavras de código na ordem do produto tensorial de Fock (modo 0 mais lento)."""
        return [
            CodificacaoBosonicaService.encode_index(levels, cutoff)
            for levels in itertools.product(range(cutoff + 1), repeat=modes)
        ]

    @staticmethod
    def code_words(modes: int, cutoff: int) -> List[FockRegister]:
        """Registros de Fock na mesma ordem de code_space_projector."""
        return [
            CodificacaoBosonicaService.decode_index(index, modes, cutoff)
            for index in CodificacaoBosonicaService.code_space_projector(modes, cutoff)
        ]
