"""
Strings de Pauli com peso complexo e combinações lineares delas
Responsabilidade: representação intermediária (IR) do compilador

Cada qubit guarda dois bits (x, z): I=(0,0), X=(1,0), Z=(0,1), Y=(1,1).
O operador do termo é coeficiente · i^{|x&z|} · X^x Z^z, com o qubit k no bit k.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple

import numpy as np

from app.core.config import NUMERIC_CONFIG
from app.core.exceptions import WidthMismatch

_LABEL_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_ORDER = {"I": "0", "X": "1", "Y": "2", "Z": "3"}
_PHASES = (1, 1j, -1, -1j)


def popcount(value: int) -> int:
    return bin(value).count("1")


def _clean(value: complex, tol: float) -> complex:
    real = 0.0 if abs(value.real) < tol else value.real
    imag = 0.0 if abs(value.imag) < tol else value.imag
    return complex(real, imag)


@dataclass(frozen=True)
class PauliTerm:
    """Produto tensorial de Paulis de um qubit com coeficiente complexo"""

    coefficient: complex
    x_bits: int
    z_bits: int
    width: int

    @classmethod
    def from_label(cls, label: str, coefficient: complex = 1.0) -> "PauliTerm":
        """Constrói a partir de um rótulo como 'XXYZ' (qubit 0 à esquerda)."""
        x_bits = z_bits = 0
        for k, char in enumerate(label.upper()):
            if char not in _LABEL_TO_BITS:
                raise ValueError(f"Rótulo de Pauli inválido: {char!r}")
            x, z = _LABEL_TO_BITS[char]
            x_bits |= x << k
            z_bits |= z << k
        return cls(complex(coefficient), x_bits, z_bits, len(label))

    @classmethod
    def from_ops(cls, width: int, ops: Dict[int, str], coefficient: complex = 1.0) -> "PauliTerm":
        """Constrói a partir de {qubit: eixo}; qubits ausentes são identidade."""
        label = ["I"] * width
        for qubit, axis in ops.items():
            label[qubit] = axis
        return cls.from_label("".join(label), coefficient)

    @classmethod
    def identity(cls, width: int, coefficient: complex = 1.0) -> "PauliTerm":
        return cls(complex(coefficient), 0, 0, width)

    @property
    def axes(self) -> str:
        chars = []
        for k in range(self.width):
            x = (self.x_bits >> k) & 1
            z = (self.z_bits >> k) & 1
            chars.append("IXZY"[x | (z << 1)])
        return "".join(chars)

    @property
    def key(self) -> Tuple[int, int]:
        return (self.x_bits, self.z_bits)

    @property
    def support(self) -> List[int]:
        mask = self.x_bits | self.z_bits
        return [k for k in range(self.width) if (mask >> k) & 1]

    @property
    def weight(self) -> int:
        return popcount(self.x_bits | self.z_bits)

    def is_identity(self) -> bool:
        return (self.x_bits | self.z_bits) == 0

    def sort_key(self) -> str:
        return "".join(_ORDER[c] for c in self.axes)

    def scaled(self, factor: complex) -> "PauliTerm":
        return PauliTerm(self.coefficient * factor, self.x_bits, self.z_bits, self.width)

    def with_coefficient(self, coefficient: complex) -> "PauliTerm":
        return PauliTerm(complex(coefficient), self.x_bits, self.z_bits, self.width)

    def dot(self, other: "PauliTerm") -> "PauliTerm":
        """Produto self·other com rastreamento de fase (sem checar largura)."""
        x = self.x_bits ^ other.x_bits
        z = self.z_bits ^ other.z_bits
        exponent = (
            popcount(self.x_bits & self.z_bits)
            + popcount(other.x_bits & other.z_bits)
            - popcount(x & z)
            + 2 * popcount(self.z_bits & other.x_bits)
        ) % 4
        coefficient = self.coefficient * other.coefficient * _PHASES[exponent]
        return PauliTerm(coefficient, x, z, self.width)

    def commutes_with(self, other: "PauliTerm") -> bool:
        anti = popcount((self.x_bits & other.z_bits) ^ (self.z_bits & other.x_bits))
        return anti % 2 == 0

    def render(self) -> str:
        ops = " ".join(f"{self.axes[k]}{k + 1}" for k in self.support) or "I"
        return f"{format_coefficient(self.coefficient)}·{ops}"


def format_coefficient(value: complex) -> str:
    if value.imag == 0:
        return f"{value.real:.12g}"
    if value.real == 0:
        return f"{value.imag:.12g}i"
    return f"({value.real:.12g}{value.imag:+.12g}i)"


@dataclass(frozen=True)
class PauliSum:
    """Combinação linear de PauliTerms sobre um registro de largura fixa"""

    width: int
    terms: Tuple[PauliTerm, ...] = field(default_factory=tuple)

    @classmethod
    def from_terms(cls, width: int, terms: Iterable[PauliTerm]) -> "PauliSum":
        return cls(width, tuple(terms)).simplify()

    @classmethod
    def zero(cls, width: int) -> "PauliSum":
        return cls(width, ())

    @classmethod
    def constant(cls, width: int, value: complex) -> "PauliSum":
        return cls.from_terms(width, [PauliTerm.identity(width, value)])

    @classmethod
    def single(cls, width: int, qubit: int, axis: str, coefficient: complex = 1.0) -> "PauliSum":
        return cls(width, (PauliTerm.from_ops(width, {qubit: axis}, coefficient),))

    @classmethod
    def sigma_plus(cls, width: int, qubit: int) -> "PauliSum":
        """σ+ = (X + iY)/2, que leva |1⟩ a |0⟩."""
        return cls(width, (
            PauliTerm.from_ops(width, {qubit: "X"}, 0.5),
            PauliTerm.from_ops(width, {qubit: "Y"}, 0.5j),
        ))

    @classmethod
    def sigma_minus(cls, width: int, qubit: int) -> "PauliSum":
        """σ- = (X - iY)/2, que leva |0⟩ a |1⟩."""
        return cls(width, (
            PauliTerm.from_ops(width, {qubit: "X"}, 0.5),
            PauliTerm.from_ops(width, {qubit: "Y"}, -0.5j),
        ))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def simplify(self, tol: float = None) -> "PauliSum":
        """Funde eixos iguais, poda coeficientes pequenos e ordena lexicograficamente (I<X<Y<Z)."""
        if tol is None:
            tol = NUMERIC_CONFIG["prune_tolerance"]
        merged: Dict[Tuple[int, int], complex] = {}
        for term in self.terms:
            merged[term.key] = merged.get(term.key, 0j) + term.coefficient
        kept = []
        for (x_bits, z_bits), coefficient in merged.items():
            coefficient = _clean(coefficient, tol)
            if abs(coefficient) < tol:
                continue
            kept.append(PauliTerm(coefficient, x_bits, z_bits, self.width))
        kept.sort(key=PauliTerm.sort_key)
        return PauliSum(self.width, tuple(kept))

    def _check_width(self, other: "PauliSum") -> None:
        if other.width != self.width:
            raise WidthMismatch(
                f"Larguras diferentes: {self.width} e {other.width}",
                {"esquerda": self.width, "direita": other.width},
            )

    def __add__(self, other: "PauliSum") -> "PauliSum":
        self._check_width(other)
        return PauliSum(self.width, self.terms + other.terms).simplify()

    def __sub__(self, other: "PauliSum") -> "PauliSum":
        return self + other.scaled(-1)

    def scaled(self, factor: complex) -> "PauliSum":
        return PauliSum(self.width, tuple(t.scaled(factor) for t in self.terms)).simplify()

    def __rmul__(self, factor: complex) -> "PauliSum":
        return self.scaled(factor)

    def __mul__(self, other):
        if isinstance(other, PauliSum):
            self._check_width(other)
            products = [a.dot(b) for a in self.terms for b in other.terms]
            return PauliSum(self.width, tuple(products)).simplify()
        return self.scaled(other)

    def adjoint(self) -> "PauliSum":
        return PauliSum(self.width, tuple(t.with_coefficient(t.coefficient.conjugate()) for t in self.terms))

    def commutator(self, other: "PauliSum") -> "PauliSum":
        return self * other - other * self

    def is_hermitian(self, tol: float = None) -> bool:
        if tol is None:
            tol = NUMERIC_CONFIG["prune_tolerance"]
        return all(abs(t.coefficient.imag) < tol for t in self.simplify().terms)

    def is_diagonal(self) -> bool:
        return all(t.x_bits == 0 for t in self.terms)

    def constant_term(self) -> complex:
        return sum((t.coefficient for t in self.terms if t.is_identity()), 0j)

    def coefficient_of(self, label: str) -> complex:
        key = PauliTerm.from_label(label).key
        return sum((t.coefficient for t in self.terms if t.key == key), 0j)

    def labels(self) -> List[str]:
        return [t.axes for t in self.terms]

    def embedded(self, width: int, offset: int = 0) -> "PauliSum":
        """Reposiciona os termos num registro maior, deslocando os qubits."""
        return PauliSum(width, tuple(
            PauliTerm(t.coefficient, t.x_bits << offset, t.z_bits << offset, width) for t in self.terms
        ))

    def render(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(t.render() for t in self.terms)

    def to_matrix(self) -> np.ndarray:
        """Matriz densa 2^Q x 2^Q; o qubit k corresponde ao bit k do índice."""
        dim = 1 << self.width
        indices = np.arange(dim, dtype=np.int64)
        matrix = np.zeros((dim, dim), dtype=complex)
        for term in self.terms:
            phase = term.coefficient * _PHASES[popcount(term.x_bits & term.z_bits) % 4]
            rows = indices ^ term.x_bits
            matrix[rows, indices] += phase * z_signs(indices, term.z_bits)
        return matrix

    def diagonal(self) -> np.ndarray:
        """Diagonal (somente para somas com eixos I/Z)."""
        dim = 1 << self.width
        indices = np.arange(dim, dtype=np.int64)
        values = np.zeros(dim, dtype=complex)
        for term in self.terms:
            if term.x_bits:
                raise ValueError("Soma não diagonal")
            values += term.coefficient * z_signs(indices, term.z_bits)
        return values


def z_signs(indices: np.ndarray, z_bits: int) -> np.ndarray:
    """(-1)^{|idx & z|} para cada índice."""
    parity = np.zeros(indices.shape, dtype=np.int64)
    k = 0
    mask = z_bits
    while mask:
        if mask & 1:
            parity ^= (indices >> k) & 1
        mask >>= 1
        k += 1
    return 1 - 2 * parity
