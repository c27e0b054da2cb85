"""
Portas e circuitos
Convenções: RX(θ) = e^{−iθX/2}, RZ(θ) = e^{−iθZ/2}, RZX(θ) = e^{iθ Z_a X_b}, CNOT(controle, alvo)
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple


class GateKind(str, Enum):
    RX = "RX"
    RZ = "RZ"
    RZX = "RZX"
    CNOT = "CNOT"

    @property
    def arity(self) -> int:
        return 1 if self in (GateKind.RX, GateKind.RZ) else 2

    @property
    def parametric(self) -> bool:
        return self is not GateKind.CNOT


@dataclass(frozen=True)
class Gate:
    """Porta com 1 ou 2 qubits; o ângulo é guardado sem redução"""

    kind: GateKind
    qubits: Tuple[int, ...]
    angle: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(self.qubits) != self.kind.arity:
            raise ValueError(f"{self.kind.value} exige {self.kind.arity} qubit(s), recebeu {self.qubits}")
        if self.kind.arity == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError(f"{self.kind.value} exige qubits distintos, recebeu {self.qubits}")
        if self.kind.parametric and self.angle is None:
            raise ValueError(f"{self.kind.value} exige ângulo")
        if not self.kind.parametric:
            object.__setattr__(self, "angle", None)
        else:
            object.__setattr__(self, "angle", float(self.angle))

    @classmethod
    def rx(cls, qubit: int, angle: float) -> "Gate":
        return cls(GateKind.RX, (qubit,), angle)

    @classmethod
    def rz(cls, qubit: int, angle: float) -> "Gate":
        return cls(GateKind.RZ, (qubit,), angle)

    @classmethod
    def rzx(cls, control: int, target: int, angle: float) -> "Gate":
        return cls(GateKind.RZX, (control, target), angle)

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control, target))

    def inverse(self) -> "Gate":
        if self.kind is GateKind.CNOT:
            return self
        return Gate(self.kind, self.qubits, -self.angle)

    def render(self) -> str:
        qubits = " ".join(str(q) for q in self.qubits)
        if self.angle is None:
            return f"{self.kind.value} {qubits}"
        return f"{self.kind.value} {qubits} {self.angle!r}"


@dataclass(frozen=True)
class Circuit:
    """Lista ordenada de portas sobre Q qubits, com fase global rastreada"""

    width: int
    gates: Tuple[Gate, ...] = ()
    global_phase: float = 0.0
    metadata: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            if any(q < 0 or q >= self.width for q in gate.qubits):
                raise ValueError(f"Porta {gate.render()} fora da largura {self.width}")

    def __len__(self) -> int:
        return len(self.gates)

    def with_gates(self, gates, global_phase: float = None, **metadata) -> "Circuit":
        merged = dict(self.metadata)
        merged.update(metadata)
        phase = self.global_phase if global_phase is None else global_phase
        return Circuit(self.width, tuple(gates), phase, merged)

    def inverse(self) -> "Circuit":
        return Circuit(self.width, tuple(g.inverse() for g in reversed(self.gates)), -self.global_phase)

    def extend(self, other: "Circuit") -> "Circuit":
        """other aplicado depois de self."""
        return Circuit(
            self.width,
            self.gates + other.gates,
            self.global_phase + other.global_phase,
            dict(self.metadata),
        )

    def counts(self) -> Dict[str, int]:
        single = sum(1 for g in self.gates if g.kind.arity == 1)
        rzx = sum(1 for g in self.gates if g.kind is GateKind.RZX)
        cnot = sum(1 for g in self.gates if g.kind is GateKind.CNOT)
        return {"single_qubit": single, "rzx": rzx, "cnot": cnot, "total": len(self.gates)}


@dataclass(frozen=True)
class TrotterSchedule:
    """Entradas (termo, ângulo) na ordem de aplicação; exact indica termos todos comutantes"""

    entries: Tuple[Tuple[Any, float], ...]
    steps: int
    exact: bool
    symmetric: bool = False
    identity_phase: float = 0.0
    term_order: Tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)
