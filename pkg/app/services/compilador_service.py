"""
Serviço do compilador de circuitos
Responsabilidade: Trotter -> decomposição por conjugação (RX/RZ/RZX) -> CNOT -> peephole
"""
import logging
import math
from collections import Counter
from typing import Dict, List, Sequence, Union

from app.core.config import LIMITS_CONFIG, NUMERIC_CONFIG
from app.core.exceptions import DimensionTooLarge, IdentityString, NonHermitianGenerator, UnsupportedAngle
from app.models.circuito import Circuit, Gate, GateKind, TrotterSchedule
from app.models.pauli import PauliSum, PauliTerm
from app.services.algebra_pauli_service import AlgebraPauliService
from app.services.hamiltonianos_service import HamiltonianosService

logger = logging.getLogger(__name__)

QUARTER = math.pi / 4
HALF = math.pi / 2
TWO_PI = 2 * math.pi
FOUR_PI = 4 * math.pi

# Malhas de divisores: ordem alternada entre passos
SYMMETRIC_KINDS = ("Interferometer", "Bogoliubov")


def _is_multiple(angle: float, period: float, offset: float = 0.0) -> bool:
    """angle ≡ offset (mod period) dentro da tolerância de ângulo."""
    r = (angle - offset) % period
    return min(r, period - r) < NUMERIC_CONFIG["angle_tolerance"]


def _wrap(angle: float) -> float:
    return math.remainder(angle, TWO_PI)


class _Conjugator:
    """Acumula V e rastreia O = V P V† simbolicamente"""

    def __init__(self, term: PauliTerm):
        self.width = term.width
        self.operator = PauliTerm(1 + 0j, term.x_bits, term.z_bits, term.width)
        self.gates: List[Gate] = []

    def axis(self, qubit: int) -> str:
        return self.operator.axes[qubit]

    def apply(self, gate: Gate, generator: Dict[int, str]) -> None:
        """Anexa e^{iπ/4 S}; se S anticomuta com O, O -> i·S·O."""
        self.gates.append(gate)
        s = PauliTerm.from_ops(self.width, generator)
        if not s.commutes_with(self.operator):
            self.operator = s.dot(self.operator).scaled(1j)

    def rx(self, qubit: int) -> None:
        self.apply(Gate.rx(qubit, -HALF), {qubit: "X"})

    def rz(self, qubit: int) -> None:
        self.apply(Gate.rz(qubit, -HALF), {qubit: "Z"})

    def rzx(self, control: int, target: int) -> None:
        self.apply(Gate.rzx(control, target, QUARTER), {control: "Z", target: "X"})


class CompiladorService:
    """Pipeline de compilação modelo bosônico -> circuito"""

    @staticmethod
    def trotterize(
        h: Union[PauliSum, Sequence[PauliSum]], t: float, s: int, symmetric: bool = False
    ) -> TrotterSchedule:
        """
        Entradas (termo, coef·t/s) repetidas s vezes; termos todos comutantes forçam s = 1

        Os fragmentos são concatenados na ordem dada, cada um em ordem lexicográfica.
        Com symmetric, os passos ímpares usam a ordem inversa (pares de passos simétricos).
        Termos identidade viram fase global.

        Raises:
            NonHermitianGenerator: coeficiente com parte imaginária
        """
        if s < 1:
            raise ValueError("O número de passos s deve ser >= 1")
        fragments = [h] if isinstance(h, PauliSum) else list(h)
        width = fragments[0].width if fragments else 0
        terms: List[PauliTerm] = []
        identity_phase = 0.0
        for fragment in fragments:
            for term in fragment.simplify().terms:
                if abs(term.coefficient.imag) > NUMERIC_CONFIG["prune_tolerance"]:
                    raise NonHermitianGenerator(
                        f"Coeficiente não real em {term.axes}: {term.coefficient}",
                        {"termo": term.axes, "imag": term.coefficient.imag},
                    )
                if term.is_identity():
                    identity_phase += term.coefficient.real * t
                else:
                    terms.append(term)
        exact = AlgebraPauliService.all_commute(PauliSum(width, tuple(terms)))
        steps = 1 if exact else s
        one_step = tuple((term, term.coefficient.real * t / steps) for term in terms)
        symmetric = symmetric and not exact
        if symmetric:
            entries = tuple(
                entry for k in range(steps) for entry in (one_step if k % 2 == 0 else one_step[::-1])
            )
        else:
            entries = one_step * steps
        return TrotterSchedule(
            entries=entries,
            steps=steps,
            exact=exact,
            symmetric=symmetric,
            identity_phase=identity_phase,
            term_order=tuple(term.axes for term in terms),
        )

    @staticmethod
    def string_to_gates(term: PauliTerm, theta: float) -> Circuit:
        """
        Circuito V, RZ no âncora, V† que realiza exatamente e^{iθP}

        O âncora é o menor qubit não trivial. Parceiros Y viram X com RZ(−π/2);
        cada parceiro é absorvido por um RZX(π/4) (X: âncora controla; Z: parceiro controla).

        Raises:
            IdentityString: P sem eixo não trivial
        """
        if term.is_identity():
            raise IdentityString("String identidade não gera portas", {"axes": term.axes})
        support = term.support
        anchor = support[0]
        axes = term.axes
        if len(support) == 1 and axes[anchor] == "X":
            return Circuit(term.width, (Gate.rx(anchor, -2 * theta),))
        if len(support) == 1 and axes[anchor] == "Z":
            return Circuit(term.width, (Gate.rz(anchor, -2 * theta),))

        conj = _Conjugator(term)
        partners = support[1:]
        for k in partners:
            if conj.axis(k) == "Y":
                conj.rz(k)
        for k in partners:
            if conj.axis(k) == "X":
                if conj.axis(anchor) == "Z":
                    conj.rx(anchor)
                conj.rzx(anchor, k)
            else:
                if conj.axis(anchor) == "X":
                    conj.rz(anchor)
                conj.rzx(k, anchor)
        if conj.axis(anchor) == "Y":
            conj.rx(anchor)
        elif conj.axis(anchor) == "X":
            conj.rz(anchor)
            conj.rx(anchor)

        sign = conj.operator.coefficient.real
        # O = ±Z_anchor
        assert conj.operator.support == [anchor] and conj.axis(anchor) == "Z"
        center = Gate.rz(anchor, -2 * sign * theta)
        gates = conj.gates + [center] + [g.inverse() for g in reversed(conj.gates)]
        return Circuit(term.width, tuple(gates))

    @staticmethod
    def schedule_to_circuit(schedule: TrotterSchedule, width: int) -> Circuit:
        gates: List[Gate] = []
        for term, angle in schedule.entries:
            gates.extend(CompiladorService.string_to_gates(term, angle).gates)
        return Circuit(width, tuple(gates), schedule.identity_phase)

    @staticmethod
    def lower_to_cnot(c: Circuit) -> Circuit:
        """
        RZX(±π/4) -> CNOT com rotações locais; a fase e^{∓iπ/4} vai para global_phase

        Raises:
            UnsupportedAngle: RZX com ângulo diferente de ±π/4 (mod 2π)
        """
        gates: List[Gate] = []
        phase = c.global_phase
        for gate in c.gates:
            if gate.kind is not GateKind.RZX:
                gates.append(gate)
                continue
            a, b = gate.qubits
            if _is_multiple(gate.angle, TWO_PI, QUARTER):
                gates.extend([Gate.cnot(a, b), Gate.rz(a, -HALF), Gate.rx(b, -HALF)])
                phase -= QUARTER
            elif _is_multiple(gate.angle, TWO_PI, -QUARTER):
                gates.extend([Gate.rx(b, HALF), Gate.rz(a, HALF), Gate.cnot(a, b)])
                phase += QUARTER
            else:
                raise UnsupportedAngle(
                    f"RZX({gate.angle!r}) em {gate.qubits} não é ±π/4",
                    {"angulo": gate.angle, "qubits": list(gate.qubits)},
                )
        return c.with_gates(gates, global_phase=phase)

    @staticmethod
    def _drop_trivial(gates: List[Gate]):
        kept, phase = [], 0.0
        for gate in gates:
            if gate.kind in (GateKind.RX, GateKind.RZ):
                if _is_multiple(gate.angle, FOUR_PI):
                    continue
                if _is_multiple(gate.angle, FOUR_PI, TWO_PI):
                    phase += math.pi
                    continue
            elif gate.kind is GateKind.RZX:
                if _is_multiple(gate.angle, TWO_PI):
                    continue
                if _is_multiple(gate.angle, TWO_PI, math.pi):
                    phase += math.pi
                    continue
            kept.append(gate)
        return kept, phase

    @staticmethod
    def _merge_pass(gates: List[Gate]):
        """Uma varredura: cada porta encontra a próxima porta que toca algum de seus qubits."""
        live = list(gates)
        alive = [True] * len(live)
        phase = 0.0
        changed = False
        for idx, gate in enumerate(live):
            if not alive[idx]:
                continue
            touched = set(gate.qubits)
            for jdx in range(idx + 1, len(live)):
                if not alive[jdx] or not touched.intersection(live[jdx].qubits):
                    continue
                other = live[jdx]
                if other.kind is not gate.kind or other.qubits != gate.qubits:
                    break
                if gate.kind is GateKind.CNOT:
                    alive[idx] = alive[jdx] = False
                    changed = True
                elif gate.kind in (GateKind.RX, GateKind.RZ):
                    live[idx] = Gate(gate.kind, gate.qubits, gate.angle + other.angle)
                    alive[jdx] = False
                    changed = True
                else:
                    total = gate.angle + other.angle
                    if _is_multiple(total, TWO_PI):
                        alive[idx] = alive[jdx] = False
                        changed = True
                    elif _is_multiple(total, TWO_PI, math.pi):
                        alive[idx] = alive[jdx] = False
                        phase += math.pi
                        changed = True
                break
        return [g for g, ok in zip(live, alive) if ok], phase, changed

    @staticmethod
    def peephole_optimize(c: Circuit) -> Circuit:
        """Cancelamento de pares inversos, fusão de rotações e remoção de ângulos nulos, até o ponto fixo."""
        gates = list(c.gates)
        phase = c.global_phase
        while True:
            gates, dropped_phase = CompiladorService._drop_trivial(gates)
            phase += dropped_phase
            gates, merged_phase, changed = CompiladorService._merge_pass(gates)
            phase += merged_phase
            if not changed:
                gates, dropped_phase = CompiladorService._drop_trivial(gates)
                phase += dropped_phase
                break
        return c.with_gates(gates, global_phase=phase)

    @staticmethod
    def gate_counts(c: Circuit) -> Dict[str, int]:
        return c.counts()

    @staticmethod
    def term_inventory(schedules: Sequence[TrotterSchedule]) -> Dict[str, int]:
        """Strings distintas de um passo, por peso: 1, 2 e maiores."""
        weights = Counter()
        for schedule in schedules:
            step = len(schedule.entries) // schedule.steps if schedule.steps else 0
            for term, _ in schedule.entries[:step]:
                weights["weight_1" if term.weight == 1 else "weight_2" if term.weight == 2 else "heavier"] += 1
        return {key: weights.get(key, 0) for key in ("weight_1", "weight_2", "heavier")}

    @staticmethod
    def compile(spec, t: float, s: int = 1, target: str = "zx", optimize: bool = True) -> Circuit:
        """
        Compila uma especificação bosônica em circuito determinístico

        Raises:
            DimensionTooLarge: registro acima de LIMITS_CONFIG['max_sim_qubits']
        """
        width = spec.width
        if width > LIMITS_CONFIG["max_sim_qubits"]:
            raise DimensionTooLarge(
                f"{width} qubits excede o limite de {LIMITS_CONFIG['max_sim_qubits']}",
                {"qubits": width},
            )
        target = target.lower()
        if target not in ("zx", "cnot"):
            raise ValueError(f"Alvo desconhecido: {target}")

        segments = HamiltonianosService.segments(spec)
        symmetric = spec.kind in SYMMETRIC_KINDS
        schedules = [CompiladorService.trotterize(segment, t, s, symmetric) for segment in segments]
        circuit = Circuit(width, (), 0.0)
        for schedule in schedules:
            circuit = circuit.extend(CompiladorService.schedule_to_circuit(schedule, width))
        naive = circuit.counts()

        if optimize:
            circuit = CompiladorService.peephole_optimize(circuit)
        if target == "cnot":
            circuit = CompiladorService.lower_to_cnot(circuit)
            if optimize:
                circuit = CompiladorService.peephole_optimize(circuit)

        exact = all(schedule.exact for schedule in schedules)
        metadata = {
            "kind": spec.kind,
            "time": t,
            "steps_requested": s,
            "steps_used": [schedule.steps for schedule in schedules],
            "exact": exact,
            "target": target,
            "optimized": optimize,
            "symmetric_order": symmetric,
            "term_order": [list(schedule.term_order) for schedule in schedules],
            "term_inventory": CompiladorService.term_inventory(schedules),
            "naive_counts": naive,
            "final_counts": circuit.counts(),
        }
        result = Circuit(width, circuit.gates, _wrap(circuit.global_phase), metadata)
        logger.info(
            "✅ Circuito compilado: %s, %d qubits, %d portas (ingênuo %d), exato=%s",
            spec.kind, width, len(result), naive["total"], exact,
        )
        return result
