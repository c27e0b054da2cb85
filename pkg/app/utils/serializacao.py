"""
Serialização de circuitos
- formato texto "boqc-circuit/1" (ida e volta)
- exportação OpenQASM 2.0 (somente ida)
"""
from typing import List

from app.core.config import CLI_CONFIG
from app.core.exceptions import SchemaError
from app.models.circuito import Circuit, Gate, GateKind


def dumps_circuit(circuit: Circuit) -> str:
    """Uma porta por linha: tipo, qubits, ângulo (repr, determinístico)."""
    lines = [
        CLI_CONFIG["circuit_format"],
        f"width {circuit.width}",
        f"global_phase {circuit.global_phase!r}",
        f"gates {len(circuit.gates)}",
    ]
    lines.extend(gate.render() for gate in circuit.gates)
    return "\n".join(lines) + "\n"


def _header_value(line: str, key: str) -> str:
    parts = line.split()
    if len(parts) != 2 or parts[0] != key:
        raise SchemaError(f"Cabeçalho esperado '{key} <valor>', recebido {line!r}")
    return parts[1]


def loads_circuit(text: str) -> Circuit:
    """
    Lê o formato "boqc-circuit/1"

    Raises:
        SchemaError: versão, cabeçalho ou linha de porta inválidos
    """
    lines = [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
    if not lines or lines[0] != CLI_CONFIG["circuit_format"]:
        raise SchemaError(f"Formato de circuito desconhecido; esperado {CLI_CONFIG['circuit_format']}")
    if len(lines) < 4:
        raise SchemaError("Cabeçalho de circuito incompleto")
    try:
        width = int(_header_value(lines[1], "width"))
        phase = float(_header_value(lines[2], "global_phase"))
        count = int(_header_value(lines[3], "gates"))
    except ValueError as exc:
        raise SchemaError(f"Cabeçalho de circuito inválido: {exc}") from exc

    gates: List[Gate] = []
    for number, line in enumerate(lines[4:], start=5):
        parts = line.split()
        try:
            kind = GateKind(parts[0])
            arity = kind.arity
            qubits = tuple(int(q) for q in parts[1:1 + arity])
            angle = float(parts[1 + arity]) if kind.parametric else None
            if len(parts) != 1 + arity + (1 if kind.parametric else 0):
                raise ValueError("número de campos")
            gates.append(Gate(kind, qubits, angle))
        except (ValueError, IndexError) as exc:
            raise SchemaError(f"Linha {number} inválida: {line!r} ({exc})") from exc
    if len(gates) != count:
        raise SchemaError(f"Esperadas {count} portas, encontradas {len(gates)}")
    try:
        return Circuit(width, tuple(gates), phase)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def to_qasm(circuit: Circuit) -> str:
    """
    Exporta para OpenQASM 2.0 (qelib1)

    RZX(θ) = H_b · CX · RZ_b(−2θ) · CX · H_b. O rz do qelib1 é u1 = e^{iλ/2}·RZ(λ),
    então o comentário global_phase já desconta Σλ/2: U = e^{i·global_phase}·(circuito qelib1).
    """
    body = []
    phase = circuit.global_phase
    for gate in circuit.gates:
        if gate.kind is GateKind.RX:
            body.append(f"rx({gate.angle!r}) q[{gate.qubits[0]}];")
        elif gate.kind is GateKind.RZ:
            body.append(f"rz({gate.angle!r}) q[{gate.qubits[0]}];")
            phase -= gate.angle / 2
        elif gate.kind is GateKind.CNOT:
            body.append(f"cx q[{gate.qubits[0]}],q[{gate.qubits[1]}];")
        else:
            a, b = gate.qubits
            body.extend([
                f"h q[{b}];",
                f"cx q[{a}],q[{b}];",
                f"rz({-2 * gate.angle!r}) q[{b}];",
                f"cx q[{a}],q[{b}];",
                f"h q[{b}];",
            ])
            phase += gate.angle
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"// global_phase {phase!r}",
        f"qreg q[{circuit.width}];",
    ]
    return "\n".join(lines + body) + "\n"
