"""
Utilitários de matrizes densas (verificação numérica)
"""
from typing import Sequence

import numpy as np


def unitarity_error(matrix: np.ndarray) -> float:
    """‖U†U − I‖ (norma de Frobenius)."""
    matrix = np.asarray(matrix, dtype=complex)
    return float(np.linalg.norm(matrix.conj().T @ matrix - np.eye(matrix.shape[0])))


def is_unitary(matrix: np.ndarray, tol: float) -> bool:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    return unitarity_error(matrix) < tol


def phase_insensitive_distance(a: np.ndarray, b: np.ndarray) -> float:
    """
    min_φ ‖a − e^{iφ} b‖ (norma espectral), com φ escolhido pelo traço de b†a
    """
    overlap = np.trace(b.conj().T @ a)
    phase = overlap / abs(overlap) if abs(overlap) > 1e-15 else 1.0
    return float(np.linalg.norm(a - phase * b, ord=2))


def operator_distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(a - b, ord=2))


def project(matrix: np.ndarray, indices: Sequence[int]) -> np.ndarray:
    """Submatriz nas linhas e colunas dadas (projeção no espaço de código)."""
    idx = np.asarray(indices, dtype=np.int64)
    return matrix[np.ix_(idx, idx)]


def truncated_creation(cutoff: int) -> np.ndarray:
    """b† truncado em N_P: elementos ⟨n+1|b†|n⟩ = √(n+1)."""
    return np.diag(np.sqrt(np.arange(1, cutoff + 1, dtype=float)), k=-1).astype(complex)


def truncated_mode_operator(op: np.ndarray, mode: int, modes: int) -> np.ndarray:
    """Operador de um modo embutido em M modos; o modo 0 é o fator mais lento."""
    identity = np.eye(op.shape[0], dtype=complex)
    out = np.array([[1.0 + 0j]])
    for k in range(modes):
        out = np.kron(out, op if k == mode else identity)
    return out


def commutator_norm(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(a @ b - b @ a))
