"""
Exportação CSV (histogramas de disparos e distribuições de Fock)
"""
import csv
import io
from typing import Dict, Iterable, Sequence, Tuple


def _occupation_label(occupations: Sequence[int]) -> str:
    return " ".join(str(n) for n in occupations)


def histogram_csv(counts: Dict[str, int]) -> str:
    """bitstring,count em ordem de bitstring."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["bitstring", "count"])
    for bits in sorted(counts):
        writer.writerow([bits, counts[bits]])
    return buffer.getvalue()


def distribution_csv(rows: Iterable[Tuple[Sequence[int], float]]) -> str:
    """occupations,probability; ocupações separadas por espaço."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["occupations", "probability"])
    for occupations, probability in sorted(rows, key=lambda row: tuple(row[0])):
        writer.writerow([_occupation_label(occupations), repr(float(probability))])
    return buffer.getvalue()


def parse_distribution_csv(content: str) -> Dict[Tuple[int, ...], float]:
    """Lê de volta um CSV de distribuição (remove BOM, como nas importações)."""
    if content.startswith("\ufeff"):
        content = content[1:]
    reader = csv.DictReader(io.StringIO(content))
    return {
        tuple(int(n) for n in row["occupations"].split()): float(row["probability"])
        for row in reader
    }
