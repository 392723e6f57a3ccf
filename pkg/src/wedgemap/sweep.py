"""Negativity sweep over the diagonal-state probability simplex.

Grid points are (i*step, j*step, 1 - i*step - j*step) for all nonnegative
combinations, in lexicographic (i, j) order. Output is plain CSV with 17
significant digits per number, so a fixed step always produces the same
bytes.
"""

import math

from wedgemap.entanglement import diagonal_cubic_analysis
from wedgemap.states import diagonal_distribution

CSV_HEADER = "p1,p2,p3,negativity,neg_root"


def sweep_rows(step: float) -> list[tuple[float, float, float, float, float]]:
    """Rows (p1, p2, p3, negativity, most_negative_root) over the grid."""
    if not 0.0 < step <= 0.5:
        raise ValueError(f"step must be in (0, 0.5], got {step!r}")
    max_i = int(math.floor(1.0 / step + 1e-9))
    rows = []
    for i in range(max_i + 1):
        p1 = i * step
        for j in range(max_i + 1):
            p2 = j * step
            p3 = 1.0 - p1 - p2
            if p3 < -1e-12:
                break
            p3 = max(p3, 0.0)
            analysis = diagonal_cubic_analysis(diagonal_distribution((p1, p2, p3)))
            rows.append((p1, p2, p3, analysis.negativity, analysis.roots[0]))
    return rows


def sweep_csv(step: float) -> str:
    lines = [CSV_HEADER]
    for row in sweep_rows(step):
        lines.append(",".join(f"{x:.17g}" for x in row))
    return "\n".join(lines) + "\n"
