"""State files: JSON with one matrix row per line.

Layout::

    {
      "dim": 3,
      "matrix": [
        [[0.33333333333333331, 0], [0, 0], [0, 0]],
        ...
      ]
    }

Every entry is an [re, im] pair and numbers are written with 17 significant
digits, so files round-trip doubles exactly and are portable golden
fixtures. Reading validates structure only; promoting the matrix to a
quantum state happens through the usual validation gate unless the caller
asks for a raw load.
"""

import json

import numpy as np

from wedgemap.errors import StateFileError
from wedgemap.states import DensityMatrix, density_from_matrix


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def write_matrix(path: str, matrix: np.ndarray) -> None:
    """Write a square complex matrix in the state-file layout."""
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise StateFileError(f"expected a square matrix, got shape {m.shape}")
    dim = m.shape[0]
    rows = []
    for i in range(dim):
        cells = ", ".join(
            f"[{_fmt(m[i, j].real)}, {_fmt(m[i, j].imag)}]" for j in range(dim)
        )
        rows.append(f"    [{cells}]")
    body = ",\n".join(rows)
    text = f'{{\n  "dim": {dim},\n  "matrix": [\n{body}\n  ]\n}}\n'
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def read_matrix(path: str) -> np.ndarray:
    """Parse a state file into a complex matrix, checking structure."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path} is not valid JSON: {exc}") from exc

    if not isinstance(doc, dict) or "dim" not in doc or "matrix" not in doc:
        raise StateFileError(f"{path}: expected an object with 'dim' and 'matrix'")
    dim = doc["dim"]
    rows = doc["matrix"]
    if not isinstance(dim, int) or dim < 1:
        raise StateFileError(f"{path}: 'dim' must be a positive integer")
    if not isinstance(rows, list) or len(rows) != dim:
        raise StateFileError(f"{path}: 'matrix' must have {dim} rows")
    out = np.empty((dim, dim), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise StateFileError(f"{path}: row {i} must have {dim} entries")
        for j, cell in enumerate(row):
            if (
                not isinstance(cell, list)
                or len(cell) != 2
                or not all(isinstance(x, (int, float)) for x in cell)
            ):
                raise StateFileError(f"{path}: entry ({i}, {j}) is not an [re, im] pair")
            out[i, j] = complex(cell[0], cell[1])
    if not np.all(np.isfinite(out.view(float))):
        raise StateFileError(f"{path}: matrix contains non-finite entries")
    return out


def load_density(path: str, raw: bool = False) -> DensityMatrix:
    """Read a state file and validate it as a density matrix.

    With ``raw=True`` the matrix is wrapped without validation, for feeding
    indefinite matrices (partial transposes and the like) back in.
    """
    m = read_matrix(path)
    if raw:
        return DensityMatrix(dim=m.shape[0], mat=m)
    return density_from_matrix(m)
