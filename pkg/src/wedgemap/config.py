"""Default tolerances and constants, centralized in one record."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used across the library.

    All comparisons are absolute. The defaults are sized for double
    precision on matrices of dimension up to roughly 100.
    """

    hermitian: float = 1e-9
    trace: float = 1e-9
    psd: float = 1e-9
    unit_norm: float = 1e-12
    prob_sum: float = 1e-12
    antisymmetric: float = 1e-9
    purity: float = 1e-9
    entangled: float = 1e-9
    jacobi_rel: float = 1e-12
    jacobi_max_sweeps: int = 100


DEFAULTS = Tolerances()

# Seed used by the CLI when none is given, so output is reproducible.
DEFAULT_SEED = 1729
