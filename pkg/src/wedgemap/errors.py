"""Exception types raised by the library.

Each class names the violated invariant; the CLI prints the class name so
callers (and shell scripts) can match on it.
"""


class WedgemapError(Exception):
    """Base class for all library errors."""


class NotHermitian(WedgemapError):
    """Matrix is not Hermitian within tolerance."""


class NoConvergence(WedgemapError):
    """Eigensolver exhausted its sweep budget."""


class TraceNotOne(WedgemapError):
    """Matrix trace differs from 1 beyond tolerance."""


class NotPositive(WedgemapError):
    """Matrix has an eigenvalue below the positivity tolerance."""


class NotPure(WedgemapError):
    """State is not pure within tolerance."""


class NotAntisymmetric(WedgemapError):
    """State has support outside the antisymmetric subspace."""


class DimensionMismatch(WedgemapError):
    """Operand dimensions are inconsistent."""


class DimensionTooSmall(WedgemapError):
    """Dimension below the minimum the operation supports."""


class ShapeMismatch(WedgemapError):
    """Bipartite shape inconsistent with the matrix it is applied to."""


class StateFileError(WedgemapError):
    """State file is missing, malformed, or structurally invalid."""
