"""Exception types for the causal hydrogen model."""


class CausalModelError(Exception):
    """Base class for all model-specific errors."""


class QuantumNumberError(CausalModelError, ValueError):
    """Quantum numbers violate 1 <= n, 0 <= l <= n-1, -l <= m <= l."""


class StationaryElectronError(CausalModelError):
    """Orbit requested for an m = 0 (or l = 0) state: the electron is at
    rest and has no orbit geometry."""


class SingularityError(CausalModelError, ZeroDivisionError):
    """Field evaluated on the polar axis (sin(theta) = 0) or at r = 0
    where the closed forms diverge."""


class NodeError(CausalModelError):
    """Evaluation on (or numerically too close to) a nodal surface of the
    wavefunction, where the phase and its derivatives are undefined."""
