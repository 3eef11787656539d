"""Exception types shared across the engine."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine-specific failures."""


class CapExceeded(EngineError):
    """A Weyl-group enumeration would exceed the caller's cap."""

    def __init__(self, order: int, cap: int | None = None):
        self.order = order
        self.cap = cap
        msg = f"Weyl group order {order} exceeds cap" + (f" {cap}" if cap else "")
        super().__init__(msg)


class PoleAt(EngineError):
    """A special function was evaluated at a pole."""

    def __init__(self, point, context: str = ""):
        self.point = point
        self.context = context
        msg = f"pole at {point}" + (f" ({context})" if context else "")
        super().__init__(msg)


class SingularParameter(EngineError):
    """A spectral parameter sits on a wall where a formula degenerates."""

    def __init__(self, detail: str = ""):
        super().__init__(detail or "singular spectral parameter")


class NotMaximal(EngineError):
    """Operation requires a maximal parabolic (exactly one simple root outside the Levi)."""


class ConvergenceFailure(EngineError):
    """Quadrature failed to reach the requested accuracy."""

    def __init__(self, achieved: float, target: float):
        self.achieved = achieved
        self.target = target
        super().__init__(f"quadrature error estimate {achieved:.3g} exceeds target {target:.3g}")


class DimensionMismatch(EngineError):
    """Vector or block lengths are inconsistent."""
