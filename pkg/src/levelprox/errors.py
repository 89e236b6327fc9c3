"""Exception hierarchy shared by all levelprox modules."""


class LevelProxError(Exception):
    """Base class for all levelprox errors."""


class ParameterError(LevelProxError, ValueError):
    """A parameter violates its contract (e.g. nonpositive gamma or lambda)."""


class InvalidFunctionError(LevelProxError):
    """A function evaluation produced -inf or NaN, which the extended-real
    convention (-inf excluded) forbids."""


class ProxBoundViolationError(LevelProxError):
    """The infimum defining an envelope appears unbounded below: lambda is at
    or above the prox-boundedness threshold."""


class NotCriticalError(LevelProxError):
    """The queried point carries no zero level proximal subgradient at any
    tested lambda; it is not a detectable critical point."""


class StepSizeError(ParameterError):
    """Prox-gradient step size outside (0, min(1/L, lambda_f))."""


class ContractViolationError(LevelProxError):
    """An iterate left the set the convergence theorem confines it to."""


class InternalConsistencyError(LevelProxError):
    """Two independent computation routes that must agree disagreed beyond
    tolerance."""


class DomainEmptyError(LevelProxError):
    """No point of the sampled grid carries a level proximal subgradient."""


class AnchorError(LevelProxError):
    """Integration anchor lies outside the subdifferential domain."""


class UsageError(LevelProxError):
    """Malformed CLI or config input."""
