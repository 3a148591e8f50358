"""
Exception hierarchy for pimsim.

Data-shaped problems (validation violations, parse diagnostics, capacity
violations) are returned as values; these exceptions are for calls that
cannot produce a result.
"""


class PimSimError(Exception):
    """Base class for all pimsim errors."""


class CircuitValidationError(PimSimError, ValueError):
    """A circuit or gate kind failed validation."""


class BenchmarkError(PimSimError, ValueError):
    """Unknown benchmark family, bad size or inconsistent parameters."""


class QasmParseError(PimSimError):
    """Raised at the CLI boundary when parse() returned diagnostics."""

    def __init__(self, diagnostics: list) -> None:  # type: ignore[type-arg]
        self.diagnostics = diagnostics
        super().__init__(f"{len(diagnostics)} diagnostic(s) while parsing QASM")


class NonGaussianGateError(PimSimError):
    """The gate has no uniform Z[i]/(sqrt 2)^d form (T, Tdg)."""


class MemoryBudgetError(PimSimError):
    """A host-side state would exceed the configured budget."""


class CapacityError(PimSimError):
    """A component or packing does not fit the DPU memories."""


class KernelOverflowError(PimSimError, OverflowError):
    """An integer kernel would exceed the int64 numerator range."""


class NonGaussianAmplitudeError(PimSimError):
    """Applying the gate exactly would leave the Gaussian-integer ring."""


class InterDpuCommunicationError(PimSimError):
    """A DPU worker tried to reach another DPU; there is no such channel."""


class ContractViolation(PimSimError):
    """An internal invariant was broken."""


class DpuConfigError(PimSimError, ValueError):
    """A DPU configuration file or override is invalid."""
