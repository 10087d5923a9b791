"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Inconsistent grids, windows, or scenario configuration."""


class DataFormatError(ValueError):
    """Malformed dataset file (header mismatch, bad cells, NaN/Inf)."""


class IncompleteCoverageError(ValueError):
    """Interleaved scan records do not cover every (delay, frequency) cell."""

    def __init__(self, missing):
        self.missing = list(missing)
        preview = ", ".join(f"(delay={d:g}, freq={f:g})" for d, f in self.missing[:8])
        more = "" if len(self.missing) <= 8 else f" and {len(self.missing) - 8} more"
        super().__init__(f"missing {len(self.missing)} scan cell(s): {preview}{more}")


class NumericalFailure(RuntimeError):
    """A fit or resampling loop failed to produce a reliable result."""
