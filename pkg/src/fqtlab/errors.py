"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size or work cap."""


class InputFormatError(ValueError):
    """Malformed textual input: field specs, polynomials, set files."""
