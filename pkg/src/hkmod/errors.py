"""Exception taxonomy shared by every module.

The split mirrors the CLI exit codes: malformed or ill-typed input is a
usage problem (exit 2), while an exact check refusing the data is a
mathematical outcome (exit 1). Search caps are their own failure mode
(exit 3) so callers can retry with a larger cap.
"""


class InputError(ValueError):
    """Malformed input: wrong shape, wrong type, or a violated domain precondition."""


class MathCheckError(ValueError):
    """An exact mathematical check refused the data (hypothesis or identity fails)."""


class NoAdmissibleParameter(MathCheckError):
    """A parameter search is provably empty; no cap increase can help."""


class SearchCapExceeded(RuntimeError):
    """A parameter search hit its cap before finding an answer."""
