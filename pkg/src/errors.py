from typing import Any, Optional


class CollatzError(Exception):
    """Base class for every error raised by the library."""


class DomainError(CollatzError, ValueError):
    """Input lies outside the residue class or range an operation accepts."""


class DegenerateSubsequence(DomainError):
    def __init__(self, start: int, terms: list):
        self.start = start
        self.terms = list(terms)
        super().__init__(
            f"subsequence from {start} has length index {len(terms) - 1} < 2: {self.terms}"
        )


class CapExhausted(CollatzError, RuntimeError):
    """An iteration bound was hit before the stop condition fired.

    Never a claim of divergence: `partial` holds what was computed so far.
    """

    def __init__(self, cap: int, partial: Optional[Any] = None, what: str = "stop condition"):
        self.cap = cap
        self.partial = partial
        super().__init__(f"no {what} found up to cap {cap}")


class GuardExceeded(CollatzError, RuntimeError):
    def __init__(self, requested: int, guard: int, what: str = "modulus"):
        self.requested = requested
        self.guard = guard
        super().__init__(f"{what} {requested} exceeds guard {guard} (use --unsafe-guard to lift)")


class MissingZValue(CollatzError, KeyError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"no z(n) value for n={n}")

    def __str__(self) -> str:
        return self.args[0]


class DataFileError(CollatzError, ValueError):
    def __init__(self, path: str, line_no: int, reason: str):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {reason}")


EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_EXHAUSTED = 2


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (CapExhausted, GuardExceeded)):
        return EXIT_EXHAUSTED
    return EXIT_DOMAIN


def http_status_for(exc: BaseException) -> int:
    if isinstance(exc, DomainError):
        return 400
    if isinstance(exc, (CapExhausted, GuardExceeded)):
        return 422
    return 500
