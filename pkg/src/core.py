"""The Collatz map T over Python ints, exact floor-logs and affine parity traces."""
import logging
from typing import Callable, List, Optional

from src.contexts.traceContext import AffineTrace, ParityVector, Step
from src.errors import CapExhausted, DomainError

logger = logging.getLogger(__name__)

DEFAULT_CAP = 2 ** 20

StopPredicate = Callable[[int, int], bool]


def _require_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"{name} must be an integer, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")


def t_step(n: int) -> int:
    _require_positive(n)
    return (3 * n + 1) >> 1 if n & 1 else n >> 1


def iterate(s: int, k: int) -> int:
    _require_positive(s, "s")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    x = s
    for _ in range(k):
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
    return x


def reaches_one(index: int, term: int) -> bool:
    return term == 1


def trajectory(s: int, stop: Optional[StopPredicate] = None, cap: int = DEFAULT_CAP) -> List[int]:
    """s, T(s), ... through the first term satisfying `stop` (default: the first 1).

    Raises CapExhausted carrying the `cap` terms computed when `stop` never fired.
    """
    _require_positive(s, "s")
    if cap < 1:
        raise DomainError(f"cap must be >= 1, got {cap}")
    stop = stop or reaches_one
    terms = [s]
    x = s
    while True:
        if stop(len(terms) - 1, x):
            return terms
        if len(terms) >= cap:
            logger.debug("trajectory of %d hit cap %d", s, cap)
            raise CapExhausted(cap, partial=terms)
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
        terms.append(x)


def floor_log2_pow3(n: int) -> int:
    """⌊n·log₂3⌋: the largest k with 2^k <= 3^n, by exact integer comparison."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return (3 ** n).bit_length() - 1


def advance_affine(tr: AffineTrace, step: Step) -> AffineTrace:
    return tr.advance(step)


def parity_vector(s: int, k: int) -> ParityVector:
    _require_positive(s, "s")
    mask, x = 0, s
    for i in range(k):
        if x & 1:
            mask |= 1 << i
            x = (3 * x + 1) >> 1
        else:
            x >>= 1
    return ParityVector(mask=mask, length=k)


def trace_of(s: int, k: int) -> AffineTrace:
    """The affine trace followed by the first k iterates of s."""
    _require_positive(s, "s")
    tr, x = AffineTrace(), s
    for _ in range(k):
        step = Step.ODD if x & 1 else Step.EVEN
        tr = tr.advance(step)
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
    return tr


def coefficient_below_one(tr: AffineTrace) -> bool:
    return tr.coefficient_below_one


def count_37(limit: int) -> int:
    """⌊(limit+5)/6⌋; exact only where count_37_formula_valid(limit) holds."""
    _require_positive(limit, "limit")
    return (limit + 5) // 6


def count_37_direct(limit: int) -> int:
    """Number of x in [1, limit] with x ≡ 3 or 7 (mod 12)."""
    _require_positive(limit, "limit")
    q, r = divmod(limit, 12)
    return 2 * q + (r >= 3) + (r >= 7)


def count_37_formula_valid(limit: int) -> bool:
    return limit % 12 not in (1, 2)
