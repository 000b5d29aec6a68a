"""Term lemmata as executable predicates.

Each predicate raises DomainError outside the residue class its lemma talks
about and otherwise returns whether the asserted consequence holds for n.
Lemmata 1-6 are checked by forward iteration, 8-10 by building the
predecessor with the reverse odd step x -> (2x - 1)/3.
"""
from typing import Optional

from src.core import _require_positive, iterate, t_step
from src.errors import DomainError


def _require(cond: bool, n: int, what: str) -> None:
    if not cond:
        raise DomainError(f"{n} is not {what}")


def trailing_ones(n: int) -> int:
    return (n ^ (n + 1)).bit_length() - 1


def reverse_odd_step(x: int) -> Optional[int]:
    """The odd predecessor y with T(y) = x, if there is one."""
    if (2 * x - 1) % 3:
        return None
    y = (2 * x - 1) // 3
    return y if y & 1 else None


def lemma1(n: int) -> bool:
    _require_positive(n)
    _require(n % 2 == 0, n, "even")
    return t_step(n) < n


def lemma2(n: int) -> bool:
    _require_positive(n)
    _require(n % 4 == 1 and n > 1, n, "≡ 1 (mod 4) and > 1")
    y = iterate(n, 2)
    return y < n and y % 3 == 1


def lemma3(n: int) -> bool:
    _require_positive(n)
    _require(n % 8 == 6, n, "≡ 6 (mod 8)")
    y = t_step(n)
    return y < n and y % 4 == 3


def lemma4(n: int) -> bool:
    _require_positive(n)
    _require(n & (n - 1) == 0, n, "a power of two")
    e = n.bit_length() - 1
    return iterate(n, e) == 1 and all(iterate(n, i) != 1 for i in range(e))


def lemma5(n: int) -> bool:
    _require_positive(n)
    _require(n % 4 == 3, n, "≡ 3 (mod 4)")
    e = trailing_ones(n)  # n ≡ 2^e - 1 (mod 2^(e+1))
    return t_step(n) % (1 << e) == (1 << (e - 1)) - 1


def lemma6(n: int) -> bool:
    _require_positive(n)
    _require(n % 4 == 3, n, "≡ 3 (mod 4)")
    e = trailing_ones(n)
    return iterate(n, e - 1) % 4 == 1


def lemma7(n: int) -> bool:
    _require_positive(n)
    in_union = trailing_ones(n) >= 2
    return in_union == (n % 4 == 3)


def lemma8(n: int) -> bool:
    """Only [11]_12 members of [3]_4 have a smaller [3]_4 predecessor."""
    _require_positive(n)
    _require(n % 4 == 3, n, "≡ 3 (mod 4)")
    y = reverse_odd_step(n)
    has_smaller = y is not None and y % 4 == 3 and y < n
    if has_smaller and t_step(y) != n:
        return False
    return has_smaller == (n % 12 == 11)


def lemma9(n: int) -> bool:
    _require_positive(n)
    _require(n % 12 == 5, n, "≡ 5 (mod 12)")
    y = reverse_odd_step(n)
    return y is not None and y % 4 == 3 and t_step(y) == n


def lemma10_depth(n: int) -> int:
    """Backward steps from n ≡ 1 (mod 12) to the first predecessor ≡ 5, 9 (mod 12).

    Each double step is 2x followed by the odd predecessor, i.e. x -> (4x - 1)/3.
    The count is always even; it exceeds 4 for some n (109 needs 6).
    """
    _require_positive(n)
    _require(n % 12 == 1 and n > 1, n, "≡ 1 (mod 12) and > 1")
    x, depth = n, 0
    while True:
        y = (4 * x - 1) // 3
        if iterate(y, 2) != x:
            raise AssertionError(f"double reverse step from {x} gave {y}")
        x, depth = y, depth + 2
        if x % 12 in (5, 9):
            return depth


def lemma10_expected_depth(n: int) -> int:
    """Closed form 2·(v_3(k) + 1) for n = 12k + 1.

    x = 12k + 1 maps to 16k + 1, which stays ≡ 1 (mod 12) exactly when 3 | k.
    """
    _require_positive(n)
    _require(n % 12 == 1 and n > 1, n, "≡ 1 (mod 12) and > 1")
    k, v = (n - 1) // 12, 0
    while k % 3 == 0:
        k, v = k // 3, v + 1
    return 2 * (v + 1)


def lemma10(n: int) -> bool:
    """The backward search from n ends in [5]_12 or [9]_12 at the depth the 3-adic valuation predicts."""
    return lemma10_depth(n) == lemma10_expected_depth(n)


def lemma10_literal(n: int) -> bool:
    """The lemma as printed: the predecessor is found at depth 2 or 4."""
    return lemma10_depth(n) <= 4


LEMMATA = {
    1: lemma1,
    2: lemma2,
    3: lemma3,
    4: lemma4,
    5: lemma5,
    6: lemma6,
    7: lemma7,
    8: lemma8,
    9: lemma9,
    10: lemma10,
}
