from typing import List, Optional

from src.config import Settings
from src.contexts.stoppingContext import ConjectureCheck
from src.managers.stopping_manager import StoppingManager

RESULT_TYPE = List[ConjectureCheck]


def run(settings: Settings, n: int, to: Optional[int] = None) -> List[ConjectureCheck]:
    manager = StoppingManager(settings)
    return [manager.verify_conjecture_3(k) for k in range(n, (to or n) + 1)]


def to_text(result: List[ConjectureCheck], **_) -> str:
    return "\n".join(
        f"n={c.n}: z(n)={c.lhs} half-sum={c.rhs} ({c.detail}) {'ok' if c.match else 'MISMATCH'}"
        for c in result
    )


def to_rows(result: List[ConjectureCheck], **_):
    yield ("n", "z", "half_sum", "match")
    for c in result:
        yield (c.n, c.lhs, c.rhs, c.match)
