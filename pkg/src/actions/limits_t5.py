from typing import List, Optional

from src.config import Settings
from src.contexts.limitContext import LimitReport
from src.managers.limits_manager import theorem5_series

RESULT_TYPE = List[LimitReport]


def run(settings: Settings, G: int, G_to: Optional[int] = None) -> List[LimitReport]:
    return theorem5_series(G, G_to or G)


def to_text(result: List[LimitReport], **_) -> str:
    return "\n".join(f"G={r.G}: {r.numerator}/{r.denominator} ≈ {r.decimal}" for r in result)


def to_rows(result: List[LimitReport], **_):
    yield ("G", "numerator", "denominator", "decimal")
    for r in result:
        yield (r.G, r.numerator, r.denominator, r.decimal)
