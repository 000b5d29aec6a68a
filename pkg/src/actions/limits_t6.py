from typing import List, Optional

from src.config import Settings
from src.contexts.limitContext import LimitReport
from src.managers.limits_manager import LimitsManager, theorem6_series

RESULT_TYPE = List[LimitReport]


def run(
    settings: Settings,
    G: int,
    G_to: Optional[int] = None,
    z_file: Optional[str] = None,
    computed: bool = False,
) -> List[LimitReport]:
    last = G_to or G
    z_values = LimitsManager(settings).z_values(last, z_file, computed)
    return theorem6_series(G, last, z_values)


def to_text(result: List[LimitReport], **_) -> str:
    return "\n".join(f"G={r.G}: {r.numerator}/{r.denominator} ≈ {r.decimal}" for r in result)


def to_rows(result: List[LimitReport], **_):
    yield ("G", "numerator", "denominator", "decimal")
    for r in result:
        yield (r.G, r.numerator, r.denominator, r.decimal)
