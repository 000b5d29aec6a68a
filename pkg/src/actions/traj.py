from typing import List, Optional

from src.config import Settings
from src.core import trajectory

RESULT_TYPE = List[int]


def run(settings: Settings, s: int, cap: Optional[int] = None) -> List[int]:
    return trajectory(s, cap=cap or settings.trajectory_cap)


def to_text(result: List[int], **_) -> str:
    return ", ".join(str(x) for x in result)


def to_rows(result: List[int], **_):
    yield ("k", "term")
    for k, x in enumerate(result):
        yield (k, x)
