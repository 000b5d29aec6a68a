from src.config import Settings
from src.managers.stopping_manager import StoppingManager

RESULT_TYPE = int


def run(settings: Settings, s: int) -> int:
    return StoppingManager(settings).sigma(s)


def to_text(result: int, s: int = None, **_) -> str:
    return f"sigma({s})={result}" if s is not None else str(result)


def to_rows(result: int, s: int = None, **_):
    yield ("s", "sigma")
    yield (s, result)
