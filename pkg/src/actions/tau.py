from src.config import Settings
from src.contexts.stoppingContext import StoppingProfile
from src.managers.stopping_manager import StoppingManager

RESULT_TYPE = StoppingProfile


def run(settings: Settings, s: int) -> StoppingProfile:
    return StoppingManager(settings).tau(s)


def to_text(result: StoppingProfile, **_) -> str:
    return (
        f"s={result.s} sigma={result.sigma} tau={result.tau} crossing={result.crossing_value}\n"
        f"starts: {', '.join(str(x) for x in result.subsequence_starts)}"
    )


def to_rows(result: StoppingProfile, **_):
    yield ("s", "sigma", "tau", "crossing_value", "subsequence_starts")
    yield (result.s, result.sigma, result.tau, result.crossing_value,
           " ".join(str(x) for x in result.subsequence_starts))
