from src.config import Settings
from src.contexts.subsequenceContext import Subsequence
from src.subseq import extract_subsequence

RESULT_TYPE = Subsequence


def run(settings: Settings, s: int) -> Subsequence:
    return extract_subsequence(s, settings.trajectory_cap)


def to_text(result: Subsequence, **_) -> str:
    return (
        f"{result.label}\n"
        f"({result})\n"
        f"kind={result.kind.value} variant={result.variant.value} "
        f"max_odd={result.max_odd} max_even={result.max_even}"
    )


def to_rows(result: Subsequence, **_):
    yield ("index", "term")
    for i, x in enumerate(result.terms):
        yield (i, x)
