from typing import List

from src.config import Settings
from src.contexts.subsequenceContext import Subsequence, SubsequenceKind
from src.subseq import first_subsequences

RESULT_TYPE = List[Subsequence]


def run(settings: Settings, kind: str, max: int) -> List[Subsequence]:
    return first_subsequences(SubsequenceKind(kind), max, settings.trajectory_cap)


def to_text(result: List[Subsequence], **_) -> str:
    return "\n".join(str(sub) for sub in result)


def to_rows(result: List[Subsequence], **_):
    yield ("start", "length_index", "variant", "terms")
    for sub in result:
        yield (sub.start, sub.length_index, sub.variant.value, " ".join(str(x) for x in sub.terms))
