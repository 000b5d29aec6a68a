from typing import Optional

from src.config import Settings
from src.contexts.subsequenceContext import Decomposition, SubsequenceKind
from src.subseq import decompose, is_stopping_sequence

RESULT_TYPE = Decomposition


def run(settings: Settings, s: int, max: Optional[int] = None) -> Decomposition:
    return decompose(s, max or settings.max_subsequences, settings.trajectory_cap)


def to_text(result: Decomposition, **_) -> str:
    status = "complete" if result.complete else "truncated"
    lines = [f"C({result.source}): {len(result.entries)} subsequences, {status}"]
    if result.preamble:
        lines.append(f"preamble: ({', '.join(str(x) for x in result.preamble)})")
    for entry in result.entries:
        sub = entry.subsequence
        notes = []
        if sub.kind is SubsequenceKind.H:
            notes.append("h")
        elif is_stopping_sequence(sub):
            notes.append("stopping")
        if entry.entry_offset:
            notes.append(f"entered at {sub.terms[entry.entry_offset]}")
        suffix = f"  [{', '.join(notes)}]" if notes else ""
        lines.append(f"({sub}){suffix}")
    return "\n".join(lines)


def to_rows(result: Decomposition, **_):
    yield ("index", "kind", "variant", "start", "length_index", "entry_offset", "stopping", "terms")
    for i, entry in enumerate(result.entries, start=1):
        sub = entry.subsequence
        stopping = is_stopping_sequence(sub) if sub.kind is SubsequenceKind.T else ""
        yield (i, sub.kind.value, sub.variant.value, sub.start, sub.length_index,
               entry.entry_offset, stopping, " ".join(str(x) for x in sub.terms))
