from typing import List

from src.config import Settings
from src.contexts.lengthClassContext import FibonacciCheck
from src.contexts.subsequenceContext import SubsequenceKind
from src.managers.enumeration_manager import EnumerationManager

RESULT_TYPE = List[FibonacciCheck]


def run(settings: Settings, kind: str, max: int) -> List[FibonacciCheck]:
    return EnumerationManager(settings).verify_fibonacci_conjectures(SubsequenceKind(kind), max)


def to_text(result: List[FibonacciCheck], kind: str = "", **_) -> str:
    lines = []
    for c in result:
        brute = {None: "-", True: "agrees", False: "DISAGREES"}[c.brute_agrees]
        status = "ok" if c.match else "MISMATCH"
        lines.append(f"{kind}={c.length}: observed={c.observed} expected={c.expected} {status} brute={brute}")
    return "\n".join(lines)


def to_rows(result: List[FibonacciCheck], **_):
    yield ("length", "observed", "expected", "match", "brute_agrees")
    for c in result:
        yield (c.length, c.observed, c.expected, c.match, "" if c.brute_agrees is None else c.brute_agrees)
