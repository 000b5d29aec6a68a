from src.config import Settings
from src.contexts.lengthClassContext import LengthClassReport
from src.contexts.subsequenceContext import SubsequenceKind
from src.managers.enumeration_manager import EnumerationManager
from src.utils.text_utils import class_block, length_header

RESULT_TYPE = LengthClassReport


def run(settings: Settings, kind: str, length: int, method: str = "symbolic") -> LengthClassReport:
    manager = EnumerationManager(settings)
    if method == "brute":
        return manager.brute_length_classes(SubsequenceKind(kind), length)
    return manager.symbolic_length_classes(SubsequenceKind(kind), length)


def to_text(result: LengthClassReport, **_) -> str:
    text = class_block(length_header(result.kind.value, result.length), result.classes, result.modulus)
    if result.exceptions:
        listed = ", ".join(f"{e.value} ({result.kind.value}={e.actual_length})" for e in result.exceptions)
        text += f"\n\nexceptions: {listed}"
    return text


def to_rows(result: LengthClassReport, **_):
    yield ("kind", "length", "modulus", "residue")
    for r in result.classes:
        yield (result.kind.value, result.length, result.modulus, r)
