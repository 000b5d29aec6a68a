from typing import Optional

import click

from src.config import Settings
from src.contexts.subsequenceContext import Decomposition
from src.subseq import classify_growth, decompose

RESULT_TYPE = Decomposition
GLYPH = "o"


def run(settings: Settings, s: int, max: Optional[int] = None, ansi: bool = False) -> Decomposition:
    return decompose(s, max or settings.max_subsequences, settings.trajectory_cap)


def to_text(result: Decomposition, ansi: bool = False, **_) -> str:
    """One row of glyphs per C^t; stopping-sequences red (ansi) or starred (plain)."""
    rows = []
    for mark in classify_growth(result):
        glyphs = " ".join(GLYPH for _ in mark.terms)
        if ansi:
            rows.append(click.style(glyphs, fg="red") if mark.stopping else glyphs)
        else:
            rows.append(("* " if mark.stopping else "  ") + glyphs)
    return "\n".join(rows)


def to_rows(result: Decomposition, **_):
    yield ("index", "start", "length_index", "stopping")
    for i, mark in enumerate(classify_growth(result), start=1):
        yield (i, mark.start, mark.length_index, mark.stopping)
