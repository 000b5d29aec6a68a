from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple


class SubsequenceKind(str, Enum):
    T = "t"  # starts ≡ 3, 7 (mod 12)
    H = "h"  # starts ≡ 9 (mod 12)


class Variant(str, Enum):
    A = "A"  # cut at a term ≡ 6 (mod 8) for T, ≡ 3 (mod 4) for H
    B = "B"  # cut at 1


@dataclass(frozen=True)
class Subsequence:
    kind: SubsequenceKind
    variant: Variant
    terms: Tuple[int, ...]
    max_odd: Optional[int] = None
    max_even: Optional[int] = None

    @property
    def start(self) -> int:
        return self.terms[0]

    @property
    def end_term(self) -> int:
        return self.terms[-1]

    @property
    def length_index(self) -> int:
        return len(self.terms) - 1

    @property
    def label(self) -> str:
        return f"C^{self.length_index}_{self.variant.value}({self.start})"

    def __str__(self) -> str:
        return ", ".join(str(x) for x in self.terms)


@dataclass(frozen=True)
class DecompositionEntry:
    subsequence: Subsequence
    entry_offset: int = 0


@dataclass(frozen=True)
class Decomposition:
    """A trajectory split into preamble, at most one H entry, then a chain of T entries."""
    source: int
    preamble: Tuple[int, ...] = ()
    entries: Tuple[DecompositionEntry, ...] = ()
    complete: bool = True

    @property
    def truncated(self) -> bool:
        return not self.complete

    def reconstruct(self) -> List[int]:
        """Rebuild the raw trajectory from the pieces.

        The term ending an H entry is the first contributed term of the next
        entry and is emitted once.
        """
        out = list(self.preamble)
        previous: Optional[SubsequenceKind] = None
        for entry in self.entries:
            part = entry.subsequence.terms[entry.entry_offset:]
            if previous is SubsequenceKind.H:
                part = part[1:]
            out.extend(part)
            previous = entry.subsequence.kind
        return out

    @property
    def t_entries(self) -> Tuple[DecompositionEntry, ...]:
        return tuple(e for e in self.entries if e.subsequence.kind is SubsequenceKind.T)


@dataclass(frozen=True)
class GrowthMark:
    """Stopping/growing flag of one T entry of a decomposition."""
    start: int
    stopping: bool
    length_index: int
    terms: Tuple[int, ...] = field(default=())
