from dataclasses import dataclass
from typing import List, Optional, Tuple

from .residueContext import ResidueClass
from .subsequenceContext import SubsequenceKind, Variant


@dataclass(frozen=True)
class LengthException:
    """A variant-B number whose length does not follow its residue class."""
    value: int
    actual_length: int
    variant: Variant = Variant.B


@dataclass(frozen=True)
class LengthClassReport:
    kind: SubsequenceKind
    length: int
    modulus: int
    classes: Tuple[int, ...]
    exceptions: Tuple[LengthException, ...] = ()
    method: str = "symbolic"

    @property
    def count(self) -> int:
        return len(self.classes)

    def residue_classes(self) -> List[ResidueClass]:
        return [ResidueClass(r, self.modulus) for r in self.classes]


@dataclass(frozen=True)
class FibonacciCheck:
    length: int
    observed: int
    expected: int
    match: bool
    brute_agrees: Optional[bool] = None
