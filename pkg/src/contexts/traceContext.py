from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple


class Step(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class ParityVector:
    """Which branch of T fired at each iteration.

    Stored as a bit mask (bit i set when step i was odd) so that extending a
    vector does not copy a Python list; `steps` gives the ordered markers.
    """
    mask: int = 0
    length: int = 0

    def __post_init__(self):
        if self.length < 0 or self.mask < 0 or self.mask.bit_length() > self.length:
            raise ValueError(f"mask {self.mask:#b} does not fit {self.length} steps")

    @classmethod
    def from_steps(cls, steps) -> "ParityVector":
        mask = 0
        for i, step in enumerate(steps):
            if Step(step) is Step.ODD:
                mask |= 1 << i
        return cls(mask=mask, length=len(steps))

    @property
    def steps(self) -> Tuple[Step, ...]:
        return tuple(Step.ODD if self.mask >> i & 1 else Step.EVEN for i in range(self.length))

    @property
    def odd_count(self) -> int:
        return bin(self.mask).count("1")

    def append(self, step: Step) -> "ParityVector":
        bit = 1 << self.length if Step(step) is Step.ODD else 0
        return ParityVector(mask=self.mask | bit, length=self.length + 1)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "".join("1" if s is Step.ODD else "0" for s in self.steps)


@dataclass(frozen=True)
class AffineTrace:
    """T^k(s) = (3^j·s + c) / 2^k for every s whose first k steps follow `parity`."""
    k: int = 0
    j: int = 0
    c: int = 0
    parity: ParityVector = field(default_factory=ParityVector)

    def __post_init__(self):
        if not 0 <= self.j <= self.k:
            raise ValueError(f"need 0 <= j <= k, got j={self.j} k={self.k}")
        if self.c < 0:
            raise ValueError("offset must be non-negative")
        if self.parity.length != self.k or self.parity.odd_count != self.j:
            raise ValueError(f"parity {self.parity} inconsistent with k={self.k}, j={self.j}")

    def advance(self, step: Step) -> "AffineTrace":
        if Step(step) is Step.ODD:
            return AffineTrace(self.k + 1, self.j + 1, 3 * self.c + (1 << self.k), self.parity.append(Step.ODD))
        return AffineTrace(self.k + 1, self.j, self.c, self.parity.append(Step.EVEN))

    def numerator(self, s: int) -> int:
        return 3 ** self.j * s + self.c

    def apply(self, s: int) -> int:
        """Evaluate the trace at s; raises ValueError if s does not follow it."""
        num = self.numerator(s)
        if num % (1 << self.k):
            raise ValueError(f"{s} does not follow parity {self.parity}")
        return num >> self.k

    def follows(self, s: int) -> bool:
        return self.numerator(s) % (1 << self.k) == 0

    @property
    def coefficient_below_one(self) -> bool:
        return 3 ** self.j < 1 << self.k

    def __str__(self) -> str:
        return f"(3^{self.j}·s + {self.c}) / 2^{self.k}"
