from dataclasses import dataclass
from typing import List, Tuple


@dataclass(frozen=True, order=True)
class ResidueClass:
    """The class [residue]_modulus of all non-negative integers congruent to residue."""
    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} not in [0, {self.modulus})")

    def __contains__(self, x: int) -> bool:
        return x % self.modulus == self.residue

    def __str__(self) -> str:
        return f"[{self.residue}]_{self.modulus}"

    def representatives(self, count: int, minimum: int = 1) -> List[int]:
        """The `count` smallest members that are >= minimum."""
        first = self.residue
        if first < minimum:
            first += -(-(minimum - first) // self.modulus) * self.modulus
        return [first + i * self.modulus for i in range(count)]

    def lifts(self) -> Tuple["ResidueClass", "ResidueClass"]:
        """Split into the two classes modulo 2·modulus."""
        m2 = 2 * self.modulus
        return ResidueClass(self.residue, m2), ResidueClass(self.residue + self.modulus, m2)

    def refines(self, other: "ResidueClass") -> bool:
        return self.modulus % other.modulus == 0 and self.residue % other.modulus == other.residue
