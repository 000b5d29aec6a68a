from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class StoppingProfile:
    s: int
    sigma: int
    tau: int
    crossing_value: int
    subsequence_starts: Tuple[int, ...] = ()


@dataclass(frozen=True)
class SigmaDiscrepancy:
    """A member of a coefficient-accepted class whose true stopping time differs."""
    residue: int
    representative: int
    expected_sigma: int
    observed_sigma: Optional[int]


@dataclass(frozen=True)
class SigmaClassReport:
    n: int
    sigma: int
    modulus: int
    classes: Tuple[int, ...]
    discrepancies: Tuple[SigmaDiscrepancy, ...] = ()
    method: str = "coefficient"

    @property
    def z(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class UniformityViolation:
    residue: int
    representative: int
    expected: Tuple[int, int]
    observed: Optional[Tuple[int, int]]


@dataclass(frozen=True)
class TauClassReport:
    n: int
    sigma: int
    modulus: int
    classes: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    violations: Tuple[UniformityViolation, ...] = ()

    @property
    def counts(self) -> Dict[int, int]:
        return {tau: len(rs) for tau, rs in sorted(self.classes.items())}

    @property
    def total(self) -> int:
        return sum(len(rs) for rs in self.classes.values())


@dataclass(frozen=True)
class CountTable:
    """A_tau(n) grid with the z(n) and sigma(n) columns."""
    rows: Dict[int, Dict[int, int]] = field(default_factory=dict)
    z: Dict[int, int] = field(default_factory=dict)
    sigma_of_n: Dict[int, int] = field(default_factory=dict)

    def column(self, n: int) -> Tuple[int, ...]:
        return tuple(self.rows[tau][n] for tau in sorted(self.rows) if n in self.rows[tau])

    def cell(self, tau: int, n: int) -> int:
        return self.rows.get(tau, {}).get(n, 0)

    @property
    def columns(self) -> Tuple[int, ...]:
        return tuple(sorted(self.sigma_of_n))


@dataclass(frozen=True)
class ConjectureCheck:
    n: int
    lhs: int
    rhs: int
    match: bool
    detail: str = ""
