import logging
from typing import Dict, List, Optional, Set, Tuple

from src.config import Settings
from src.contexts.stoppingContext import (
    ConjectureCheck,
    CountTable,
    SigmaClassReport,
    SigmaDiscrepancy,
    StoppingProfile,
    TauClassReport,
    UniformityViolation,
)
from src.core import DEFAULT_CAP, _require_positive, floor_log2_pow3
from src.errors import CapExhausted, DomainError, GuardExceeded
from src.subseq import canonical_start
from src.utils.sharding import shard_map, shard_ranges

logger = logging.getLogger(__name__)


def admissible_sigma(n: int) -> int:
    return 1 + floor_log2_pow3(n)


def n_for_sigma(sigma: int) -> Optional[int]:
    """The n with admissible_sigma(n) == sigma, or None if sigma is not admissible."""
    n = 0
    while admissible_sigma(n) < sigma:
        n += 1
    return n if admissible_sigma(n) == sigma else None


def sigma(s: int, cap: int = DEFAULT_CAP) -> int:
    """Least k with T^k(s) < s."""
    _require_positive(s, "s")
    if s == 1:
        raise DomainError("σ(1) is undefined: no iterate of 1 drops below 1")
    x = s
    for k in range(1, cap + 1):
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
        if x < s:
            return k
    raise CapExhausted(cap, what=f"stopping time for {s}")


def _profile(s: int, limit: int) -> Optional[Tuple[int, int]]:
    """(σ, τ) of s if it stops within `limit` steps, else None."""
    x, tau = s, 1
    for k in range(1, limit + 1):
        y = (3 * x + 1) >> 1 if x & 1 else x >> 1
        if y < s:
            return k, tau
        if x & 7 == 6:
            tau += 1
        x = y
    return None


def tau(s: int, cap: int = DEFAULT_CAP) -> StoppingProfile:
    """σ(s) and the number of C^t blocks run through until it is reached.

    Every term ≡ 6 (mod 8) closes a block. A crossing at the halving step right
    after a block end counts against that block, not the next one.
    """
    _require_positive(s, "s")
    if s % 12 not in (3, 7):
        raise DomainError(f"τ is defined for s ≡ 3, 7 (mod 12); {s} ≡ {s % 12}")
    x, count, starts = s, 1, [s]
    for k in range(1, cap + 1):
        y = (3 * x + 1) >> 1 if x & 1 else x >> 1
        if y < s:
            return StoppingProfile(s=s, sigma=k, tau=count, crossing_value=y, subsequence_starts=tuple(starts))
        if x & 7 == 6:
            count += 1
            starts.append(canonical_start(y)[0])
        x = y
    raise CapExhausted(cap, what=f"stopping time for {s}")


def coefficient_classes(n: int) -> List[int]:
    """Residues mod 2^σ whose coefficient 3^j/2^k first drops below 1 at k = σ."""
    target = admissible_sigma(n)
    pow3 = [3 ** i for i in range(target + 1)]
    frontier = [(0, 0, 0)]  # (r mod 2^k, j, c) at depth k, coefficient still >= 1
    for k in range(target):
        nxt = []
        for r, j, c in frontier:
            for lift in (r, r + (1 << k)):
                v = (pow3[j] * lift + c) >> k
                if v & 1:
                    nxt.append((lift, j + 1, 3 * c + (1 << k)))
                else:
                    nxt.append((lift, j, c))
        frontier = []
        for r, j, c in nxt:
            below = pow3[j] < 1 << (k + 1)
            if k + 1 == target:
                if below:
                    frontier.append((r, j, c))
            elif not below:
                frontier.append((r, j, c))
    return sorted(r for r, _, _ in frontier)


def _stops_exactly_at(x: int, target: int) -> bool:
    s, y = x, x
    for k in range(1, target + 1):
        y = (3 * y + 1) >> 1 if y & 1 else y >> 1
        if y < s:
            return k == target
    return False


def direct_sigma_scan(target: int, lo: int, hi: int) -> List[int]:
    modulus = 1 << target
    return [r for r in range(lo, hi) if _stops_exactly_at(r if r >= 2 else r + modulus, target)]


def tau_scan(target: int, modulus: int, lo: int, hi: int):
    """Residues ≡ 3, 7 (mod 12) in [lo, hi) stopping at `target`, with their τ.

    Classification uses the lift r + modulus; r + 2·modulus is checked for
    agreement.
    """
    found, violations = [], []
    for base in range(lo - lo % 12, hi, 12):
        for off in (3, 7):
            r = base + off
            if r < lo or r >= hi:
                continue
            p = _profile(r + modulus, target)
            q = _profile(r + 2 * modulus, target)
            if p != q:
                violations.append((r, r + 2 * modulus, p, q))
            if p is not None and p[0] == target:
                found.append((r, p[1]))
    return found, violations


class StoppingManager:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings.from_env()

    def _guard(self, target: int, guard: int) -> None:
        if target > guard:
            raise GuardExceeded(target, guard, what="σ")

    def sigma(self, s: int) -> int:
        return sigma(s, self.settings.trajectory_cap)

    def tau(self, s: int) -> StoppingProfile:
        return tau(s, self.settings.trajectory_cap)

    def enum_sigma_classes(self, n: int) -> SigmaClassReport:
        if n < 0:
            raise DomainError(f"n must be >= 0, got {n}")
        target = admissible_sigma(n)
        self._guard(target, self.settings.sigma_guard)
        modulus = 1 << target
        classes = coefficient_classes(n)

        discrepancies = []
        for r in classes:
            reps = [x for x in (r, r + modulus, r + 2 * modulus) if x >= 2][:2]
            for x in reps:
                try:
                    observed = sigma(x, self.settings.trajectory_cap)
                except CapExhausted:
                    observed = None
                if observed != target:
                    discrepancies.append(SigmaDiscrepancy(r, x, target, observed))
        for d in discrepancies:
            logger.warning("coefficient class %d mod %d: σ(%d) = %s, expected %d",
                           d.residue, modulus, d.representative, d.observed_sigma, target)
        return SigmaClassReport(
            n=n, sigma=target, modulus=modulus, classes=tuple(classes), discrepancies=tuple(discrepancies)
        )

    def scan_sigma_classes(self, n: int) -> SigmaClassReport:
        """Direct-simulation oracle: every residue mod 2^σ, smallest member >= 2."""
        if n < 0:
            raise DomainError(f"n must be >= 0, got {n}")
        target = admissible_sigma(n)
        self._guard(target, self.settings.sigma_guard)
        modulus = 1 << target
        tasks = [(target, lo, hi) for lo, hi in shard_ranges(modulus, self.settings.threads * 4)]
        parts = shard_map(direct_sigma_scan, tasks, self.settings.threads, self.settings.progress, f"σ={target}")
        classes = sorted(r for part in parts for r in part)
        return SigmaClassReport(n=n, sigma=target, modulus=modulus, classes=tuple(classes), method="direct")

    def enum_tau_classes(self, n: int, tau_filter: Optional[int] = None) -> TauClassReport:
        if n < 2:
            raise DomainError(f"n must be >= 2, got {n}")
        target = admissible_sigma(n)
        self._guard(target, self.settings.tau_guard)
        modulus = 3 << target
        tasks = [(target, modulus, lo, hi) for lo, hi in shard_ranges(modulus, self.settings.threads * 4)]
        parts = shard_map(tau_scan, tasks, self.settings.threads, self.settings.progress, f"τ scan n={n}")

        by_tau: Dict[int, List[int]] = {}
        violations = []
        for found, bad in parts:
            for r, t in found:
                if tau_filter is None or t == tau_filter:
                    by_tau.setdefault(t, []).append(r)
            for r, rep, p, q in bad:
                logger.warning("τ class %d mod %d not uniform: %s vs %s at %d", r, modulus, p, q, rep)
                violations.append(UniformityViolation(r, rep, p, q))
        return TauClassReport(
            n=n,
            sigma=target,
            modulus=modulus,
            classes={t: tuple(sorted(rs)) for t, rs in sorted(by_tau.items())},
            violations=tuple(violations),
        )

    def verify_conjecture_3(self, n: int) -> ConjectureCheck:
        z = self.enum_sigma_classes(n).z
        total = self.enum_tau_classes(n).total
        half, odd = divmod(total, 2)
        return ConjectureCheck(n=n, lhs=z, rhs=half, match=not odd and z == half,
                               detail=f"sum A_tau = {total}")

    def verify_conjecture_4(self, n: int) -> ConjectureCheck:
        if n < 2:
            raise DomainError(f"n must be >= 2, got {n}")
        m = 1 + floor_log2_pow3(n - 1) - (n - 1)
        observed = len(self.enum_tau_classes(n, tau_filter=1).classes.get(1, ()))
        return ConjectureCheck(n=n, lhs=observed, rhs=1 << m, match=observed == 1 << m, detail=f"m = {m}")

    def tau_table(self, n_max: int) -> CountTable:
        if n_max < 2:
            raise DomainError(f"n_max must be >= 2, got {n_max}")
        rows: Dict[int, Dict[int, int]] = {}
        z: Dict[int, int] = {}
        sigma_of_n: Dict[int, int] = {}
        for n in range(2, n_max + 1):
            report = self.enum_tau_classes(n)
            sigma_of_n[n] = report.sigma
            for t, count in report.counts.items():
                rows.setdefault(t, {})[n] = count
            if report.sigma <= self.settings.sigma_guard:
                z[n] = self.enum_sigma_classes(n).z
        return CountTable(rows=rows, z=z, sigma_of_n=sigma_of_n)


def theorem4_reduction(limit: int, cap: int = DEFAULT_CAP) -> Set[int]:
    """All 2 <= s <= limit with σ(s) > 2; every member should be ≡ 3 (mod 4)."""
    return {s for s in range(2, limit + 1) if sigma(s, cap) > 2}
