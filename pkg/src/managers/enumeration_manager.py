import logging
from typing import Dict, List, Optional, Tuple

from src.config import Settings
from src.contexts.lengthClassContext import FibonacciCheck, LengthClassReport, LengthException
from src.contexts.subsequenceContext import SubsequenceKind, Variant
from src.errors import DomainError, GuardExceeded
from src.subseq import cut_length
from src.utils.sharding import shard_map, shard_ranges

logger = logging.getLogger(__name__)

START_RESIDUES = {SubsequenceKind.T: (3, 7), SubsequenceKind.H: (9,)}
# low bits of T^k needed to decide the cut: mod 8 for T, mod 4 for H
CUT_BITS = {SubsequenceKind.T: 3, SubsequenceKind.H: 2}


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def binet_fibonacci(n: int) -> int:
    """Binet's closed form evaluated exactly in Z[√5].

    (1 + √5)^n = a + b·√5 and F(n) = b / 2^(n-1).
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if n == 0:
        return 0
    a, b = 1, 0
    for _ in range(n):
        a, b = a + 5 * b, a + b
    q, rem = divmod(b, 1 << (n - 1))
    if rem:
        raise ArithmeticError(f"Binet numerator {b} not divisible by 2^{n - 1}")
    return q


def modulus_for(kind: SubsequenceKind, length: int) -> int:
    return 12 << length if kind is SubsequenceKind.H else 12 << (length + 1)


def expected_count(kind: SubsequenceKind, length: int) -> int:
    kind = SubsequenceKind(kind)
    if length < 2:
        raise DomainError(f"length must be >= 2, got {length}")
    if kind is SubsequenceKind.H:
        return binet_fibonacci(length - 1)
    return 2 * binet_fibonacci(length + 1) - 2


def symbolic_pass(kind: SubsequenceKind, max_length: int) -> Dict[int, List[int]]:
    """Residues of every length 2..max_length in one refinement pass.

    A frontier entry (r, m, j, k, c) is the class r mod 3·2^m whose first k
    steps follow the trace (3^j·x + c)/2^k. A class is lifted until its
    modulus fixes T^k mod 2^CUT_BITS, then either cut (emitted at length k),
    dropped (k == max_length) or advanced one step.
    """
    kind = SubsequenceKind(kind)
    need = CUT_BITS[kind]
    cut_mask = (1 << need) - 1
    cut_value = 6 if kind is SubsequenceKind.T else 3
    pow3 = [1]
    found: Dict[int, List[int]] = {length: [] for length in range(2, max_length + 1)}

    stack: List[Tuple[int, int, int, int, int]] = [(r, 2, 0, 0, 0) for r in START_RESIDUES[kind]]
    while stack:
        r, m, j, k, c = stack.pop()
        if m < k + need:
            stack.append((r, m + 1, j, k, c))
            stack.append((r + (3 << m), m + 1, j, k, c))
            continue
        while len(pow3) <= j:
            pow3.append(pow3[-1] * 3)
        v = (pow3[j] * r + c) >> k
        if k >= 1 and v & cut_mask == cut_value:
            if k >= 2:
                found[k].append(r)
            continue
        if k == max_length:
            continue
        if v & 1:
            stack.append((r, m, j + 1, k + 1, 3 * c + (1 << k)))
        else:
            stack.append((r, m, j, k + 1, c))

    for residues in found.values():
        residues.sort()
    return found


def brute_scan(kind: SubsequenceKind, length: int, modulus: int, lo: int, hi: int):
    """Classes and variant-B exceptions among admissible residues in [lo, hi)."""
    kind = SubsequenceKind(kind)
    classes, exceptions = [], []
    for base in range(lo - lo % 12, hi, 12):
        for off in START_RESIDUES[kind]:
            r = base + off
            if r < lo or r >= hi:
                continue
            first = cut_length(kind, r)
            if first[1] is Variant.B:
                exceptions.append((r, first[0]))
            samples = [first, cut_length(kind, r + modulus)]
            if samples[0] != samples[1]:
                samples.append(cut_length(kind, r + 2 * modulus))
            if all(v is Variant.A and n == length for n, v in samples):
                classes.append(r)
    return classes, exceptions


class EnumerationManager:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings.from_env()

    @staticmethod
    def _check_length(length: int) -> None:
        if length < 2:
            raise DomainError(f"length must be >= 2, got {length}")

    def brute_length_classes(self, kind: SubsequenceKind, length: int) -> LengthClassReport:
        kind = SubsequenceKind(kind)
        self._check_length(length)
        modulus = modulus_for(kind, length)
        if modulus > self.settings.brute_guard:
            raise GuardExceeded(modulus, self.settings.brute_guard)

        shards = shard_ranges(modulus, self.settings.threads * 4)
        tasks = [(kind, length, modulus, lo, hi) for lo, hi in shards]
        results = shard_map(
            brute_scan,
            tasks,
            threads=self.settings.threads,
            progress=self.settings.progress,
            desc=f"brute {kind.value}={length}",
        )
        classes = sorted(r for part, _ in results for r in part)
        exceptions = sorted(e for _, part in results for e in part)
        logger.info("brute %s=%d: %d classes mod %d", kind.value, length, len(classes), modulus)
        return LengthClassReport(
            kind=kind,
            length=length,
            modulus=modulus,
            classes=tuple(classes),
            exceptions=tuple(LengthException(v, n) for v, n in exceptions),
            method="brute",
        )

    def symbolic_length_classes_upto(self, kind: SubsequenceKind, max_length: int) -> Dict[int, LengthClassReport]:
        kind = SubsequenceKind(kind)
        self._check_length(max_length)
        found = symbolic_pass(kind, max_length)
        return {
            length: LengthClassReport(
                kind=kind,
                length=length,
                modulus=modulus_for(kind, length),
                classes=tuple(residues),
                method="symbolic",
            )
            for length, residues in found.items()
        }

    def symbolic_length_classes(self, kind: SubsequenceKind, length: int) -> LengthClassReport:
        return self.symbolic_length_classes_upto(kind, length)[length]

    def verify_fibonacci_conjectures(self, kind: SubsequenceKind, length_max: int) -> List[FibonacciCheck]:
        kind = SubsequenceKind(kind)
        reports = self.symbolic_length_classes_upto(kind, length_max)
        limit = min(self.settings.brute_cross_check, self.settings.brute_guard)
        checks = []
        for length in range(2, length_max + 1):
            observed = reports[length].count
            expected = expected_count(kind, length)
            brute_agrees = None
            if modulus_for(kind, length) <= limit:
                brute = self.brute_length_classes(kind, length)
                brute_agrees = brute.classes == reports[length].classes
                if not brute_agrees:
                    logger.warning("brute and symbolic disagree for %s=%d", kind.value, length)
            checks.append(FibonacciCheck(length, observed, expected, observed == expected, brute_agrees))
        return checks
