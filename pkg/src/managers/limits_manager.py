import logging
import math
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Union

from src.config import Settings
from src.contexts.limitContext import DyadicRational, LimitReport, LimitTerm
from src.core import floor_log2_pow3
from src.errors import DataFileError, DomainError, MissingZValue
from src.managers.stopping_manager import StoppingManager, admissible_sigma

logger = logging.getLogger(__name__)

BUNDLED_Z_VALUES = Path(__file__).resolve().parent.parent / "data" / "z_values.tsv"
DISPLAY_DIGITS = 12

# published limit of the τ = 1 quotient, to the digits printed
THEOREM5_LIMIT = Fraction("1.5121861")


def beta(n: int) -> int:
    if n < 2:
        raise DomainError(f"β is defined for n >= 2, got {n}")
    return floor_log2_pow3(n) - floor_log2_pow3(n - 1) - 1


def render_decimal(q: Fraction, digits: int = DISPLAY_DIGITS) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def _report(G: int, terms: List[LimitTerm]) -> LimitReport:
    total = DyadicRational(0)
    for term in terms:
        total = total + term.contribution
    q = Fraction(1 << (G - 1)) / total.to_fraction()
    return LimitReport(
        G=G,
        numerator=q.numerator,
        denominator=q.denominator,
        decimal=render_decimal(q),
        denominator_sum=total,
        terms=tuple(terms),
    )


def theorem5_quotient(G: int) -> LimitReport:
    """2^(G-1) / Σ_{n=2..G} 2^(G-n-β_n)."""
    if G < 2:
        raise DomainError(f"G must be >= 2, got {G}")
    terms = [LimitTerm(n, DyadicRational.power_of_two(G - n - beta(n))) for n in range(2, G + 1)]
    return _report(G, terms)


def theorem6_quotient(G: int, z_values: Mapping[int, int]) -> LimitReport:
    """2^(G-1) / Σ_{n=2..G} 2^(G-⌊n·log₂3⌋)·z(n)."""
    if G < 2:
        raise DomainError(f"G must be >= 2, got {G}")
    terms = []
    for n in range(2, G + 1):
        if n not in z_values:
            raise MissingZValue(n)
        terms.append(LimitTerm(n, DyadicRational.power_of_two(G - floor_log2_pow3(n)) * z_values[n]))
    return _report(G, terms)


def theorem5_series(G_from: int, G_to: int) -> List[LimitReport]:
    return [theorem5_quotient(G) for G in range(G_from, G_to + 1)]


def theorem6_series(G_from: int, G_to: int, z_values: Mapping[int, int]) -> List[LimitReport]:
    return [theorem6_quotient(G, z_values) for G in range(G_from, G_to + 1)]


def load_z_values(path: Union[str, Path] = BUNDLED_Z_VALUES) -> Dict[int, int]:
    """Parse a z-file: `n<TAB>z(n)` lines, `#` comments, mandatory `# source:` header."""
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise DataFileError(str(path), 0, f"cannot read: {e}") from e
    if not lines or not lines[0].startswith("# source:") or not lines[0][len("# source:"):].strip():
        raise DataFileError(str(path), 1, "first line must be '# source: <provenance>'")

    values: Dict[int, int] = {}
    for no, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise DataFileError(str(path), no, f"expected 'n<TAB>z(n)', got {line!r}")
        try:
            n, z = int(parts[0]), int(parts[1])
        except ValueError:
            raise DataFileError(str(path), no, f"non-integer field in {line!r}")
        if n in values:
            raise DataFileError(str(path), no, f"duplicate n={n}")
        values[n] = z
    logger.debug("loaded %d z values from %s", len(values), path)
    return values


def sturmian_bit(n: int) -> int:
    """1 - (⌊n(√2-1)⌋ - ⌊(n-1)(√2-1)⌋), with exact integer square roots."""
    def floor_mult(m: int) -> int:
        return math.isqrt(2 * m * m) - m
    return 1 - (floor_mult(n) - floor_mult(n - 1))


def sturmian_divergence(n_max: int) -> Optional[int]:
    """First n in 2..n_max where β_n differs from the sturmian word, else None."""
    for n in range(2, n_max + 1):
        if beta(n) != sturmian_bit(n):
            return n
    return None


class LimitsManager:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings.from_env()

    def theorem5(self, G: int) -> LimitReport:
        return theorem5_quotient(G)

    def computed_z_values(self, n_max: int) -> Dict[int, int]:
        """z(2..n_max) from enum_sigma_classes, stopping at the σ guard."""
        stopping = StoppingManager(self.settings)
        values = {}
        for n in range(2, n_max + 1):
            if admissible_sigma(n) > self.settings.sigma_guard:
                logger.info("z(%d) needs σ = %d beyond the guard %d", n, admissible_sigma(n), self.settings.sigma_guard)
                break
            values[n] = stopping.enum_sigma_classes(n).z
        return values

    def z_values(self, n_max: int, z_file: Optional[Union[str, Path]] = None, computed: bool = False) -> Dict[int, int]:
        if computed and z_file:
            raise DomainError("use either a z-file or computed z values, not both")
        if computed:
            return self.computed_z_values(n_max)
        return load_z_values(z_file or BUNDLED_Z_VALUES)

    def theorem6(self, G: int, z_file: Optional[Union[str, Path]] = None, computed: bool = False) -> LimitReport:
        return theorem6_quotient(G, self.z_values(G, z_file, computed))

    def near_published_limit(self, report: LimitReport) -> bool:
        return abs(report.quotient - THEOREM5_LIMIT) <= Fraction(self.settings.limit_tolerance)
