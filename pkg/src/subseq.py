"""Extraction, validation and chaining of the finite subsequences C^t(s) and C^h(s)."""
import logging
from typing import List, Optional, Tuple

from src.contexts.subsequenceContext import (
    Decomposition,
    DecompositionEntry,
    GrowthMark,
    Subsequence,
    SubsequenceKind,
    Variant,
)
from src.core import DEFAULT_CAP, _require_positive
from src.errors import CapExhausted, DegenerateSubsequence, DomainError

logger = logging.getLogger(__name__)

DEFAULT_MAX_SUBSEQUENCES = 10000


def kind_of(s: int) -> Optional[SubsequenceKind]:
    r = s % 12
    if r in (3, 7):
        return SubsequenceKind.T
    if r == 9:
        return SubsequenceKind.H
    return None


def cut_length(kind: SubsequenceKind, s: int, cap: int = DEFAULT_CAP) -> Tuple[int, Variant]:
    """(length index, variant) of the subsequence starting at s, without keeping terms."""
    x, k = s, 0
    while k < cap:
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
        k += 1
        if x == 1:
            return k, Variant.B
        if kind is SubsequenceKind.T:
            if x & 7 == 6:
                return k, Variant.A
        elif x & 3 == 3:
            return k, Variant.A
    raise CapExhausted(cap, what=f"subsequence end from {s}")


def extract_subsequence(s: int, cap: int = DEFAULT_CAP) -> Subsequence:
    _require_positive(s, "s")
    kind = kind_of(s)
    if kind is None:
        raise DomainError(f"{s} ≡ {s % 12} (mod 12); subsequences start at 3, 7 or 9 (mod 12)")

    terms = [s]
    max_odd = s if kind is SubsequenceKind.H else None
    max_even = None
    x = s
    variant = None
    while len(terms) <= cap:
        prev = x
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
        terms.append(x)
        if max_odd is None and prev & 3 == 1:
            max_odd = prev
        if max_odd is not None and max_even is None and prev == max_odd:
            max_even = x
        if x == 1:
            variant = Variant.B
            break
        if kind is SubsequenceKind.T and x & 7 == 6:
            variant = Variant.A
            break
        if kind is SubsequenceKind.H and x & 3 == 3:
            variant = Variant.A
            break
    if variant is None:
        raise CapExhausted(cap, partial=terms, what=f"subsequence end from {s}")
    if len(terms) < 3:
        raise DegenerateSubsequence(s, terms)
    return Subsequence(kind=kind, variant=variant, terms=tuple(terms), max_odd=max_odd, max_even=max_even)


def skeleton_violations(sub: Subsequence) -> List[str]:
    """Every residue-skeleton rule the subsequence breaks; empty when well formed."""
    out = []
    t = sub.terms
    if len(t) < 3:
        out.append(f"length index {len(t) - 1} < 2")
        return out

    if sub.kind is SubsequenceKind.T:
        if t[0] % 12 not in (3, 7):
            out.append(f"start {t[0]} not ≡ 3, 7 (mod 12)")
        p = 0
        while p < len(t) and t[p] & 3 == 3:
            p += 1
        if any(t[i] >= t[i + 1] for i in range(p - 1)):
            out.append("[3]_4 prefix not strictly increasing")
        peak = p
    else:
        if t[0] % 12 != 9:
            out.append(f"start {t[0]} not ≡ 9 (mod 12)")
        peak = 0

    if peak >= len(t) - 1:
        out.append("no odd maximum before the end")
        return out
    if t[peak] % 4 != 1:
        out.append(f"odd maximum {t[peak]} not ≡ 1 (mod 4)")
    if t[peak + 1] % 6 != 2:
        out.append(f"even maximum {t[peak + 1]} not ≡ 2 (mod 6)")
    if sub.max_odd != t[peak] or sub.max_even != t[peak + 1]:
        out.append("extrema fields disagree with the skeleton")

    tail = t[peak:]
    odds = [x for x in tail if x & 1]
    evens = [x for x in tail if not x & 1]
    if any(a <= b for a, b in zip(odds, odds[1:])):
        out.append("odd tail not strictly decreasing")
    if any(a <= b for a, b in zip(evens, evens[1:])):
        out.append("even tail not strictly decreasing")

    end = t[-1]
    if sub.variant is Variant.B:
        if end != 1:
            out.append(f"variant B ends at {end}, not 1")
    elif sub.kind is SubsequenceKind.T and end % 8 != 6:
        out.append(f"variant A end {end} not ≡ 6 (mod 8)")
    elif sub.kind is SubsequenceKind.H and end % 4 != 3:
        out.append(f"variant A end {end} not ≡ 3 (mod 4)")
    return out


def canonical_start(x: int) -> Tuple[int, int]:
    """Walk back through [11]_12 predecessors; returns (start ≡ 3, 7 mod 12, offset)."""
    _require_positive(x, "x")
    if x & 3 != 3:
        raise DomainError(f"{x} is not ≡ 3 (mod 4)")
    offset = 0
    while x % 12 == 11:
        x = (2 * x - 1) // 3
        offset += 1
    return x, offset


def decompose(s: int, max_subsequences: int = DEFAULT_MAX_SUBSEQUENCES, cap: int = DEFAULT_CAP) -> Decomposition:
    _require_positive(s, "s")
    preamble = []
    x = s
    steps = 0
    while x != 1 and x % 12 != 9 and x & 3 != 3:
        preamble.append(x)
        x = (3 * x + 1) >> 1 if x & 1 else x >> 1
        steps += 1
        if steps > cap:
            raise CapExhausted(cap, partial=preamble, what=f"subsequence entry from {s}")
    if x == 1:
        preamble.append(1)
        return Decomposition(source=s, preamble=tuple(preamble), entries=(), complete=True)

    entries = []
    if x % 12 == 9:
        sub = extract_subsequence(x, cap)
        entries.append(DecompositionEntry(sub, 0))
        if sub.variant is Variant.B:
            return Decomposition(source=s, preamble=tuple(preamble), entries=tuple(entries), complete=True)
        x = sub.end_term

    while len(entries) < max_subsequences:
        start, offset = canonical_start(x)
        sub = extract_subsequence(start, cap)
        if sub.terms[offset] != x:
            raise AssertionError(f"{x} not at offset {offset} of {sub.label}")
        entries.append(DecompositionEntry(sub, offset))
        if sub.variant is Variant.B:
            return Decomposition(source=s, preamble=tuple(preamble), entries=tuple(entries), complete=True)
        x = sub.end_term >> 1

    logger.info("decomposition of %d truncated at %d subsequences", s, max_subsequences)
    return Decomposition(source=s, preamble=tuple(preamble), entries=tuple(entries), complete=False)


def is_stopping_sequence(e: Subsequence) -> bool:
    """True iff tau(start) = 1: a term below the start inside e, or right after a variant-A end."""
    if e.kind is not SubsequenceKind.T:
        raise DomainError("stopping-sequence classification applies to T-kind subsequences only")
    s = e.start
    if any(x < s for x in e.terms[1:]):
        return True
    return e.variant is Variant.A and e.end_term >> 1 < s


def classify_growth(decomposition: Decomposition) -> List[GrowthMark]:
    return [
        GrowthMark(
            start=entry.subsequence.start,
            stopping=is_stopping_sequence(entry.subsequence),
            length_index=entry.subsequence.length_index,
            terms=entry.subsequence.terms,
        )
        for entry in decomposition.t_entries
    ]


def first_subsequences(kind: SubsequenceKind, limit: int, cap: int = DEFAULT_CAP) -> List[Subsequence]:
    """Subsequences for every start of `kind` up to and including limit."""
    kind = SubsequenceKind(kind)
    residues = (3, 7) if kind is SubsequenceKind.T else (9,)
    starts = sorted(s for base in range(0, limit + 1, 12) for r in residues if (s := base + r) <= limit)
    return [extract_subsequence(s, cap) for s in starts]
