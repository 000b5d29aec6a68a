import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.contexts.subsequenceContext import SubsequenceKind, Variant
from src.core import t_step, trajectory
from src.errors import DomainError
from src.subseq import (
    canonical_start,
    classify_growth,
    decompose,
    extract_subsequence,
    first_subsequences,
    is_stopping_sequence,
    kind_of,
    skeleton_violations,
)

C27_STARTS = (27, 31, 91, 103, 175, 111, 283, 319, 607, 15)


def test_extract_examples():
    sub = extract_subsequence(19)
    assert sub.terms == (19, 29, 44, 22)
    assert (sub.kind, sub.variant, sub.length_index) == (SubsequenceKind.T, Variant.A, 3)
    assert (sub.max_odd, sub.max_even) == (29, 44)
    assert sub.label == "C^3_A(19)"

    sub = extract_subsequence(9)
    assert sub.terms == (9, 14, 7)
    assert (sub.kind, sub.variant) == (SubsequenceKind.H, Variant.A)

    sub = extract_subsequence(3)
    assert sub.terms == (3, 5, 8, 4, 2, 1)
    assert (sub.variant, sub.length_index) == (Variant.B, 5)


def test_extract_rejects_other_residues():
    for s in (1, 2, 5, 11, 12, 13):
        with pytest.raises(DomainError):
            extract_subsequence(s)


def test_kind_of():
    assert kind_of(15) is SubsequenceKind.T
    assert kind_of(19) is SubsequenceKind.T
    assert kind_of(21) is SubsequenceKind.H
    assert kind_of(23) is None


def test_canonical_start_examples():
    assert canonical_start(167) == (111, 1)
    assert canonical_start(19) == (19, 0)
    assert canonical_start(119) == (79, 1)
    with pytest.raises(DomainError):
        canonical_start(5)


def test_t_skeleton_up_to_1e5():
    for s in range(3, 10 ** 5 + 1, 4):
        if s % 12 in (3, 7):
            assert skeleton_violations(extract_subsequence(s)) == [], s


def test_h_skeleton_up_to_1e5():
    for s in range(9, 10 ** 5 + 1, 12):
        assert skeleton_violations(extract_subsequence(s)) == [], s


def test_every_3_mod_4_term_in_exactly_one_canonical_block():
    for x in range(3, 10 ** 5 + 1, 4):
        start, offset = canonical_start(x)
        assert start % 12 in (3, 7)
        assert extract_subsequence(start).terms[offset] == x


@settings(max_examples=200)
@given(st.integers(1, 10 ** 4).map(lambda k: 12 * k + 7))
def test_variant_a_end_halves_to_3_mod_4(s):
    sub = extract_subsequence(s)
    if sub.variant is Variant.A:
        nxt = t_step(sub.end_term)
        assert nxt % 4 == 3
        assert nxt < sub.max_odd


def test_decompose_27():
    d = decompose(27)
    assert d.complete
    assert d.preamble == ()
    assert tuple(e.subsequence.start for e in d.entries) == C27_STARTS
    # entered at 167, 911 and 23 (all ≡ 11 mod 12); 111, 607 and 15 never occur
    assert tuple(e.entry_offset for e in d.entries) == (0, 0, 0, 0, 0, 1, 0, 0, 1, 1)
    assert d.entries[5].subsequence.terms == (111, 167, 251, 377, 566)
    assert d.entries[8].subsequence.terms[1] == 911
    assert d.entries[9].subsequence.terms[1] == 23
    assert not {111, 607, 15} & set(trajectory(27))
    assert d.reconstruct() == trajectory(27)


def test_decompose_27_stopping_marks():
    marks = classify_growth(decompose(27))
    assert [i for i, m in enumerate(marks, start=1) if m.stopping] == [5, 9, 10]


def test_decompose_9_starts_with_h():
    d = decompose(9)
    assert d.entries[0].subsequence.terms == (9, 14, 7)
    assert d.entries[1].subsequence.start == 7
    assert d.reconstruct() == trajectory(9)


def test_decompose_power_of_two_is_preamble():
    d = decompose(4)
    assert d.preamble == (4, 2, 1)
    assert d.entries == ()
    assert d.complete


def test_decompose_one():
    d = decompose(1)
    assert d.complete and d.reconstruct() == [1]


def test_decompose_truncates():
    d = decompose(27, max_subsequences=3)
    assert d.truncated
    assert len(d.entries) == 3


def test_decompose_reconstructs_up_to_1e4():
    for s in range(1, 10 ** 4 + 1):
        d = decompose(s)
        assert d.complete
        assert d.reconstruct() == trajectory(s), s


def test_stopping_sequence_examples():
    assert is_stopping_sequence(extract_subsequence(175))
    assert not is_stopping_sequence(extract_subsequence(103))
    assert is_stopping_sequence(extract_subsequence(43))
    with pytest.raises(DomainError):
        is_stopping_sequence(extract_subsequence(9))


def test_first_subsequences_order_and_kind():
    subs = first_subsequences(SubsequenceKind.T, 30)
    assert [s.start for s in subs] == [3, 7, 15, 19, 27]
    subs = first_subsequences("h", 45)
    assert [s.start for s in subs] == [9, 21, 33, 45]
