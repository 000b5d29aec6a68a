import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.contexts.traceContext import AffineTrace, ParityVector, Step
from src.core import (
    advance_affine,
    count_37,
    count_37_direct,
    count_37_formula_valid,
    floor_log2_pow3,
    iterate,
    parity_vector,
    t_step,
    trace_of,
    trajectory,
)
from src.errors import CapExhausted, DomainError

C11 = [11, 17, 26, 13, 20, 10, 5, 8, 4, 2, 1]


def test_t_step_examples():
    assert t_step(11) == 17
    assert t_step(2) == 1
    assert t_step(26) == 13


def test_t_step_rejects_non_positive():
    with pytest.raises(DomainError):
        t_step(0)
    with pytest.raises(DomainError):
        t_step(-3)


def test_iterate_examples():
    assert iterate(11, 0) == 11
    assert iterate(11, 6) == 5
    assert iterate(27, 70) == 1


def test_trajectory_of_11():
    assert trajectory(11, cap=10 ** 6) == C11


def test_trajectory_of_one_is_itself():
    assert trajectory(1, cap=10) == [1]


def test_trajectory_of_27():
    terms = trajectory(27)
    assert len(terms) == 71
    assert terms[-1] == 1
    assert max(terms) == 4616


def test_trajectory_cap_keeps_partial():
    with pytest.raises(CapExhausted) as info:
        trajectory(27, cap=5)
    assert info.value.cap == 5
    assert info.value.partial == [27, 41, 62, 31, 47]


def test_trajectory_custom_stop():
    assert trajectory(11, stop=lambda i, x: x < 11) == [11, 17, 26, 13, 20, 10]


def test_floor_log2_pow3_examples():
    assert floor_log2_pow3(0) == 0
    assert floor_log2_pow3(2) == 3
    assert floor_log2_pow3(12) == 19


def test_floor_log2_pow3_against_search():
    for n in range(201):
        k = floor_log2_pow3(n)
        assert 2 ** k <= 3 ** n < 2 ** (k + 1)


def test_advance_affine_examples():
    ident = AffineTrace()
    odd = advance_affine(ident, Step.ODD)
    assert (odd.k, odd.j, odd.c) == (1, 1, 1)
    even = advance_affine(ident, Step.EVEN)
    assert (even.k, even.j, even.c) == (1, 0, 0)
    two = advance_affine(odd, Step.ODD)
    assert (two.k, two.j, two.c) == (2, 2, 5)
    assert two.apply(3) == 8


def test_trace_rejects_inconsistent_parity():
    with pytest.raises(ValueError):
        AffineTrace(k=2, j=1, c=1, parity=ParityVector(mask=0b11, length=2))


def test_parity_vector_of_3():
    pv = parity_vector(3, 5)
    assert str(pv) == "11000"
    assert pv.odd_count == 2
    assert ParityVector.from_steps(pv.steps) == pv


@settings(max_examples=300)
@given(st.integers(1, 10 ** 4), st.integers(0, 40))
def test_trace_matches_iteration(s, k):
    tr = trace_of(s, k)
    assert tr.follows(s)
    assert tr.apply(s) == iterate(s, k)
    assert tr.parity == parity_vector(s, k)


@given(st.integers(1, 10 ** 12))
def test_t_step_decreases_exactly_on_evens(n):
    assert (t_step(n) < n) == (n % 2 == 0)


@given(st.integers(1, 10 ** 6), st.integers(0, 30))
def test_iterate_is_composition(s, k):
    x = s
    for _ in range(k):
        x = t_step(x)
    assert iterate(s, k) == x


def test_count_37_examples():
    assert count_37(7) == 2
    assert count_37(2 ** 11) == 342
    assert count_37_direct(2 ** 11) == 342
    # formula overcounts where limit ≡ 1, 2 (mod 12)
    assert count_37(1) == 1
    assert count_37_direct(1) == 0
    assert not count_37_formula_valid(1)


def test_count_37_formula_where_valid():
    direct = 0
    for limit in range(1, 10 ** 5 + 1):
        if limit % 12 in (3, 7):
            direct += 1
        assert count_37_direct(limit) == direct
        if count_37_formula_valid(limit):
            assert count_37(limit) == direct
