import pytest

from src.errors import DomainError
from src.lemmata import (
    LEMMATA,
    lemma1,
    lemma10,
    lemma10_depth,
    lemma10_expected_depth,
    lemma10_literal,
    lemma3,
    lemma4,
    lemma5,
    lemma8,
    reverse_odd_step,
    trailing_ones,
)

LIMIT = 10 ** 5

# residue class each lemma quantifies over
DOMAINS = {
    1: lambda n: n % 2 == 0,
    2: lambda n: n % 4 == 1 and n > 1,
    3: lambda n: n % 8 == 6,
    4: lambda n: n & (n - 1) == 0,
    5: lambda n: n % 4 == 3,
    6: lambda n: n % 4 == 3,
    7: lambda n: True,
    8: lambda n: n % 4 == 3,
    9: lambda n: n % 12 == 5,
    10: lambda n: n % 12 == 1 and n > 1,
}


def test_examples():
    assert lemma3(22)
    assert lemma5(11)
    assert lemma10(13)
    assert lemma10_depth(13) == 2


def test_helpers():
    assert trailing_ones(11) == 2
    assert trailing_ones(7) == 3
    assert trailing_ones(8) == 0
    assert reverse_odd_step(17) == 11
    assert reverse_odd_step(10) is None


@pytest.mark.parametrize("number", sorted(LEMMATA))
def test_lemma_holds_on_its_class(number):
    predicate, domain = LEMMATA[number], DOMAINS[number]
    for n in range(1, LIMIT + 1):
        if domain(n):
            assert predicate(n), (number, n)


def test_lemmata_reject_outside_their_class():
    with pytest.raises(DomainError):
        lemma1(3)
    with pytest.raises(DomainError):
        lemma4(6)
    with pytest.raises(DomainError):
        lemma8(5)
    with pytest.raises(DomainError):
        lemma10(27)


def test_lemma8_members_of_11_mod_12_have_smaller_predecessor():
    assert reverse_odd_step(167) == 111
    assert reverse_odd_step(19) is None


def test_lemma10_printed_bound_fails_at_109():
    assert lemma10_depth(109) == 6
    assert lemma10(109)
    assert not lemma10_literal(109)
    assert lemma10_literal(13)


def test_lemma10_depth_follows_3_adic_valuation():
    assert [lemma10_depth(n) for n in (13, 37, 109, 325, 973)] == [2, 4, 6, 8, 10]
    assert [lemma10_expected_depth(n) for n in (13, 37, 109, 325, 973)] == [2, 4, 6, 8, 10]
    # 25 = 12·2 + 1 leaves the class after one double step
    assert lemma10_expected_depth(25) == 2
    with pytest.raises(DomainError):
        lemma10_expected_depth(1)
