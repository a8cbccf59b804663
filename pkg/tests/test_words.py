import pytest
from hypothesis import given
from hypothesis import strategies as st

from prefixnormal import (
    CritPrefix,
    critical_prefix,
    hamming,
    is_prefix_normal,
    last_one,
    oracle_enumerate,
    prefix_counts,
    rank1,
)

from helpers import window_formulation_is_pn

words = st.text(alphabet="01", max_size=24)


def test_rank1_fixtures():
    assert rank1("1101000100110100", 4) == 3
    assert rank1("1101000100110100", 0) == 0
    assert rank1("110100101001", 11) == 5


def test_rank1_range_errors():
    with pytest.raises(IndexError):
        rank1("101", 4)
    with pytest.raises(IndexError):
        rank1("101", -1)


@given(words)
def test_rank1_monotone_unit_steps(w):
    p = prefix_counts(w)
    assert p[0] == 0
    assert p[len(w)] == w.count("1")
    for i in range(1, len(w) + 1):
        assert p[i] - p[i - 1] in (0, 1)
        assert rank1(w, i) == p[i]


def test_is_prefix_normal_fixtures():
    assert is_prefix_normal("11001010")
    assert not is_prefix_normal("11001101")  # the factor 1101 is too heavy
    assert not is_prefix_normal("1101000100110100")
    assert is_prefix_normal("")
    assert is_prefix_normal("0000")


def test_word_validation():
    with pytest.raises(ValueError):
        is_prefix_normal("10a2")
    with pytest.raises(ValueError):
        rank1(b"101", 1)


def test_two_formulations_agree_up_to_14():
    for n in range(15):
        for k in range(1 << n):
            w = format(k, f"0{n}b") if n else ""
            assert is_prefix_normal(w) == window_formulation_is_pn(w), w


def test_critical_prefix_fixtures():
    assert critical_prefix("1100001001") == CritPrefix(2, 4)
    assert critical_prefix("0011101001") == CritPrefix(0, 2)
    assert critical_prefix("1111000000") == CritPrefix(4, 6)
    assert critical_prefix("1111000000").length == 10
    with pytest.raises(ValueError):
        critical_prefix("")


@given(words.filter(bool))
def test_critical_prefix_reconstruction(w):
    cp = critical_prefix(w)
    assert cp.s >= 0 and cp.t >= 0
    if cp.s == 0:
        assert cp.t > 0
    assert w.startswith("1" * cp.s + "0" * cp.t)
    if cp.length < len(w):
        assert w[cp.length] == "1"


def test_last_one():
    assert last_one("11010000") == 4
    assert last_one("0000") is None
    assert last_one("10010") == 4
    assert last_one("") is None


def test_oracle_enumerate_small_lengths():
    assert oracle_enumerate(1) == ("0", "1")
    assert oracle_enumerate(3) == ("000", "100", "101", "110", "111")
    five = oracle_enumerate(5)
    assert len(five) == 14
    assert five[0] == "00000" and five[-1] == "11111"
    assert oracle_enumerate(0) == ("",)


def test_oracle_enumerate_cap_refusal():
    with pytest.raises(ValueError, match="cap"):
        oracle_enumerate(25)
    with pytest.raises(ValueError):
        oracle_enumerate(-1)


def test_hamming():
    n = 8
    assert hamming("11" + "0" * (n - 2), "0" * n) == 2
    assert hamming("10110", "10110") == 0
    assert hamming("11000001", "11000011") == 1
    with pytest.raises(ValueError):
        hamming("10", "100")


def test_nonzero_pn_words_start_with_one():
    for n in range(1, 11):
        for w in oracle_enumerate(n):
            assert w == "0" * n or w[0] == "1"


def test_prefixes_of_pn_words_are_pn():
    for n in range(1, 11):
        for w in oracle_enumerate(n):
            for i in range(n + 1):
                assert is_prefix_normal(w[:i])


def test_appending_zeros_preserves_pn():
    for n in range(1, 9):
        for w in oracle_enumerate(n):
            for i in range(1, 6):
                assert is_prefix_normal(w + "0" * i)


def test_append_one_characterization():
    # w1 stays prefix normal iff every i-length suffix of w has fewer 1s than
    # the (i+1)-length prefix, for 1 <= i < len(w).  The single word "0" is
    # excluded: its quantifier range is empty, yet "01" is not prefix normal.
    for n in range(1, 13):
        for w in oracle_enumerate(n):
            if w == "0":
                continue
            p = prefix_counts(w)
            cond = all(
                p[i + 1] > w[n - i :].count("1") for i in range(1, n)
            )
            assert cond == is_prefix_normal(w + "1"), w
