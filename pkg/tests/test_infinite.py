import json
from fractions import Fraction
from itertools import islice

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prefixnormal import (
    BlockFactorization,
    ScanCapExceeded,
    density_profile,
    detect_period,
    extend_min,
    extend_stream,
    is_prefix_normal,
    prefix_counts,
    split_blocks,
    stream_prefix,
    verify_densest,
)

from helpers import seeds_ending_in_one

words = st.text(alphabet="01", min_size=1, max_size=24)


def stream_iterates(w, count):
    """First `count` finite iterates of the extension, cut from the stream at
    each appended 1."""
    need = w.count("1") + count
    out, seen, buf = [], 0, []
    for ch in extend_stream(w):
        buf.append(ch)
        if ch == "1":
            seen += 1
            if seen > w.count("1"):
                out.append("".join(buf))
        if seen == need:
            break
    return out


def test_density_profile_fixtures():
    p = density_profile("110100101001")
    assert (p.density, p.length, p.ones) == (Fraction(5, 11), 11, 5)
    p = density_profile("110100101010")
    assert (p.density, p.length, p.ones) == (Fraction(1, 2), 6, 3)
    p = density_profile("1")
    assert (p.density, p.length, p.ones) == (Fraction(1), 1, 1)


def test_density_profile_prefers_earliest_witness():
    assert density_profile("1010").length == 2
    assert density_profile("10").length == 2
    assert density_profile("0000").length == 1
    assert density_profile("0000").density == 0


def test_density_profile_empty_word():
    with pytest.raises(ValueError):
        density_profile("")


@given(words)
def test_density_profile_invariants(w):
    p = density_profile(w)
    counts = prefix_counts(w)
    assert p.density == Fraction(p.ones, p.length)
    assert counts[p.length] == p.ones
    for j in range(1, len(w) + 1):
        d = Fraction(counts[j], j)
        assert d >= p.density
        if j < p.length:
            assert d > p.density


def test_extend_min_fixtures():
    assert extend_min("1") == "11"
    assert extend_min("101") == "10101"
    assert extend_min("1101") == "11011"


def test_extend_min_rejects_bad_seeds():
    with pytest.raises(ValueError):
        extend_min("10")  # trailing zero
    with pytest.raises(ValueError):
        extend_min("11001101")  # not prefix normal
    with pytest.raises(ValueError):
        extend_min("")


def test_stream_prefix_fixtures():
    assert stream_prefix("1", 5) == "11111"
    assert stream_prefix("101", 9) == "101010101"
    w = "110100101001"
    assert stream_prefix(w, len(w)) == w


def test_stream_equals_iterated_extension():
    # the suffix-window checker inside the stream must agree with the full
    # quadratic search, step by step
    for seed in seeds_ending_in_one(12):
        cur = seed
        for _ in range(30):
            cur = extend_min(cur)
        assert stream_prefix(seed, len(cur)) == cur, seed


def test_stream_debug_mode_is_silent():
    list(islice(extend_stream("10101", debug=True), 80))


def test_stream_prefixes_stay_prefix_normal():
    from math import comb

    for seed in seeds_ending_in_one(7):
        p = density_profile(seed)
        m = -(-len(seed) // p.length)
        bound = (comb(p.length, p.ones) - 1) * m * p.length
        if bound == 0:
            continue
        assert is_prefix_normal(stream_prefix(seed, 4 * bound)), seed


def test_block_density_and_lex_non_increase():
    for seed in seeds_ending_in_one(8):
        p = density_profile(seed)
        fact = split_blocks(stream_prefix(seed, 20 * p.length), p.length)
        for block in fact.blocks:
            assert block.count("1") == p.ones, seed
        assert all(
            a >= b for a, b in zip(fact.blocks, fact.blocks[1:])
        ), seed


def _sampled_long_seeds():
    from prefixnormal import iter_all

    out = []
    for n in (10, 12, 14, 16):
        enders = [w for w in iter_all(n) if w.endswith("1")]
        out.extend(enders[:: max(1, len(enders) // 15)])
    return out


def test_density_profile_invariant_under_extension():
    for seed in seeds_ending_in_one(8) + _sampled_long_seeds():
        want = density_profile(seed)
        for it in stream_iterates(seed, 20):
            assert density_profile(it) == want, seed


def test_split_blocks():
    assert split_blocks("110100", 2) == BlockFactorization(("11", "01", "00"), "")
    assert split_blocks("11010", 2) == BlockFactorization(("11", "01"), "0")
    assert split_blocks("1", 3) == BlockFactorization((), "1")
    with pytest.raises(ValueError):
        split_blocks("101", 0)


def test_detect_period_fixtures():
    rep = detect_period("101")
    assert (rep.preperiod, rep.period) == ("1", "01")
    assert rep.block_len == 2 and rep.block_ones == 1
    assert rep.preperiod_bound == 4
    assert all(rep.checks.values())

    rep = detect_period("1")
    assert (rep.preperiod, rep.period) == ("", "1")

    rep = detect_period("110100101001")
    assert len(rep.period) == 11
    assert rep.period.count("1") == 5
    assert all(rep.checks.values())


def test_detect_period_rejects_bad_seeds():
    with pytest.raises(ValueError):
        detect_period("10")
    with pytest.raises(ValueError):
        detect_period("1011")


def test_detect_period_cap():
    with pytest.raises(ScanCapExceeded) as exc:
        detect_period("101", scan_cap=4)
    assert exc.value.scanned_prefix == "1010"
    assert exc.value.scan_cap == 4
    assert exc.value.seed == "101"


def test_detect_period_decomposition_reconstructs_stream():
    for seed in ("101", "1101", "11010011", "110100101001"):
        rep = detect_period(seed)
        probe = len(rep.preperiod) + 6 * len(rep.period) + len(seed)
        rebuilt = rep.preperiod + rep.period * (
            (probe - len(rep.preperiod)) // len(rep.period) + 1
        )
        assert rebuilt[:probe] == stream_prefix(seed, probe)
        # canonical form: the period never trails the preperiod
        assert not rep.preperiod.endswith(rep.period)


def test_extension_report_json_fields():
    payload = json.loads(detect_period("101").to_json())
    assert payload == {
        "seed": "101",
        "delta": "1/2",
        "iota": 2,
        "kappa": 1,
        "preperiod": "1",
        "period": "01",
        "preperiod_bound": 4,
        "scanned_length": 10,
        "checks": {
            "length_ok": True,
            "weight_ok": True,
            "bound_ok": True,
            "aligned_pn_ok": True,
        },
    }


def test_verify_densest_fixtures():
    assert verify_densest("11", 6)
    assert verify_densest("101", 7)
    assert verify_densest("1", 4)


def test_verify_densest_preconditions():
    with pytest.raises(ValueError):
        verify_densest("10", 6)
    with pytest.raises(ValueError):
        verify_densest("101", 2)
    with pytest.raises(ValueError):
        verify_densest("101", 25)
