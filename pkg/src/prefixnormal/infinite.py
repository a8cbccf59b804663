"""Minimum prefix density and infinite extensions of prefix normal words.

Repeatedly appending the shortest run of 0s followed by a 1 (the densest
extension that stays prefix normal) turns a finite word into an infinite one
that is ultimately periodic.  The period's length and number of 1s are fixed
in advance by the seed's minimum-density prefix, which lets `detect_period`
certify the period after a bounded scan instead of guessing.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import comb

from .words import (
    DEFAULT_ORACLE_CAP,
    check_word,
    is_prefix_normal,
    oracle_enumerate,
    prefix_counts,
)

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class DensityProfile:
    """Minimum over all prefixes of (number of 1s) / (prefix length).

    `length` is the shortest prefix attaining the minimum and `ones` its
    count of 1s, so density == Fraction(ones, length) exactly.
    """

    density: Fraction
    length: int
    ones: int


def density_profile(w: str) -> DensityProfile:
    """Exact minimum prefix density of w with its earliest witness prefix."""
    check_word(w)
    if not w:
        raise ValueError("the empty word has no density")
    best_num, best_den = 1, 0  # +infinity until the first prefix is seen
    c = 0
    for i, ch in enumerate(w, 1):
        if ch == "1":
            c += 1
        # strict comparison keeps the earliest minimizing prefix
        if c * best_den < best_num * i:
            best_num, best_den = c, i
    return DensityProfile(Fraction(best_num, best_den), best_den, best_num)


def _check_seed(w: str) -> str:
    check_word(w)
    if not w.endswith("1"):
        raise ValueError("the seed must end with 1 (trim trailing zeros first)")
    if not is_prefix_normal(w):
        raise ValueError("the seed is not prefix normal")
    return w


def extend_min(w: str) -> str:
    """Append the shortest 0-run followed by a 1 that keeps w prefix normal.

    Each candidate is checked with the full quadratic test; the search always
    terminates because w 0^len(w) 1 is prefix normal.
    """
    _check_seed(w)
    for k in range(len(w) + 1):
        cand = w + "0" * k + "1"
        if is_prefix_normal(cand):
            return cand
    raise AssertionError("unreachable: appending len(w) zeros and a 1 always works")


def extend_stream(w: str, *, debug: bool = False):
    """Lazily yield the symbols of the infinite minimal extension of w.

    The prefix of any requested length matches the corresponding finite
    iterate of extend_min.  Per appended symbol only the trailing len(w)
    symbols are consulted: a suffix window of that length decides whether the
    next 1 is legal.  debug=True cross-checks every placement against the
    quadratic test.
    """
    _check_seed(w)
    size = len(w)
    p = prefix_counts(w)
    yield from w
    tail = deque(w, maxlen=size)
    while True:
        last = list(tail)
        so = [0] * size  # so[j]: 1s among the last j symbols of the current word
        for j in range(1, size):
            so[j] = so[j - 1] + (last[size - j] == "1")
        k = 0
        while True:
            ok = True
            for t in range(k + 2, size + 1):
                if 1 + so[t - 1 - k] > p[t]:
                    ok = False
                    break
            if ok:
                break
            k += 1
        if debug:
            cand = "".join(last) + "0" * k + "1"
            if not is_prefix_normal(cand):
                raise AssertionError(f"illegal placement after {k} zeros past {''.join(last)}")
            if k and is_prefix_normal("".join(last) + "0" * (k - 1) + "1"):
                raise AssertionError(f"placement after {k} zeros is not minimal")
        for _ in range(k):
            tail.append("0")
            yield "0"
        tail.append("1")
        yield "1"


def stream_prefix(w: str, length: int, **kwargs) -> str:
    """The first `length` symbols of the infinite minimal extension of w."""
    return "".join(islice(extend_stream(w, **kwargs), length))


@dataclass(frozen=True)
class BlockFactorization:
    """A word cut into fixed-size blocks plus a shorter tail."""

    blocks: tuple[str, ...]
    tail: str


def split_blocks(w: str, size: int) -> BlockFactorization:
    """Cut w into consecutive blocks of exactly `size` symbols."""
    check_word(w)
    if size < 1:
        raise ValueError("block size must be >= 1")
    nb = len(w) // size
    return BlockFactorization(
        blocks=tuple(w[i * size : (i + 1) * size] for i in range(nb)),
        tail=w[nb * size :],
    )


class ScanCapExceeded(Exception):
    """Raised when period detection hits its scan cap before certifying.

    Carries the scanned prefix so the caller can report partial progress.
    """

    def __init__(self, seed: str, scan_cap: int, scanned_prefix: str):
        super().__init__(f"no period certified within {scan_cap} symbols for seed {seed}")
        self.seed = seed
        self.scan_cap = scan_cap
        self.scanned_prefix = scanned_prefix


@dataclass(frozen=True)
class ExtensionReport:
    """Certified decomposition preperiod + period^infinity of a seed's extension."""

    seed: str
    density: Fraction
    block_len: int        # period length, predicted from the seed
    block_ones: int       # period weight, predicted from the seed
    preperiod: str
    period: str
    m_blocks: int         # ceil(len(seed) / block_len)
    preperiod_bound: int
    scanned_length: int
    checks: dict

    def to_json_dict(self) -> dict:
        return {
            "seed": self.seed,
            "delta": f"{self.density.numerator}/{self.density.denominator}",
            "iota": self.block_len,
            "kappa": self.block_ones,
            "preperiod": self.preperiod,
            "period": self.period,
            "preperiod_bound": self.preperiod_bound,
            "scanned_length": self.scanned_length,
            "checks": dict(self.checks),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def detect_period(w: str, scan_cap: int | None = None) -> ExtensionReport:
    """Certify the ultimate period of the infinite minimal extension of w.

    The stream is cut into blocks whose length is the seed's minimum-density
    prefix length.  Once the same block value repeats m+1 times in a row
    (m = ceil(len(w) / block length)) starting past the seed, the generation
    window has wrapped and the stream is provably periodic from there on.
    The decomposition is then canonicalized: the period is read off the block
    grid anchored at the end of the seed, and whole blocks are peeled
    backwards as long as they match, so the period is never a suffix of the
    preperiod.

    Raises ScanCapExceeded if the cap is reached first; the default cap is
    large enough that this cannot happen.
    """
    _check_seed(w)
    prof = density_profile(w)
    iota, kappa = prof.length, prof.ones
    seed_len = len(w)
    m = -(-seed_len // iota)
    binomial = comb(iota, kappa)
    bound = (binomial - 1) * m * iota
    if bound > _INT64_MAX:
        raise ValueError(
            f"preperiod bound {binomial - 1}*{m}*{iota} exceeds 64-bit range; refusing to scan"
        )
    cap = scan_cap if scan_cap is not None else max(bound, seed_len) + (m + 2) * iota

    gen = extend_stream(w)
    v: list[str] = []
    prev_block = None
    run = 0
    nblocks = 0
    periodic_from = None
    while len(v) < cap:
        v.append(next(gen))
        if len(v) % iota == 0:
            block = "".join(v[len(v) - iota :])
            run = run + 1 if block == prev_block else 1
            prev_block = block
            nblocks += 1
            if run >= m + 1 and (nblocks - m - 1) * iota + 1 > seed_len:
                periodic_from = (nblocks - m - 1) * iota + 1
                break
    if periodic_from is None:
        raise ScanCapExceeded(w, cap, "".join(v))

    # Anchor the period grid at the end of the seed and peel whole blocks
    # backwards to the shortest preperiod consistent with that grid.
    a = periodic_from
    while (a - 1) % iota != seed_len % iota:
        a += 1
    x = "".join(v[a - 1 : a - 1 + iota])
    q = a
    while q - iota >= 1 and "".join(v[q - iota - 1 : q - 1]) == x:
        q -= iota
    u = "".join(v[: q - 1])

    checks = {
        "length_ok": len(x) == iota,
        "weight_ok": x.count("1") == kappa,
        "bound_ok": len(u) <= bound,
        "aligned_pn_ok": (len(u) % iota != 0) or is_prefix_normal(x),
    }
    return ExtensionReport(
        seed=w,
        density=prof.density,
        block_len=iota,
        block_ones=kappa,
        preperiod=u,
        period=x,
        m_blocks=m,
        preperiod_bound=bound,
        scanned_length=len(v),
        checks=checks,
    )


def verify_densest(w: str, n: int, cap: int | None = None) -> bool:
    """Whether the minimal extension of w dominates, prefix count by prefix
    count, every prefix normal length-n word starting with w.

    Exhaustive over the brute-force enumeration; a False return means a
    counterexample exists (and would be a bug in the extension engine).
    """
    _check_seed(w)
    if n < len(w):
        raise ValueError("n must be at least the seed length")
    limit = DEFAULT_ORACLE_CAP if cap is None else cap
    ext = stream_prefix(w, n)
    pv = prefix_counts(ext)
    for z in oracle_enumerate(n, limit):
        if z.startswith(w):
            pz = prefix_counts(z)
            if any(pv[i] < pz[i] for i in range(1, n + 1)):
                return False
    return True
