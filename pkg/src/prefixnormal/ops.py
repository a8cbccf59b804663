"""Word operations around flipping and shifting 1s while preserving prefix normality.

`min_flip` is the workhorse: for a prefix normal word it finds the smallest
position past the rightmost 1 where a 1 can be written without breaking
prefix normality (the sentinel n+1 means "nowhere").  The scan runs in
O(r) symbol reads, r being the position of the rightmost 1.
"""

from __future__ import annotations

from .words import check_word, is_prefix_normal, prefix_counts


def flip(w: str, j: int) -> str:
    """Complement the symbol at position j (1-based); the input is unchanged."""
    check_word(w)
    if not 1 <= j <= len(w):
        raise IndexError(f"position {j} out of range for a word of length {len(w)}")
    return w[: j - 1] + ("1" if w[j - 1] == "0" else "0") + w[j:]


def bubble(w: str) -> str:
    """Move the rightmost 1 of w one position to the right."""
    check_word(w)
    r = w.rfind("1") + 1
    if r == 0:
        raise ValueError("bubble is undefined on an all-zero word")
    if r == len(w):
        raise ValueError("bubble is undefined when the rightmost 1 is at the last position")
    return w[: r - 1] + "01" + w[r + 1 :]


def _phi_scan(buf, r: int, n: int) -> tuple[int, int]:
    """Core scan behind min_flip, on a bytes-like buffer of ASCII '0'/'1'.

    Walks the prefix before position r with two counters: f counts 1s in the
    i-length prefix, g counts 1s in the i-length suffix ending at r.  Whenever
    they agree, the run of 0s that follows the prefix caps how far past r a new
    1 may go.  While skipping such a run, g is left un-updated; this is sound
    only because the word is prefix normal: a suffix already holding the
    maximum allowed number of 1s can only be extended leftward by 0s while the
    prefix side stays flat.  Returns (position, symbol reads).
    """
    f = g = 0
    i = 1
    longest = 0
    reads = 0
    while i < r:
        f += buf[i - 1] & 1
        g += buf[r - i] & 1
        reads += 2
        if f == g:
            run = 0
            i += 1
            while i < r:
                reads += 1
                if buf[i - 1] & 1:
                    break
                run += 1
                i += 1
            if run > longest:
                longest = run
        else:
            i += 1
    return min(r + longest + 1, n + 1), reads


def min_flip(w: str, *, validate: bool = True) -> int:
    """Smallest position after the rightmost 1 where a 1 keeps w prefix normal.

    Returns len(w)+1 when no position works (including words ending in 1).
    The input must be prefix normal and contain at least one 1; pass
    validate=False to skip the quadratic check when the caller guarantees it.
    """
    check_word(w)
    if "1" not in w:
        raise ValueError("an all-zero word has no flip position")
    if validate and not is_prefix_normal(w):
        raise ValueError("word is not prefix normal")
    r = w.rfind("1") + 1
    phi, _ = _phi_scan(w.encode("ascii"), r, len(w))
    return phi


def flip_keeps_pn(w: str, j: int, *, validate: bool = True) -> bool:
    """Whether flipping position j (past the rightmost 1) leaves w prefix normal.

    A flip at j fails exactly when some prefix of length k < r already has all
    its 1s mirrored in the suffix ending at r and is followed by at least
    j - r zeros; then the factor bridging the old and new 1 is too heavy.
    """
    check_word(w)
    n = len(w)
    r = w.rfind("1") + 1
    if r == 0:
        raise ValueError("an all-zero word has no flip candidates")
    if not r < j <= n:
        raise ValueError(f"position {j} must lie in ({r}, {n}]")
    if validate and not is_prefix_normal(w):
        raise ValueError("word is not prefix normal")
    p = prefix_counts(w)
    zrun = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        zrun[k] = 0 if w[k] == "1" else zrun[k + 1] + 1
    need = j - r
    ones_r = p[r]
    for k in range(1, r):
        if ones_r - p[r - k] == p[k] and zrun[k] >= need:
            return False
    return True


def _phi_of_bubble(phi: int, r: int, ones: int, second: int, n: int) -> int:
    """Constant-time min_flip of the bubbled word from the parent's fields.

    `second` is the 1-based position of the second leftmost 1.  Cases: with
    exactly two 1s the gap widens on both flanks; when at least two 1s sit
    within the first phi - r symbols the bound is unchanged; otherwise it
    slips by one.
    """
    if ones == 2:
        return min(n + 1, phi + 2)
    if second <= phi - r:
        return phi
    return min(n + 1, phi + 1)


def min_flip_after_bubble(w: str, phi_w: int, *, validate: bool = True) -> int:
    """min_flip(bubble(w)) computed in constant time from phi_w = min_flip(w).

    Requires a prefix normal w with at least two 1s whose rightmost 1 is not
    at the last position.
    """
    check_word(w)
    n = len(w)
    ones = w.count("1")
    if ones < 2:
        raise ValueError("need at least two 1s")
    r = w.rfind("1") + 1
    if r == n:
        raise ValueError("bubble is undefined when the rightmost 1 is at the last position")
    if validate:
        if not is_prefix_normal(w):
            raise ValueError("word is not prefix normal")
        expected = min_flip(w, validate=False)
        if phi_w != expected:
            raise ValueError(f"phi_w={phi_w} does not match min_flip(w)={expected}")
    second = w.find("1", w.find("1") + 1) + 1
    return _phi_of_bubble(phi_w, r, ones, second, n)


def suffixes_satisfy_pn(v: str, limit: int, *, debug: bool = False) -> bool:
    """Check the prefix normal condition for every suffix of v of length <= limit.

    For words built by repeatedly appending the shortest 0-run plus a 1 to a
    prefix normal seed, checking suffixes up to the seed's length is
    equivalent to full prefix normality; the caller owns that hypothesis.
    debug=True cross-checks against the quadratic test and raises on any
    disagreement.
    """
    check_word(v)
    n = len(v)
    limit = min(limit, n)
    p = prefix_counts(v)
    ones = 0
    result = True
    for t in range(1, limit + 1):
        if v[n - t] == "1":
            ones += 1
        if ones > p[t]:
            result = False
            break
    if debug and result != is_prefix_normal(v):
        raise AssertionError(f"suffix-window check diverged from the full test on {v!r}")
    return result
