"""Shared reference implementations for the test suite.

Everything here is independent of the package's optimized code paths; the
tests use these as cross-checks.
"""

from prefixnormal import bubble, flip, is_prefix_normal, min_flip, oracle_enumerate


def pn_def_set(w: str) -> set[str]:
    """The defining set for a seed: prefix normal words of the same length that
    copy w before its rightmost 1 and still have a 1 from there on.  Computed
    by filtering the brute-force enumeration."""
    n = len(w)
    r = w.rfind("1") + 1
    return {
        v
        for v in oracle_enumerate(n)
        if v[: r - 1] == w[: r - 1] and "1" in v[r - 1 :]
    }


def reference_inorder(w: str) -> list[str]:
    """Recursive in-order listing of the bubble/flip tree rooted at w."""
    out: list[str] = []
    n = len(w)

    def rec(v: str) -> None:
        if v[-1] == "0":
            rec(bubble(v))
        out.append(v)
        phi = min_flip(v, validate=False)
        if phi <= n:
            rec(flip(v, phi))

    rec(w)
    return out


def reference_postorder(w: str) -> list[str]:
    """Recursive post-order listing of the bubble/flip tree rooted at w."""
    out: list[str] = []
    n = len(w)

    def rec(v: str) -> None:
        if v[-1] == "0":
            rec(bubble(v))
        phi = min_flip(v, validate=False)
        if phi <= n:
            rec(flip(v, phi))
        out.append(v)

    rec(w)
    return out


def window_formulation_is_pn(w: str) -> bool:
    """Alternative prefix-normality test: for every factor length k, the
    maximum sliding-window count of 1s must not exceed the k-prefix count."""
    n = len(w)
    bits = [c == "1" for c in w]
    prefix = [0]
    for b in bits:
        prefix.append(prefix[-1] + b)
    for k in range(1, n + 1):
        best = max(prefix[i + k] - prefix[i] for i in range(n - k + 1))
        if best > prefix[k]:
            return False
    return True


def oracle_min_flip(w: str) -> int:
    """Least position past the rightmost 1 whose flip stays prefix normal,
    found by flipping and running the quadratic test."""
    n = len(w)
    r = w.rfind("1") + 1
    for j in range(r + 1, n + 1):
        if is_prefix_normal(flip(w, j)):
            return j
    return n + 1


def pn_words(n: int) -> tuple[str, ...]:
    return oracle_enumerate(n)


def seeds_ending_in_one(max_len: int) -> list[str]:
    return [
        w
        for n in range(1, max_len + 1)
        for w in oracle_enumerate(n)
        if w.endswith("1")
    ]
