"""Recursive-tree generation of prefix normal words, without the recursion.

Every prefix normal word of length n with at least two 1s sits in a binary
tree: a node's left child moves its rightmost 1 one step right (bubble), its
right child writes a new 1 at the first legal position (flip at min_flip).
An in-order walk of that tree lists the words in increasing lexicographic
order; a post-order walk lists them so that neighbours differ in at most 3
positions (a combinatorial Gray code).

The walk is iterative: one mutable byte buffer holds the current word, an
explicit stack of undo records tracks the path to the root, and the min_flip
value is carried along -- recomputed by a linear scan after each flip edge,
but derived in O(1) along bubble runs.
"""

from __future__ import annotations

from enum import Enum

from .ops import _phi_of_bubble, _phi_scan
from .words import check_word, is_prefix_normal

DEFAULT_GEN_CAP = 40

_ZERO, _ONE = 0x30, 0x31
_LEFT, _RIGHT = 0, 1


class Order(Enum):
    LEX = "lex"
    GRAY = "gray"


class OpCounter:
    """Accumulates abstract symbol reads/writes performed by a traversal."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, k: int) -> None:
        self.count += k


def _walk(buf: bytearray, order: Order, counter: OpCounter | None = None,
          check_fast_phi: bool = False):
    """Yield a read-only view of `buf` once per word of the tree rooted there.

    The view aliases the internal buffer and is only valid until the generator
    is advanced.  The caller guarantees the buffer holds a prefix normal word
    with at least two 1s.
    """
    n = len(buf)
    view = memoryview(buf).toreadonly()
    ctr = counter

    first = buf.find(b"1")
    second = buf.find(b"1", first + 1) + 1
    ones = buf.count(_ONE)
    r = buf.rfind(b"1") + 1
    if ctr:
        ctr.add(3 * n)
    phi, reads = _phi_scan(buf, r, n)
    if ctr:
        ctr.add(reads)

    stack: list[tuple[int, int, int, int]] = []
    push = stack.append
    pop = stack.pop

    def descend():
        # Bubble down to the leftmost leaf, deriving each child's min_flip
        # in O(1) from the parent's.  The leaf ends with a 1, so its
        # min_flip lands on the n+1 sentinel automatically.
        nonlocal r, phi, second
        while r < n:
            push((_LEFT, r, phi, second))
            phi = _phi_of_bubble(phi, r, ones, second, n)
            if ones == 2:
                second = r + 1
            buf[r - 1] = _ZERO
            buf[r] = _ONE
            r += 1
            if ctr:
                ctr.add(3)
            if check_fast_phi:
                expected, _ = _phi_scan(buf, r, n)
                if phi != expected:
                    raise AssertionError(
                        f"fast min_flip {phi} != rescanned {expected} at {bytes(buf)!r}"
                    )

    descend()

    if order is Order.LEX:
        while True:
            yield view
            if phi <= n:
                push((_RIGHT, r, phi, second))
                buf[phi - 1] = _ONE
                r = phi
                ones += 1
                if ctr:
                    ctr.add(1)
                phi, reads = _phi_scan(buf, r, n)
                if ctr:
                    ctr.add(reads)
                descend()
            else:
                while True:
                    if not stack:
                        return
                    tag, pr, pphi, psecond = pop()
                    if tag == _LEFT:
                        buf[r - 1] = _ZERO
                        buf[r - 2] = _ONE
                        r, phi, second = pr, pphi, psecond
                        if ctr:
                            ctr.add(2)
                        break
                    buf[r - 1] = _ZERO
                    ones -= 1
                    r, phi, second = pr, pphi, psecond
                    if ctr:
                        ctr.add(1)
    else:
        while True:
            yield view
            if not stack:
                return
            tag, pr, pphi, psecond = pop()
            if tag == _RIGHT:
                buf[r - 1] = _ZERO
                ones -= 1
                r, phi, second = pr, pphi, psecond
                if ctr:
                    ctr.add(1)
            elif pphi > n:
                buf[r - 1] = _ZERO
                buf[r - 2] = _ONE
                r, phi, second = pr, pphi, psecond
                if ctr:
                    ctr.add(2)
            else:
                # Left subtree done and the parent has a right child: step up,
                # then into the right subtree and down to its leftmost leaf.
                buf[r - 1] = _ZERO
                buf[r - 2] = _ONE
                r, second = pr, psecond
                if ctr:
                    ctr.add(2)
                push((_RIGHT, r, pphi, second))
                buf[pphi - 1] = _ONE
                r = pphi
                ones += 1
                if ctr:
                    ctr.add(1)
                phi, reads = _phi_scan(buf, r, n)
                if ctr:
                    ctr.add(reads)
                descend()


def _checked_seed(seed: str) -> bytearray:
    check_word(seed)
    if seed.count("1") < 2:
        raise ValueError("the starting word needs at least two 1s")
    if not is_prefix_normal(seed):
        raise ValueError("the starting word is not prefix normal")
    return bytearray(seed, "ascii")


def generate_pn(seed: str, visit, order: Order = Order.LEX, *,
                counter: OpCounter | None = None,
                check_fast_phi: bool = False) -> int:
    """Visit every prefix normal word that agrees with `seed` before its
    rightmost 1 and has at least one 1 from that position on.

    Order.LEX visits in increasing lexicographic order; Order.GRAY visits so
    that consecutive words differ in at most 3 positions, ending on `seed`
    itself.  The visitor receives a read-only view of an internal buffer,
    valid only for the duration of the call.  Returns the visit count.
    """
    buf = _checked_seed(seed)
    count = 0
    for view in _walk(buf, order, counter, check_fast_phi):
        visit(view)
        count += 1
    return count


def iter_pn(seed: str, order: Order = Order.LEX, *, copy: bool = True):
    """Pull-iterator version of generate_pn.

    Yields str copies by default; with copy=False the same read-only buffer
    view is yielded each time and is invalidated by advancing the iterator.
    """
    buf = _checked_seed(seed)
    for view in _walk(buf, order):
        yield bytes(view).decode("ascii") if copy else view


def _prelude(n: int):
    yield memoryview(bytearray(b"0" * n)).toreadonly()
    yield memoryview(bytearray(b"1" + b"0" * (n - 1))).toreadonly()


def generate_all(n: int, visit, order: Order = Order.LEX, *,
                 counter: OpCounter | None = None,
                 check_fast_phi: bool = False) -> int:
    """Visit every prefix normal word of length n; returns how many there are.

    The all-zero word and the single-1 word come first, then the tree rooted
    at 110^(n-2) supplies the rest.  LEX output is globally lexicographic;
    GRAY output has all consecutive Hamming distances <= 3 and closes the
    cycle at distance 2 from the last word back to the first.
    """
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n == 0:
        visit(memoryview(bytearray(b"")).toreadonly())
        return 1
    if n == 1:
        for b in (b"0", b"1"):
            visit(memoryview(bytearray(b)).toreadonly())
        return 2
    count = 0
    for view in _prelude(n):
        if counter:
            counter.add(n)
        visit(view)
        count += 1
    root = "11" + "0" * (n - 2)
    count += generate_pn(root, visit, order, counter=counter,
                         check_fast_phi=check_fast_phi)
    return count


def iter_all(n: int, order: Order = Order.LEX, *, copy: bool = True):
    """Pull-iterator version of generate_all (same copy semantics as iter_pn)."""
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n <= 1:
        for b in ((b"",) if n == 0 else (b"0", b"1")):
            view = memoryview(bytearray(b)).toreadonly()
            yield bytes(view).decode("ascii") if copy else view
        return
    for view in _prelude(n):
        yield bytes(view).decode("ascii") if copy else view
    yield from iter_pn("11" + "0" * (n - 2), order, copy=copy)


def count_pn(n: int, cap: int = DEFAULT_GEN_CAP) -> int:
    """Number of prefix normal words of length n (refuses n above `cap`)."""
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap ({cap})")
    if n <= 1:
        return n + 1
    return 2 + sum(1 for _ in _walk(bytearray(b"11" + b"0" * (n - 2)), Order.LEX))
