"""Enumeration and statistics of prefix normal words by critical prefix.

The words of length n whose critical prefix is exactly 1^s 0^t form one seed
word plus one flip-subtree of the generation tree, so they can be listed
without touching the rest of the language.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .generate import DEFAULT_GEN_CAP, Order, generate_all, generate_pn, iter_pn
from .ops import flip, min_flip
from .words import is_prefix_normal

_ZERO, _ONE = 0x30, 0x31


def critset(n: int, s: int, t: int, visit, order: Order = Order.LEX) -> int:
    """Visit the prefix normal words of length n with critical prefix 1^s 0^t.

    Requires s >= 1 (the all-zero word is the only one with s == 0 and is
    never part of any class here).  Queries with s + t > n are legal and
    denote the empty set.  Returns the number of words visited.
    """
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if s < 1:
        raise ValueError("s must be >= 1; only the all-zero word has s == 0")
    if t < 0:
        raise ValueError("t must be >= 0")
    if s + t > n:
        return 0
    if s + t == n:
        visit(memoryview(bytearray(b"1" * s + b"0" * t)).toreadonly())
        return 1
    if t == 0:
        # With symbols left over, the next one would be a 1 and the leading
        # 1-run would be longer than s.
        return 0
    seed = "1" * s + "0" * t + "1" + "0" * (n - s - t - 1)
    if not is_prefix_normal(seed):
        raise RuntimeError(f"internal invariant broken: {seed} should be prefix normal")
    phi = min_flip(seed, validate=False)
    count = 1
    if order is Order.LEX:
        visit(memoryview(bytearray(seed, "ascii")).toreadonly())
        if phi <= n:
            count += generate_pn(flip(seed, phi), visit, order)
    else:
        # Post-order over the virtual subtree: the flip subtree ends on its
        # own root, one flipped position away from the seed word.
        if phi <= n:
            count += generate_pn(flip(seed, phi), visit, order)
        visit(memoryview(bytearray(seed, "ascii")).toreadonly())
    return count


def critset_count(n: int, s: int, t: int) -> int:
    """Size of the class with critical prefix 1^s 0^t among length-n words."""
    if n < 0:
        raise ValueError("word length must be nonnegative")
    if s < 1:
        raise ValueError("s must be >= 1; only the all-zero word has s == 0")
    if t < 0:
        raise ValueError("t must be >= 0")
    if s + t > n or (t == 0 and s + t < n):
        return 0
    if s + t == n:
        return 1
    seed = "1" * s + "0" * t + "1" + "0" * (n - s - t - 1)
    phi = min_flip(seed)
    if phi > n:
        return 1
    return 1 + sum(1 for _ in iter_pn(flip(seed, phi), copy=False))


@dataclass(frozen=True)
class CountsTable:
    """Class sizes on a rectangular (s, t) range; rows are s, columns are t.

    The t range starts at 0 so the table can cover every nonzero class; the
    all-zero word belongs to no class and is reported separately.
    """

    n: int
    s_values: tuple[int, ...]
    t_values: tuple[int, ...]
    cells: dict

    def total(self) -> int:
        return sum(self.cells.values())

    def to_csv(self) -> str:
        lines = ["s\\t," + ",".join(str(t) for t in self.t_values)]
        for s in self.s_values:
            lines.append(f"{s}," + ",".join(str(self.cells[s, t]) for t in self.t_values))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "cells": [
                {"s": s, "t": t, "count": self.cells[s, t]}
                for s in self.s_values
                for t in self.t_values
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def critset_table(n: int, s_max: int, t_max: int, *, jobs: int = 1) -> CountsTable:
    """Fill the (s, t) count matrix for s in 1..s_max, t in 0..t_max.

    Cells are independent; with jobs > 1 they are fanned out across worker
    processes.
    """
    if s_max < 1 or t_max < 1:
        raise ValueError("s_max and t_max must be >= 1")
    s_values = tuple(range(1, s_max + 1))
    t_values = tuple(range(0, t_max + 1))
    keys = [(s, t) for s in s_values for t in t_values]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            counts = list(pool.map(_cell, [(n, s, t) for s, t in keys], chunksize=8))
        cells = dict(zip(keys, counts))
    else:
        cells = {(s, t): critset_count(n, s, t) for s, t in keys}
    return CountsTable(n=n, s_values=s_values, t_values=t_values, cells=cells)


def _cell(args: tuple[int, int, int]) -> int:
    return critset_count(*args)


@dataclass(frozen=True)
class Histogram:
    """How many prefix normal words of length n have a given critical prefix length."""

    n: int
    bins: dict
    total: int

    def to_csv(self) -> str:
        lines = ["length,count,percent"]
        for length in sorted(self.bins):
            count = self.bins[length]
            lines.append(f"{length},{count},{100 * count / self.total:.6f}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "bins": [
                {"length": length, "count": self.bins[length],
                 "percent": round(100 * self.bins[length] / self.total, 6)}
                for length in sorted(self.bins)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def critical_prefix_histogram(n: int, cap: int | None = None) -> Histogram:
    """Single enumeration pass binning words by critical prefix length.

    The all-zero word lands in bin n (its critical prefix is the whole word).
    """
    limit = DEFAULT_GEN_CAP if cap is None else cap
    if n > limit:
        raise ValueError(f"n={n} exceeds the enumeration cap ({limit})")
    bins: dict[int, int] = {}

    def tally(view) -> None:
        m = len(view)
        i = 0
        while i < m and view[i] == _ONE:
            i += 1
        j = i
        while j < m and view[j] == _ZERO:
            j += 1
        bins[j] = bins.get(j, 0) + 1

    total = generate_all(n, tally)
    return Histogram(n=n, bins=bins, total=total)
