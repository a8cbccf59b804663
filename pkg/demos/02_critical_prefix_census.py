#!/usr/bin/env python3
"""Census of prefix normal words by critical prefix.

The critical prefix of a word is its opening run of 1s followed by the run
of 0s after it.  Words sharing a critical prefix form one subtree of the
generation tree, so each class can be counted without enumerating the rest.
"""

from prefixnormal import (
    count_pn,
    critical_prefix_histogram,
    critset_count,
    critset_table,
)

N = 16

print(f"Class sizes for n={N} (rows: leading 1s, columns: following 0s):")
table = critset_table(N, 6, 8)
print(table.to_csv())

total = count_pn(N)
covered = sum(critset_table(N, N, N).cells.values())
print(f"classes cover {covered} of {total} words; the one word left over is", "0" * N)

print(f"\nHow long are critical prefixes among all {total} words of length {N}?")
hist = critical_prefix_histogram(N)
width = 50 / max(hist.bins.values())
for length in sorted(hist.bins):
    count = hist.bins[length]
    print(f"  {length:2d} {'#' * max(1, int(count * width)):<50} {count}")
print("\nCSV form (plotting-friendly):")
print(hist.to_csv())

print("A couple of individual classes at n=32:")
for s, t in [(2, 30), (7, 22), (5, 9)]:
    print(f"  1^{s} 0^{t}: {critset_count(32, s, t)} words")
