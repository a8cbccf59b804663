#!/usr/bin/env python3
"""Tour of the generator: full listings, the two orders, and the tree walk.

A binary word is prefix normal when no factor packs more 1s than the prefix
of the same length.  All such words of a fixed length can be produced from
the seed 110...0 by two moves: slide the rightmost 1 one step right, or drop
a new 1 at the first position where it fits.
"""

from prefixnormal import Order, hamming, iter_all, iter_pn, oracle_enumerate

print("All prefix normal words of length 4, increasing:")
print(" ", " ".join(iter_all(4)))

print("\nSame set in Gray-code order (neighbours differ in <= 3 positions):")
gray = list(iter_all(4, Order.GRAY))
print(" ", " ".join(gray))
dists = [hamming(a, b) for a, b in zip(gray, gray[1:])]
print("  consecutive Hamming distances:", dists)
print("  wrap-around distance:", hamming(gray[-1], gray[0]))

print("\nBoth listings agree with the brute-force filter:")
for n in (6, 8, 10):
    brute = list(oracle_enumerate(n))
    assert list(iter_all(n)) == brute
    assert sorted(iter_all(n, Order.GRAY)) == brute
    print(f"  n={n}: {len(brute)} words, generator == filter")

print("\nThe subtree of words agreeing with 11010000 before its last 1:")
words = list(iter_pn("11010000", Order.GRAY))
for i in range(0, len(words), 7):
    print(" ", " ".join(words[i : i + 7]))
print(f"  {len(words)} words; max neighbour distance:",
      max(hamming(a, b) for a, b in zip(words, words[1:])))
