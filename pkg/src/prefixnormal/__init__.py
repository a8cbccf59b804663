"""Prefix normal binary words: testing, generation, statistics, extensions.

A binary word is prefix normal when no factor contains more 1s than the
prefix of the same length.  This package provides the quadratic reference
test, a tree-based generator that lists all prefix normal words of a given
length in lexicographic or Gray-code order, enumeration restricted to a
fixed critical prefix, and the minimal-extension engine for infinite words
with certified ultimate periodicity.
"""

from .critstats import (
    CountsTable,
    Histogram,
    critical_prefix_histogram,
    critset,
    critset_count,
    critset_table,
)
from .generate import (
    DEFAULT_GEN_CAP,
    OpCounter,
    Order,
    count_pn,
    generate_all,
    generate_pn,
    iter_all,
    iter_pn,
)
from .infinite import (
    BlockFactorization,
    DensityProfile,
    ExtensionReport,
    ScanCapExceeded,
    density_profile,
    detect_period,
    extend_min,
    extend_stream,
    split_blocks,
    stream_prefix,
    verify_densest,
)
from .ops import (
    bubble,
    flip,
    flip_keeps_pn,
    min_flip,
    min_flip_after_bubble,
    suffixes_satisfy_pn,
)
from .words import (
    DEFAULT_ORACLE_CAP,
    CritPrefix,
    check_word,
    critical_prefix,
    hamming,
    is_prefix_normal,
    last_one,
    oracle_enumerate,
    prefix_counts,
    rank1,
)

__version__ = "0.1.0"

__all__ = [
    "BlockFactorization",
    "CountsTable",
    "CritPrefix",
    "DEFAULT_GEN_CAP",
    "DEFAULT_ORACLE_CAP",
    "DensityProfile",
    "ExtensionReport",
    "Histogram",
    "OpCounter",
    "Order",
    "ScanCapExceeded",
    "bubble",
    "check_word",
    "count_pn",
    "critical_prefix",
    "critical_prefix_histogram",
    "critset",
    "critset_count",
    "critset_table",
    "density_profile",
    "detect_period",
    "extend_min",
    "extend_stream",
    "flip",
    "flip_keeps_pn",
    "generate_all",
    "generate_pn",
    "hamming",
    "is_prefix_normal",
    "iter_all",
    "iter_pn",
    "last_one",
    "min_flip",
    "min_flip_after_bubble",
    "oracle_enumerate",
    "prefix_counts",
    "rank1",
    "split_blocks",
    "stream_prefix",
    "suffixes_satisfy_pn",
    "verify_densest",
]
