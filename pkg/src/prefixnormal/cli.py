"""Command-line surface: generation, class counts, histograms, word checks,
extensions, and a self-check against the brute-force enumeration.

Words stream to stdout, one per line; diagnostics go to stderr.  Exit codes:
0 success (or a true answer), 1 a false answer from `check`/`oracle`,
2 usage or input error, 3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .critstats import critical_prefix_histogram, critset, critset_table
from .generate import DEFAULT_GEN_CAP, Order, generate_all
from .infinite import (
    ScanCapExceeded,
    density_profile,
    detect_period,
    extend_min,
)
from .ops import min_flip
from .words import (
    DEFAULT_ORACLE_CAP,
    check_word,
    critical_prefix,
    hamming,
    is_prefix_normal,
    last_one,
    oracle_enumerate,
)

GEN_CAP_ENV = "PREFIXNORMAL_GEN_CAP"
ORACLE_CAP_ENV = "PREFIXNORMAL_ORACLE_CAP"


def _gen_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    return int(os.environ.get(GEN_CAP_ENV, DEFAULT_GEN_CAP))


def _oracle_cap(args) -> int:
    if args.cap is not None:
        return args.cap
    return int(os.environ.get(ORACLE_CAP_ENV, DEFAULT_ORACLE_CAP))


def _order(args) -> Order:
    return Order.LEX if args.order == "lex" else Order.GRAY


def _emit_words(words: list[str], fmt: str, out) -> None:
    if fmt == "plain":
        for w in words:
            out.write(w + "\n")
    elif fmt == "csv":
        out.write("word\n")
        for w in words:
            out.write(w + "\n")
    else:
        out.write(json.dumps({"count": len(words), "words": words}) + "\n")


def cmd_gen(args) -> int:
    cap = _gen_cap(args)
    if args.n > cap:
        print(f"error: n={args.n} exceeds the generation cap ({cap})", file=sys.stderr)
        return 2
    if args.count_only:
        total = generate_all(args.n, lambda view: None, _order(args))
        print(total)
        return 0
    out = sys.stdout
    if args.format == "plain":
        generate_all(args.n, lambda view: out.write(bytes(view).decode("ascii") + "\n"),
                     _order(args))
    else:
        words: list[str] = []
        generate_all(args.n, lambda view: words.append(bytes(view).decode("ascii")),
                     _order(args))
        _emit_words(words, args.format, out)
    return 0


def cmd_critset(args) -> int:
    cap = _gen_cap(args)
    if args.n > cap:
        print(f"error: n={args.n} exceeds the generation cap ({cap})", file=sys.stderr)
        return 2
    if args.count_only:
        count = critset(args.n, args.s, args.t, lambda view: None, _order(args))
        print(count)
        return 0
    words: list[str] = []
    critset(args.n, args.s, args.t, lambda view: words.append(bytes(view).decode("ascii")),
            _order(args))
    _emit_words(words, args.format, sys.stdout)
    return 0


def cmd_table(args) -> int:
    cap = _gen_cap(args)
    if args.n > cap:
        print(f"error: n={args.n} exceeds the generation cap ({cap})", file=sys.stderr)
        return 2
    t_max = args.t_max if args.t_max is not None else args.n
    table = critset_table(args.n, args.s_max, t_max, jobs=args.jobs)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        sys.stdout.write(table.to_json() + "\n")
    return 0


def cmd_hist(args) -> int:
    cap = _gen_cap(args)
    if args.n > cap:
        print(f"error: n={args.n} exceeds the generation cap ({cap})", file=sys.stderr)
        return 2
    hist = critical_prefix_histogram(args.n, cap=cap)
    if args.format == "csv":
        sys.stdout.write(hist.to_csv())
    else:
        sys.stdout.write(hist.to_json() + "\n")
    return 0


def cmd_check(args) -> int:
    w = check_word(args.word)
    if not w:
        raise ValueError("cannot check the empty word")
    pn = is_prefix_normal(w)
    prof = density_profile(w)
    cp = critical_prefix(w)
    report: dict = {"is_prefix_normal": pn, "r": last_one(w)}
    if pn and "1" in w:
        report["phi"] = min_flip(w, validate=False)
    report["critical_prefix"] = {"s": cp.s, "t": cp.t}
    report["delta"] = f"{prof.density.numerator}/{prof.density.denominator}"
    report["iota"] = prof.length
    report["kappa"] = prof.ones
    print(json.dumps(report))
    return 0 if pn else 1


def cmd_extend(args) -> int:
    w = args.word
    if args.detect:
        report = detect_period(w, scan_cap=args.scan_cap)
        print(report.to_json())
        return 0
    cur = w
    for _ in range(args.steps):
        cur = extend_min(cur)
    print(cur)
    return 0


def cmd_oracle(args) -> int:
    cap = _oracle_cap(args)
    if args.n > cap:
        print(f"error: n={args.n} exceeds the oracle cap ({cap})", file=sys.stderr)
        return 2
    n = args.n
    expected = list(oracle_enumerate(n, cap))
    lex: list[str] = []
    generate_all(n, lambda view: lex.append(bytes(view).decode("ascii")), Order.LEX)
    gray: list[str] = []
    generate_all(n, lambda view: gray.append(bytes(view).decode("ascii")), Order.GRAY)

    results = [
        ("lex listing equals brute force, in order", lex == expected),
        ("gray listing has no duplicates", len(set(gray)) == len(gray)),
        ("gray listing is a permutation of brute force", sorted(gray) == expected),
    ]
    if n >= 1:
        dist_ok = all(hamming(a, b) <= 3 for a, b in zip(gray, gray[1:]))
        results.append(("gray consecutive Hamming distances <= 3", dist_ok))
    if n >= 2:
        results.append(("gray cyclic closure distance == 2", hamming(gray[-1], gray[0]) == 2))
    ok = True
    for label, passed in results:
        print(f"{'PASS' if passed else 'FAIL'} {label} (n={n}, {len(expected)} words)")
        ok = ok and passed
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefixnormal",
        description="Generate and analyze prefix normal binary words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="list all prefix normal words of a given length")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--order", choices=["lex", "gray"], default="lex")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("critset", help="list the words with critical prefix 1^s 0^t")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-s", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("--order", choices=["lex", "gray"], default="lex")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_critset)

    p = sub.add_parser("table", help="matrix of critical-prefix class sizes")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--s-max", type=int, default=7)
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("hist", help="histogram of critical prefix lengths")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_hist)

    p = sub.add_parser("check", help="analyze a single word")
    p.add_argument("word")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("extend", help="extend a word or detect its ultimate period")
    p.add_argument("word")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--detect", action="store_true")
    p.add_argument("--scan-cap", type=int, default=None)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("oracle", help="compare the generator against brute force")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScanCapExceeded as exc:
        partial = {
            "seed": exc.seed,
            "error": "scan cap exceeded before a period was certified",
            "scan_cap": exc.scan_cap,
            "scanned_length": len(exc.scanned_prefix),
            "scanned_prefix": exc.scanned_prefix,
        }
        print(json.dumps(partial))
        return 3
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
