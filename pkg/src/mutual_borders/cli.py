"""Command-line front end.

    mutual-borders classify aabab aabba
    mutual-borders count 12 m_disjoint
    mutual-borders brute 8 --format json
    mutual-borders verify 10
    mutual-borders tables 1
    mutual-borders sequence mbar_eq --max-n 12 --format csv
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import counters
from .census import DEFAULT_CAP, brute_D, brute_census
from .lattice import OverlapGeometry, triple_count_brute, triple_count_closed
from .words import BinaryWord, classify, lsb_pair

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

TABLE_ROWS = {
    "1": (range(1, 13), [("Md(n)", counters.m_disjoint)]),
    "2": (range(1, 13), [("Mo(n) gamma=1", lambda n: counters.m_overlap_gamma(n, 1)),
                         ("Mo(n) gamma=2", lambda n: counters.m_overlap_gamma(n, 2))]),
    "3": (range(1, 13), [("Mo(n) gamma=3", lambda n: counters.m_overlap_gamma(n, 3)),
                         ("Mo(n) gamma=4", lambda n: counters.m_overlap_gamma(n, 4))]),
    "4": (range(2, 13), [("Mbar=(n)", counters.mbar_eq)]),
}

SEQUENCES = {
    "m_total": (1, counters.m_total),
    "m_disjoint": (1, counters.m_disjoint),
    "m_overlap": (1, counters.m_overlap),
    "mbar_total": (1, counters.mbar_total),
    "mbar_eq": (2, counters.mbar_eq),
    "mbar_neq": (2, counters.mbar_neq),
    "mixed": (1, counters.mixed_count),
}


class UsageError(Exception):
    pass


def _word(text: str) -> BinaryWord:
    try:
        return BinaryWord.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _sequence_value(name: str, n: int) -> int:
    if name.startswith("m_overlap_gamma_"):
        return counters.m_overlap_gamma(n, int(name.rsplit("_", 1)[1]))
    return SEQUENCES[name][1](n)


def _sequence_start(name: str) -> int:
    return 1 if name.startswith("m_overlap_gamma_") else SEQUENCES[name][0]


def table_csv(which: str) -> str:
    ns, cols = TABLE_ROWS[which]
    return _csv(["n"] + [c[0] for c in cols], [[n] + [f(n) for _, f in cols] for n in ns])


def cmd_classify(args) -> tuple[int, str]:
    u, v = _word(args.u), _word(args.v)
    if u.length != v.length:
        raise UsageError("words must have equal length")
    if u.length < 1:
        raise UsageError("words must be nonempty")
    i, j = lsb_pair(u, v), lsb_pair(v, u)
    show = lambda x: "none" if x is None else str(x)
    return EXIT_OK, f"{classify(u, v)} i={show(i)} j={show(j)}\n"


def cmd_count(args) -> tuple[int, str]:
    n, which = args.n, args.which
    if which == "D":
        if args.k is None:
            raise UsageError("count D needs --k")
        try:
            value = counters.D(n, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif which == "m_overlap_gamma":
        if args.gamma is None:
            raise UsageError("count m_overlap_gamma needs --gamma")
        value = counters.m_overlap_gamma(n, args.gamma)
    else:
        start = SEQUENCES[which][0]
        if n < start:
            raise UsageError(f"{which} is defined for n >= {start}")
        value = SEQUENCES[which][1](n)
    return EXIT_OK, f"{value}\n"


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise UsageError(f"n={n} exceeds the brute-force cap {cap}; raise it with --cap")
    if cap > DEFAULT_CAP:
        print(f"warning: cap {cap} above {DEFAULT_CAP}; the census visits 4**n pairs "
              f"and needs memory proportional to 2**n per block", file=sys.stderr)


def cmd_brute(args) -> tuple[int, str]:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    _check_cap(args.n, args.cap)
    rec = brute_census(args.n, cap=args.cap, threads=args.threads)
    data = rec.to_dict()
    if args.format == "csv":
        return EXIT_OK, _csv(list(data), [list(data.values())])
    return EXIT_OK, json.dumps(data, indent=2) + "\n"


def verify_rows(n_max: int, cap: int = DEFAULT_CAP, threads: int = 1) -> list[tuple[int, str, int, int]]:
    """(n, quantity, formula, oracle) for every quantity checked up to n_max."""
    rows = []
    for n in range(1, n_max + 1):
        rec = brute_census(n, cap=cap, threads=threads)
        checks = [("m_total", counters.m_total(n), rec.m_total),
                  ("m_disjoint", counters.m_disjoint(n), rec.m_disjoint)]
        for g in range(1, max(n - 1, 1)):
            checks.append((f"m_overlap_gamma_{g}", counters.m_overlap_gamma(n, g),
                           rec.m_overlap_by_gamma.get(g, 0)))
        checks.append(("mbar_total", counters.mbar_total(n), rec.mbar_total))
        if n >= 2:
            checks += [("mbar_eq", counters.mbar_eq(n), rec.mbar_eq),
                       ("mbar_neq", counters.mbar_neq(n), rec.mbar_neq)]
        checks += [("mixed", counters.mixed_count(n), rec.internal_only),
                   ("mixed_ext", counters.mixed_count(n), rec.external_only)]
        if n >= 2:
            d_formula = sum(counters.D(n, k) for k in range(1, n // 2 + 1))
            d_oracle = sum(brute_D(n, k) for k in range(1, n))
            checks.append(("D", d_formula, d_oracle))
        triple_f = triple_b = 0
        for g in range(3, n - 1):
            for c in range(2, n - g - 1):
                i, j = n - c, c + g
                for l2 in range(0, c - 1):
                    for l1 in range(l2 + 2, c + 1):
                        for k in range(l1, l2 + g + 1):
                            geo = OverlapGeometry(n, i, j, l1, l2, k)
                            triple_f += triple_count_closed(geo)
                            triple_b += triple_count_brute(geo.a_l2, geo.a_l1, geo.a_k)
        if n >= 5:
            checks.append(("triple", triple_f, triple_b))
        rows += [(n, name, f, o) for name, f, o in checks]
    return rows


def cmd_verify(args) -> tuple[int, str]:
    if args.n_max < 1:
        raise UsageError("n_max must be >= 1")
    _check_cap(args.n_max, args.cap)
    rows = verify_rows(args.n_max, cap=args.cap, threads=args.threads)
    width = max(len(r[1]) for r in rows)
    lines = [f"n={n:<3} {name:<{width}} {'PASS' if f == o else 'FAIL'}  formula={f} oracle={o}"
             for n, name, f, o in rows]
    failed = sum(f != o for _, _, f, o in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} PASS")
    return (EXIT_MISMATCH if failed else EXIT_OK), "\n".join(lines) + "\n"


def cmd_tables(args) -> tuple[int, str]:
    which = sorted(TABLE_ROWS) if args.which == "all" else [args.which]
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        texts = {w: table_csv(w) for w in which}
        for w, text in texts.items():
            (out / f"table{w}.csv").write_text(text)
        return EXIT_OK, "".join(f"{out / f'table{w}.csv'}\n" for w in which)
    return EXIT_OK, "\n".join(table_csv(w) for w in which)


def cmd_sequence(args) -> tuple[int, str]:
    name = args.which
    if name not in SEQUENCES and not (name.startswith("m_overlap_gamma_")
                                      and name.rsplit("_", 1)[1].isdigit()):
        raise UsageError(f"unknown sequence {name!r}")
    start = _sequence_start(name)
    terms = [(n, _sequence_value(name, n)) for n in range(start, args.max_n + 1)]
    if args.format == "csv":
        return EXIT_OK, _csv(["n", name], terms)
    payload = {"sequence": name, "offset": start, "values": [str(v) for _, v in terms]}
    return EXIT_OK, json.dumps(payload) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mutual-borders",
                                     description="Mutual abelian borders of binary word pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an ordered pair of words")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="closed-form count")
    p.add_argument("n", type=int)
    p.add_argument("which", choices=sorted(SEQUENCES) + ["m_overlap_gamma", "D"])
    p.add_argument("--gamma", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_count)

    for name, func, helptext in (("brute", cmd_brute, "exhaustive census of all pairs"),
                                 ("verify", cmd_verify, "compare closed forms with the census")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("n_max" if name == "verify" else "n", type=int)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--threads", type=int, default=1, help="parallelism hint; never changes results")
        if name == "brute":
            p.add_argument("--format", choices=["json", "csv"], default="json")
        p.set_defaults(func=func)

    p = sub.add_parser("tables", help="CSV replicas of the reference tables")
    p.add_argument("which", choices=sorted(TABLE_ROWS) + ["all"])
    p.add_argument("--out", help="directory to write table<k>.csv files into")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("sequence", help="a named count sequence up to --max-n")
    p.add_argument("which", help=f"one of {', '.join(sorted(SEQUENCES))} or m_overlap_gamma_<g>")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_sequence)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        code, text = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(text)
    return code


def main() -> None:
    sys.exit(run())
