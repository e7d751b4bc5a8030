"""Command-line interface: ``zww {generate,analyze,lyndon-array,verify,tables,bench}``.

Exit codes: 0 success, 1 verification mismatch or I/O failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import analysis, formats, formulas
from .exceptions import ZWWError
from .bench import bench_records
from .lyndon_array import algorithm_la
from .verify import SELECTORS, verify
from .words import fibonacci_word, zww

ANALYSES = ("letters", "palindromes", "squares", "runs", "lyndon", "lyndon-array")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    p.add_argument("--max-length", type=int, metavar="N", help="override the word length cap")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="zww", description="The Fibonacci word on an infinite alphabet (ZWW word): generate, analyze, verify, benchmark.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", parents=[common], help="write W_k or F_k")
    g.add_argument("k", type=int)
    g.add_argument("--fibonacci", action="store_true", help="emit F_k instead of W_k")

    for name in ("analyze", "lyndon-array"):
        helptext = "census of a word" if name == "analyze" else "Lyndon array of a word"
        a = sub.add_parser(name, parents=[common], help=helptext)
        src = a.add_mutually_exclusive_group(required=True)
        src.add_argument("k", type=int, nargs="?")
        src.add_argument("--input", metavar="FILE", help="words in text format, one per line")
        if name == "analyze":
            a.add_argument("--what", choices=ANALYSES, required=True)
        a.add_argument("--witnesses", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="check formulas against oracles")
    v.add_argument("--max-k", type=int, help="upper bound for every selected check")
    v.add_argument("--theorem", choices=SELECTORS, default="all")

    t = sub.add_parser("tables", parents=[common], help="1: F_i and W_i for i <= 5; 2: square counts, formula vs oracle")
    t.add_argument("which", type=int, choices=(1, 2))
    t.add_argument("--n-min", type=int, default=3)
    t.add_argument("--n-max", type=int, default=12)

    b = sub.add_parser("bench", parents=[common], help="time the linear-time Lyndon array")
    b.add_argument("max_k", type=int)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--min-k", type=int, default=2, help="first k (clamped to max_k)")
    b.add_argument("--compare", action="store_true", help="also time the brute-force array")
    return parser


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    w = (fibonacci_word if args.fibonacci else zww)(args.k, max_length=args.max_length)
    if args.format == "json":
        _emit(args, json.dumps(formats.word_to_json(w, args.k)) + "\n")
    else:
        _emit(args, formats.word_to_text(w))
    return 0


def _words_for(args):
    if args.input is None:
        return [(args.k, zww(args.k, max_length=args.max_length))]
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return [(None, w) for w in formats.parse_words(text)]
    except formats.FormatError as exc:
        raise UsageError(f"{args.input}: {exc}") from None


def _analyze_one(what: str, k, w, args) -> str:
    as_json = args.format == "json"
    if what == "lyndon-array":
        arr = analysis.lyndon_array_bruteforce(w) if k is None else algorithm_la(
            k, max_length=args.max_length)[1]
        if as_json:
            return formats.lyndon_array_to_json(w, arr, k) + "\n"
        return formats.lyndon_array_to_text(w, arr)
    if what == "letters":
        counts = {int(c): analysis.count_letter(w, int(c)) for c in sorted(set(w.tolist()))}
        if as_json:
            return json.dumps({"what": "letters", "counts": {str(c): n for c, n in counts.items()}}) + "\n"
        return "".join(f"{c}\t{n}\n" for c, n in counts.items())
    extra = {}
    if what == "palindromes":
        report = analysis.palindrome_census(w, witnesses=args.witnesses)
    elif what == "squares":
        report = analysis.square_census(w, witnesses=args.witnesses)
    elif what == "lyndon":
        report = analysis.lyndon_census(w, witnesses=args.witnesses)
        extra["by_letter"] = {str(c): n for c, n in analysis.lyndon_factor_census(w).items()}
    else:
        runs = analysis.run_census(w)
        contents = {w[r.start - 1 : r.start - 1 + r.length] for r in runs}
        report = analysis.CensusReport("runs", len(contents), len(runs),
                                       runs if args.witnesses else None)
    if as_json:
        return formats.census_to_json(report, **extra) + "\n"
    out = [f"what\t{report.what}\n", f"distinct\t{report.distinct}\n", f"total\t{report.total}\n"]
    out += [f"letter {c}\t{n}\n" for c, n in extra.get("by_letter", {}).items()]
    out += ["witness\t" + " ".join(map(str, o)) + "\n" for o in report.witnesses or []]
    return "".join(out)


def cmd_analyze(args, what: str | None = None) -> int:
    what = what or args.what
    text = "".join(_analyze_one(what, k, w, args) for k, w in _words_for(args))
    _emit(args, text)
    return 0


def cmd_verify(args) -> int:
    outcomes = verify(args.theorem, args.max_k)
    if args.format == "json":
        text = json.dumps([o.to_dict() for o in outcomes], indent=1) + "\n"
    else:
        rows = [f"{'theorem':<28} {'range':>9}  status"]
        for o in outcomes:
            rows.append(f"{o.theorem:<28} {f'{o.lo}..{o.hi}':>9}  {o.status}")
            if o.counterexample:
                rows.append(f"    counterexample: {json.dumps(o.counterexample)}")
        text = "\n".join(rows) + "\n"
    _emit(args, text)
    failed = [o for o in outcomes if o.status != "pass"]
    for o in failed:
        print(f"FAIL {o.theorem}: {json.dumps(o.counterexample)}", file=sys.stderr)
    return 1 if failed else 0


def table_one() -> list[tuple[str, str]]:
    return [(f"F_{i}={fibonacci_word(i)}", f"W_{i}={zww(i)}") for i in range(6)]


def table_two(n_min: int, n_max: int) -> list[dict]:
    rows = []
    for n in range(max(n_min, 1), n_max + 1):
        w_sq = analysis.square_census(zww(n))
        f_sq = analysis.square_census(fibonacci_word(n))
        row = {
            "n": n,
            "W_distinct_formula": formulas.distinct_square_count(n),
            "W_distinct_oracle": w_sq.distinct,
            "W_total_formula": formulas.total_squares(n),
            "W_total_oracle": w_sq.total,
            "F_distinct_formula": formulas.fib_word_distinct_squares(n),
            "F_distinct_oracle": f_sq.distinct,
            "F_total_formula": (formulas.fib_word_total_squares(n)
                                if n >= formulas.FIB_TOTAL_SQUARES_MIN_N else None),
            "F_total_oracle": f_sq.total,
            "note": "",
        }
        if n < formulas.FIB_DISTINCT_SQUARES_MIN_N:
            row["note"] = "F distinct formula not valid below n=4"
        rows.append(row)
    return rows


def cmd_tables(args) -> int:
    if args.which == 1:
        rows = table_one()
        if args.format == "json":
            text = json.dumps([{"F": f, "W": w} for f, w in rows]) + "\n"
        else:
            text = "".join(f"{f} / {w}\n" for f, w in rows)
        _emit(args, text)
        return 0
    rows = table_two(args.n_min, args.n_max)
    if args.format == "json":
        _emit(args, json.dumps(rows) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["n"])
        writer.writeheader()
        writer.writerows(rows)
        _emit(args, buf.getvalue())
    else:
        head = f"{'n':>3} {'W dist f/o':>12} {'W tot f/o':>14} {'F dist f/o':>12} {'F tot f/o':>14}\n"
        lines = [head]
        for r in rows:
            ft = "-" if r["F_total_formula"] is None else r["F_total_formula"]
            flag = "  *" + r["note"] if r["note"] else ""
            lines.append(
                f"{r['n']:>3} {r['W_distinct_formula']:>5}/{r['W_distinct_oracle']:<6}"
                f" {r['W_total_formula']:>6}/{r['W_total_oracle']:<7}"
                f" {r['F_distinct_formula']:>5}/{r['F_distinct_oracle']:<6}"
                f" {ft:>6}/{r['F_total_oracle']:<7}{flag}\n"
            )
        _emit(args, "".join(lines))
    return 0


def cmd_bench(args) -> int:
    if args.reps < 1:
        raise UsageError("--reps must be >= 1")
    if args.max_k < 0:
        raise UsageError("max_k must be >= 0")
    records = bench_records(args.max_k, args.reps, args.compare, args.min_k, args.max_length)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "length", "la_ns", "brute_ns", "reps"])
    writer.writerows(r.row() for r in records)
    _emit(args, buf.getvalue())
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "lyndon-array": lambda a: cmd_analyze(a, "lyndon-array"),
    "verify": cmd_verify,
    "tables": cmd_tables,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"zww: error: {exc}", file=sys.stderr)
        return 2
    except ZWWError as exc:
        print(f"zww: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"zww: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
