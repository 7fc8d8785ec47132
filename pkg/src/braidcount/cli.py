"""Command-line front end.

Commands
--------
normalize TEXT        canonical form of a braid word modulo the center
syllables TEXT        syllable decomposition of a free-group word
theta TEXT            pure projection of a braid word
bounds --word/--braid extremal-length (and entropy) bound intervals
count tuples|words|classes
                      exact counts next to their analytic bounds
report lambda|entropy --Y EXPR
                      lower-bound report at scale parameter Y
verify                run the internal check suites

Output formats: ``json`` (default), ``csv`` with columns exactly the
json keys, and ``plain``.  Exit codes: 0 on success, 1 when ``verify``
finds a failing check, 2 on unusable input.  The environment variable
``BRAIDCOUNT_PRECISION`` overrides the working precision in bits
(default 128).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import braid, classes, counting, invariants, verify, words


class InputError(ValueError):
    """Input that parses nowhere or violates a command's contract."""


def _emit(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    elif fmt == "csv":
        if not rows:
            return
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
        sys.stdout.write(buf.getvalue())
    else:
        for row in rows:
            print("  ".join(f"{k}={v}" for k, v in row.items()))


def _fraction_decimal(value: Fraction) -> str:
    """Round-up decimal rendering shared by all bound columns."""
    return invariants.directed_fraction_decimal(value, "upper")


def _parse_word_arg(text: str) -> words.FreeWord:
    try:
        return words.parse_word(text)
    except words.WordSyntaxError as exc:
        raise InputError(f"bad word {text!r}: {exc}") from exc


def _parse_braid_arg(text: str) -> braid.BraidWord:
    try:
        return braid.parse_braid(text)
    except braid.BraidSyntaxError as exc:
        raise InputError(f"bad braid {text!r}: {exc}") from exc


def cmd_normalize(args) -> list[dict]:
    form = braid.normal_form(braid.evaluate(_parse_braid_arg(args.text)))
    if form.kind == braid.POWER_OF_DELTA:
        return [{
            "input": args.text,
            "kind": form.kind,
            "j": None,
            "k": None,
            "b1": None,
            "ell": form.ell,
        }]
    return [{
        "input": args.text,
        "kind": form.kind,
        "j": form.j,
        "k": form.k,
        "b1": words.word_to_text(form.b1),
        "ell": form.ell,
    }]


def cmd_syllables(args) -> list[dict]:
    deco = words.syllable_decompose(_parse_word_arg(args.text))
    return [
        {
            "index": i,
            "kind": s.kind,
            "degree": s.degree,
            "sign": s.sign,
            "start": s.start,
        }
        for i, s in enumerate(deco.syllables)
    ]


def cmd_theta(args) -> list[dict]:
    form = braid.normal_form(braid.evaluate(_parse_braid_arg(args.text)))
    if form.kind == braid.POWER_OF_DELTA:
        raise InputError("projection undefined for powers of the half twist")
    return [{"input": args.text, "theta": words.word_to_text(braid.pure_projection(form))}]


def _interval_row(kind: str, text: str, quantity: str, interval) -> dict:
    row = {"input_kind": kind, "input": text, "quantity": quantity}
    row.update(interval.to_json())
    return row


def cmd_bounds(args) -> list[dict]:
    # the entropy row appears only when its hypothesis holds; the reason
    # for omitting it goes to stderr so tabular stdout keeps one shape
    rows = []
    if args.word is not None:
        w = _parse_word_arg(args.word)
        rows.append(
            _interval_row("word", args.word, "extremal_length",
                          invariants.extremal_length_bounds_word(w))
        )
        try:
            ent = invariants.entropy_bounds(w)
        except ValueError as exc:
            print(f"note: entropy omitted: {exc}", file=sys.stderr)
        else:
            rows.append(_interval_row("word", args.word, "entropy", ent))
    else:
        x = braid.evaluate(_parse_braid_arg(args.braid))
        rows.append(
            _interval_row("braid", args.braid, "extremal_length",
                          invariants.extremal_length_bounds_braid(x))
        )
        form = braid.normal_form(x)
        if form.kind != braid.GENERAL:
            print(
                "note: entropy omitted: the braid has no pure part",
                file=sys.stderr,
            )
        else:
            try:
                ent = invariants.entropy_bounds(braid.pure_projection(form))
            except ValueError as exc:
                print(f"note: entropy omitted: {exc}", file=sys.stderr)
            else:
                rows.append(_interval_row("braid", args.braid, "entropy", ent))
    return rows


def _resolve_x(args) -> int:
    if args.X is not None:
        if args.X < 0:
            raise InputError("--X must be nonnegative")
        return args.X
    if args.Y is not None:
        try:
            return counting.threshold_from_y(args.Y)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    raise InputError("one of --X or --Y is required")


def _count_row(function: str, j, x: int, exact: int, bound, satisfied: bool) -> dict:
    row = {"function": function, "X": x, "exact": str(exact)}
    if j is not None:
        row = {"function": function, "j": j, "X": x, "exact": str(exact)}
    row["bound"] = None if bound is None else _fraction_decimal(bound)
    row["satisfied"] = satisfied
    return row


def cmd_count(args) -> list[dict]:
    if args.kind == "tuples":
        x = _resolve_x(args)
        if args.j is not None:
            if args.j < 1:
                raise InputError("--j must be positive")
            exact = counting.count_tuples_j(args.j, x)
            try:
                bound = counting.bound_tuples_j(args.j, x)
            except counting.BoundNotApplicable:
                return [_count_row("tuples_j", args.j, x, exact, None, exact == 0)]
            return [_count_row("tuples_j", args.j, x, exact, bound, exact <= bound)]
        exact = counting.count_tuples(x)
        bound = counting.bound_tuples_total(x)
        return [_count_row("tuples", None, x, exact, bound, exact <= bound)]
    if args.kind == "words":
        x = _resolve_x(args)
        if args.max_len is not None:
            exact = counting.count_words_bounded(x, args.max_len)
        else:
            exact = counting.count_words(x, workers=args.workers)
        chain = counting.bound_words(x)
        satisfied = exact <= chain.cube_half and exact <= chain.chain_value
        return [_count_row("words", None, x, exact, chain.cube_half, satisfied)]
    if args.pairs is None or args.pairs < 1:
        raise InputError("count classes requires --pairs >= 1")
    j = args.pairs
    exact = classes.class_count(j)
    bound = Fraction(4**j, 2 * j)
    return [{
        "function": "classes",
        "j": j,
        "X": None,
        "exact": str(exact),
        "bound": _fraction_decimal(bound),
        "satisfied": exact >= bound,
    }]


def cmd_report(args) -> list[dict]:
    variant = classes.LAMBDA_VARIANT if args.variant == "lambda" else classes.ENTROPY_VARIANT
    try:
        report = classes.lower_bound_report(args.Y, variant)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return [report.to_json()]


def cmd_verify(args) -> tuple[list[dict], bool]:
    names = args.suite or ["all"]
    if "all" in names:
        names = list(verify.SUITES)
    limits = {}
    if args.max_x is not None:
        limits["max_x"] = args.max_x
    if args.max_len is not None:
        limits["max_len"] = args.max_len
    if args.pairs is not None:
        limits["pairs"] = args.pairs
    if args.conj_len is not None:
        limits["conj_len"] = args.conj_len
    rows = verify.run_suites(names, **limits)
    return [r.to_json() for r in rows], all(r.passed for r in rows)


def build_parser() -> argparse.ArgumentParser:
    # --format is accepted before or after the subcommand; the subparser
    # copy uses SUPPRESS so an absent trailing flag keeps the leading one.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "plain"), default=argparse.SUPPRESS
    )
    parser = argparse.ArgumentParser(
        prog="braidcount",
        description="exact three-strand braid invariants and counting",
    )
    parser.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common],
                       help="canonical form of a braid word")
    p.add_argument("text")

    p = sub.add_parser("syllables", parents=[common],
                       help="syllable decomposition of a word")
    p.add_argument("text")

    p = sub.add_parser("theta", parents=[common],
                       help="pure projection of a braid word")
    p.add_argument("text")

    p = sub.add_parser("bounds", parents=[common],
                       help="invariant bound intervals")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word")
    group.add_argument("--braid")

    p = sub.add_parser("count", parents=[common],
                       help="exact counts with analytic bounds")
    p.add_argument("kind", choices=("tuples", "words", "classes"))
    p.add_argument("--X", type=int)
    p.add_argument("--Y")
    p.add_argument("--j", type=int)
    p.add_argument("--pairs", type=int)
    p.add_argument("--max-len", type=int, dest="max_len")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("report", parents=[common],
                       help="lower-bound report at scale Y")
    p.add_argument("variant", choices=("lambda", "entropy"))
    p.add_argument("--Y", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="run the internal check suites")
    p.add_argument(
        "--suite", action="append", choices=("all",) + tuple(verify.SUITES)
    )
    p.add_argument("--max-x", type=int, dest="max_x")
    p.add_argument("--max-len", type=int, dest="max_len")
    p.add_argument("--pairs", type=int)
    p.add_argument("--conj-len", type=int, dest="conj_len")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            rows, passed = cmd_verify(args)
            _emit(rows, args.format)
            return 0 if passed else 1
        handler = {
            "normalize": cmd_normalize,
            "syllables": cmd_syllables,
            "theta": cmd_theta,
            "bounds": cmd_bounds,
            "count": cmd_count,
            "report": cmd_report,
        }[args.command]
        rows = handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(rows, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
