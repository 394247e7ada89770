"""Command-line interface.

Usage::

    pellquartic generate --max-index 10 --eps +1
    pellquartic solve "x^2 = 2y^4 - 1" --max-index 1000
    pellquartic solve "x^2 = 5y^4 + 1" --v-bound 1000 --allow-zero --format json
    pellquartic check --max-index 200
    pellquartic bench --max-index 100000 --repetitions 3

Exit codes: 0 success, 1 a check or verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import shutil
import statistics
import sys
import time
from typing import Callable, Iterable, List, Optional

from . import __version__, pell_core
from .eqparse import EquationParseError, parse_equation, unparse
from .general_pell import DEFAULT_FAMILY_COUNT, DEFAULT_V_BOUND, solve_general
from .pell_core import CheckResult
from .power_filter import search_quartic

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_ELIDE_MIN = 24


def record(kind: str, **payload) -> dict:
    return {"kind": kind, "payload": {k: _render_value(v) for k, v in payload.items()}}


def _render_value(v):
    # ints exceed 64 bits quickly, so they always travel as decimal strings
    if isinstance(v, bool) or v is None or isinstance(v, float):
        return v
    if isinstance(v, int):
        return str(v)
    return v


# rendering


def render_json(meta: dict, records: List[dict]) -> str:
    return json.dumps({"meta": meta, "records": records}, sort_keys=True, indent=2) + "\n"


def _columns(records: List[dict]) -> List[str]:
    cols: List[str] = []
    for r in records:
        for key in r["payload"]:
            if key not in cols:
                cols.append(key)
    return cols


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def render_csv(records: List[dict]) -> str:
    cols = _columns(records)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["kind"] + cols)
    for r in records:
        writer.writerow([r["kind"]] + [_cell(r["payload"].get(c)) for c in cols])
    return buf.getvalue()


def elide(text: str, keep: int = 8) -> str:
    if len(text) < _ELIDE_MIN:
        return text
    digits = len(text.lstrip("-"))
    return f"{text[:keep]}…({digits} digits)…{text[-keep:]}"


def _is_integer_text(s: str) -> bool:
    return s.lstrip("-").isdigit()


def render_table(meta: dict, records: List[dict], width: Optional[int] = None) -> str:
    if width is None:
        width = shutil.get_terminal_size((120, 24)).columns
    cols = _columns(records)
    rows = [[_cell(r["payload"].get(c)) for c in cols] for r in records]
    sep = "  "
    if any(len(sep.join(row)) > width for row in rows):
        rows = [[elide(c) if _is_integer_text(c) else c for c in row] for row in rows]
    widths = [max([len(c)] + [len(row[i]) for row in rows]) for i, c in enumerate(cols)]
    lines = []
    for note in _meta_notes(meta):
        lines.append(f"# {note}")
    if cols:
        lines.append(sep.join(c.rjust(w) for c, w in zip(cols, widths)).rstrip())
        lines.append(sep.join("-" * w for w in widths))
    for row in rows:
        lines.append(sep.join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
    if not records:
        lines.append("(no records)")
    return "\n".join(lines) + "\n"


def _meta_notes(meta: dict) -> Iterable[str]:
    yield f"{meta['command']} (pellquartic {meta['version']})"
    if "equation" in meta:
        yield f"equation: {meta['equation']}"
    bounds = meta.get("bounds") or {}
    if bounds:
        yield "bounds: " + ", ".join(f"{k}={v}" for k, v in bounds.items())
    if "note" in meta:
        yield meta["note"]


def emit(fmt: str, meta: dict, records: List[dict], out) -> None:
    if fmt == "json":
        out.write(render_json(meta, records))
    elif fmt == "csv":
        out.write(render_csv(records))
    else:
        out.write(render_table(meta, records))


def _meta(command: str, **bounds) -> dict:
    return {"command": command, "bounds": {k: _render_value(v) for k, v in bounds.items()}, "version": __version__}


def _eps_values(choice: str) -> List[int]:
    return {"+1": [1], "-1": [-1], "both": [1, -1]}[choice]


# commands


def cmd_generate(args, out) -> int:
    records = []
    failures = 0
    for eps in _eps_values(args.eps):
        reference = pell_core.iter_pairs(eps) if args.verify else None
        for n in range(args.max_index + 1):
            p = pell_core.solution_at(n, eps)
            fields = dict(n=n, eps=eps, x=p.x, t=p.t)
            if reference is not None:
                ok = next(reference).pair == p.pair
                failures += not ok
                fields["verified"] = ok
            records.append(record("pell_pair", **fields))
    emit(args.format, _meta("generate", max_index=args.max_index, eps=args.eps), records, out)
    return EXIT_FAILED if failures else EXIT_OK


def cmd_solve(args, out) -> int:
    try:
        spec = parse_equation(args.equation)
    except EquationParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"  {args.equation}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_USAGE
    prefilter = args.prefilter == "on"
    if spec.is_title_equation():
        sols = search_quartic(args.max_index, prefilter=prefilter)
        records = [record("quartic_solution", x=s.x, y=s.y, n=s.n, eps=s.eps) for s in sols]
        meta = _meta("solve", max_index=args.max_index)
    else:
        pairs = solve_general(
            spec,
            v_bound=args.v_bound,
            family_count=args.family_steps,
            allow_zero=args.allow_zero,
            prefilter=prefilter,
        )
        records = [record("general_solution", X=X, Y=Y) for X, Y in pairs]
        meta = _meta("solve", v_bound=args.v_bound, family_steps=args.family_steps)
    meta["equation"] = unparse(spec)
    meta["note"] = "solutions found within bounds"
    emit(args.format, meta, records, out)
    return EXIT_OK


def _first_mismatch(max_n: int, eps: int) -> Optional[tuple[int, str]]:
    for p in pell_core.generate(eps, max_n):
        n = p.n
        if pell_core.solution_at(n, eps).pair != p.pair:
            return n, "recurrence != matrix power"
        if pell_core.closed_form(n, eps).pair != p.pair:
            return n, "recurrence != closed form"
        if pell_core.binomial_t(n, eps) != p.t:
            return n, "recurrence t != binomial sum"
    return None


def _first_invariant_failure(max_n: int, eps: int) -> Optional[int]:
    for p in pell_core.generate(eps, max_n):
        if not (p.satisfies() and pell_core.solution_at(p.n, eps).satisfies()):
            return p.n
    return None


def run_checks(max_n: int) -> List[CheckResult]:
    """Eigen-decomposition checks plus agreement and invariant checks for indices ``0..max_n``."""
    results = list(pell_core.eigen_check())
    for eps in (1, -1):
        miss = _first_mismatch(max_n, eps)
        detail = f"n <= {max_n}" if miss is None else f"first failing index {miss[0]}: {miss[1]}"
        results.append(CheckResult(f"four_way_agreement_eps{eps:+d}", miss is None, detail))
        bad = _first_invariant_failure(max_n, eps)
        detail = f"n <= {max_n}" if bad is None else f"first failing index {bad}"
        results.append(CheckResult(f"pell_invariant_eps{eps:+d}", bad is None, detail))
    return results


def cmd_check(args, out) -> int:
    results = run_checks(args.max_index)
    records = [record("check_report", check=r.name, passed=r.passed, detail=r.detail) for r in results]
    emit(args.format, _meta("check", max_index=args.max_index), records, out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def _by_recurrence(n: int) -> tuple[int, int]:
    x, t = 1, 1
    for _ in range(n):
        x, t = 3 * x + 4 * t, 2 * x + 3 * t
    return x, t


BENCH_METHODS: dict[str, Callable[[int], tuple]] = {
    "recurrence": _by_recurrence,
    "matrix_power": lambda n: pell_core.solution_at(n, 1).pair,
    "closed_form": lambda n: pell_core.closed_form(n, 1).pair,
}


def ladder(max_n: int) -> List[int]:
    rungs = []
    n = 1
    while n < max_n:
        rungs.append(n)
        n *= 10
    rungs.append(max(max_n, 0))
    return rungs


def _time(fn: Callable[[int], tuple], n: int, repetitions: int) -> tuple[tuple, List[float]]:
    result = fn(n)  # warm-up, discarded from the timings
    samples = []
    for _ in range(repetitions):
        t0 = time.perf_counter()
        fn(n)
        samples.append(time.perf_counter() - t0)
    return result, samples


def cmd_bench(args, out) -> int:
    records = []
    ok = True
    for n in ladder(args.max_index):
        outputs = {}
        for name, fn in BENCH_METHODS.items():
            outputs[name], samples = _time(fn, n, args.repetitions)
            records.append(
                record(
                    "bench_sample",
                    n=n,
                    method=name,
                    repetitions=args.repetitions,
                    min_s=min(samples),
                    median_s=statistics.median(samples),
                )
            )
        if len(set(outputs.values())) != 1:
            ok = False
            print(f"error: methods disagree at n={n}", file=sys.stderr)
            break
    emit(args.format, _meta("bench", max_index=args.max_index, repetitions=args.repetitions), records, out)
    return EXIT_OK if ok else EXIT_FAILED


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _pos_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pellquartic", description="Exact solver toolkit for x^2 = 2y^4 - 1 and C*x^(2a) = D*y^(2b) + E."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-index", type=_nonneg_int, default=64)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="list Pell pairs (x_n, t_n)")
    p.add_argument("--eps", choices=("+1", "-1", "both"), default="both")
    p.add_argument("--verify", action="store_true", help="cross-check each pair against the recurrence")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("solve", parents=[common], help="solve an equation C*x^(2a) = D*y^(2b) + E")
    p.add_argument("equation")
    p.add_argument("--allow-zero", action="store_true")
    p.add_argument("--v-bound", type=_pos_int, default=DEFAULT_V_BOUND)
    p.add_argument("--family-steps", type=_nonneg_int, default=DEFAULT_FAMILY_COUNT)
    p.add_argument("--prefilter", choices=("on", "off"), default="off")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", parents=[common], help="verify the identities up to --max-index")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", parents=[common], help="time recurrence, matrix power and closed form")
    p.add_argument("--repetitions", type=_pos_int, default=3)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out if out is not None else sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
