"""Command-line front end.

Subcommands: ``calc``, ``table``, ``sweep``, ``roots``, ``simulate``.
Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
2 usage or argument error, 3 unstable queue (``a >= m``).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Iterable, Sequence

import numpy as np

from . import erlang, morphing, polyroots, simulator
from .erlang import InvalidArgumentError, QueueSpec, UnstableQueueError

EXIT_USAGE = 2
EXIT_UNSTABLE = 3

RECORD_KEYS = ("m", "a", "rho", "b", "c", "phi_b", "w", "r", "r_morph", "rel_error", "bound")
SWEEP_KEYS = RECORD_KEYS + ("rho_loss", "rho_delay")
ROOT_KEYS = ("kind", "m", "re", "im")
TABLE_KEYS = ("m", "a", "b", "poisson", "phi_b", "c", "w", "r", "r_morph")
SIM_KEYS = ("m", "a", "s", "discipline", "reps", "n", "seed", "mean_w", "mean_r", "loss_frac",
            "ci_half_width", "loss_se", "utilization", "reference", "within_ci")

TABLE3_ROWS = (1, 2, 3, 4, 8, 16, 32)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(value, precision: int | None):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return repr(value) if precision is None else f"{value:.{precision}g}"
    return str(value)


def _json_value(value, precision: int | None):
    if isinstance(value, float):
        if math.isnan(value):
            return None
        return value if precision is None else float(f"{value:.{precision}g}")
    return value


def emit(records: Iterable[dict], keys: Sequence[str], fmt: str, precision: int | None,
         out=None) -> None:
    """Write records as csv (header + rows), json (one object per line) or text."""
    out = out or sys.stdout
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(keys)
        for rec in records:
            writer.writerow([_fmt(rec.get(k, math.nan), precision) for k in keys])
    elif fmt == "json":
        for rec in records:
            obj = {k: _json_value(rec.get(k, math.nan), precision) for k in keys}
            out.write(json.dumps(obj) + "\n")
    else:
        first = True
        for rec in records:
            if not first:
                out.write("\n")
            first = False
            width = max(len(k) for k in keys)
            for k in keys:
                out.write(f"{k:<{width}}  {_fmt(rec.get(k, math.nan), precision)}\n")


def point_record(m: int, a: float, s: float = 1.0) -> dict:
    """Exact and morphing metrics at one stable operating point."""
    spec = QueueSpec.from_traffic(m, a, s)
    ex = erlang.metrics(spec)
    mm = morphing.morph_metrics(m, spec.rho, s)
    return {
        "m": m, "a": spec.a, "rho": spec.rho, "b": ex.b, "c": ex.c, "phi_b": ex.phi_b,
        "w": ex.w, "r": ex.r, "r_morph": mm.r_morph, "rel_error": mm.rel_error, "bound": mm.bound,
    }


def sweep_record(m: int, a: float, s: float = 1.0) -> dict:
    """Loss quantities everywhere, delay quantities only where ``a < m``."""
    rec = {"m": m, "a": a, "b": erlang.erlang_b(m, a), "rho_loss": erlang.utilization_loss(m, a)}
    if a < m:
        rec.update(point_record(m, a, s))
        rec["rho_delay"] = a / m
    return rec


def table_records() -> list[dict]:
    rows = []
    for m in TABLE3_ROWS:
        a = 0.75 * m
        spec = QueueSpec.from_traffic(m, a)
        rows.append({
            "m": m, "a": a,
            "b": erlang.erlang_b_recurrence(m, a),
            "poisson": erlang.erlang_b_poisson(m, a),
            "phi_b": erlang.phi_b(m, a),
            "c": erlang.erlang_c(m, a),
            "w": erlang.waiting_time(spec),
            "r": erlang.residence_time(spec),
            "r_morph": morphing.morphing_residence(m, spec.rho),
        })
    return rows


def format_table(rows: Iterable[dict]) -> str:
    """Fixed-layout text table: probabilities and W to 8 decimals, R to 6."""
    head = f"{'m':>3} {'a':>6} {'B(m,a)':>11} {'Poisson':>11} {'Phi_B':>11} {'C(m,a)':>11} {'W_m':>11} {'R_m':>9} {'R_m(phi)':>9}"
    lines = [head]
    for r in rows:
        lines.append(
            f"{r['m']:>3d} {r['a']:>6.2f} {r['b']:>11.8f} {r['poisson']:>11.8f} {r['phi_b']:>11.8f}"
            f" {r['c']:>11.8f} {r['w']:>11.8f} {r['r']:>9.6f} {r['r_morph']:>9.6f}"
        )
    return "\n".join(lines) + "\n"


def root_records(m_max: int, include_szego: bool, n_points: int) -> list[dict]:
    rows = []
    for m in range(1, m_max + 1):
        for z in polyroots.morphing_roots(m).roots:
            rows.append({"kind": "morphing", "m": m, "re": float(z.real), "im": float(z.imag)})
    for m in range(1, m_max + 1):
        for z in polyroots.corrected_roots(m).roots:
            rows.append({"kind": "corrected", "m": m, "re": float(z.real), "im": float(z.imag)})
    if include_szego:
        for z in polyroots.szego_curve(n_points).points:
            rows.append({"kind": "szego", "m": "", "re": float(z.real), "im": float(z.imag)})
    return rows


def simulate_record(m: int, a: float, s: float, discipline: str, n: int, reps: int,
                    seed: int, warmup: int | None = None) -> dict:
    spec = QueueSpec.from_traffic(m, a, s)
    est = simulator.simulate(simulator.SimConfig(spec, discipline, n, reps, warmup, seed))
    if discipline == "fifo":
        ref = erlang.waiting_time(spec)
        ok = abs(est.mean_w - ref) <= est.ci_half_width
    else:
        ref = erlang.erlang_b(m, a)
        ok = abs(est.loss_frac - ref) <= 3 * est.loss_se
    return {
        "m": m, "a": spec.a, "s": s, "discipline": discipline, "reps": est.reps, "n": n,
        "seed": seed, "mean_w": est.mean_w, "mean_r": est.mean_r, "loss_frac": est.loss_frac,
        "ci_half_width": est.ci_half_width, "loss_se": est.loss_se,
        "utilization": est.utilization, "reference": ref, "within_ci": bool(ok),
    }


def _traffic(args) -> float:
    if (args.a is None) == (args.lam is None):
        raise InvalidArgumentError("give exactly one of -a/--traffic or -l/--lambda")
    return args.a if args.a is not None else args.lam * args.s


def _add_common(p: argparse.ArgumentParser, default_format: str = "text") -> None:
    p.add_argument("--format", choices=("csv", "json", "text"), default=default_format)
    p.add_argument("--precision", type=int, default=8,
                   help="significant digits (default 8); 17 gives full double precision")


def _add_point(p: argparse.ArgumentParser) -> None:
    p.add_argument("-m", type=int, required=True, help="number of servers")
    p.add_argument("-a", "--traffic", dest="a", type=float, help="traffic intensity in erlangs")
    p.add_argument("-l", "--lambda", dest="lam", type=float, help="arrival rate")
    p.add_argument("-s", type=float, default=1.0, help="mean service time (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="erlangkit", description="Exact and approximate M/M/m metrics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("calc", help="metrics at one operating point")
    _add_point(p)
    _add_common(p)

    p = sub.add_parser("table", help="reference table of example metrics with S=1")
    _add_common(p)

    p = sub.add_parser("sweep", help="Erlang B/C and utilization curves over a traffic range")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--a-min", type=float, default=0.0)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=50)
    p.add_argument("-s", type=float, default=1.0)
    p.add_argument("--curves", default=None,
                   help="comma-separated subset of columns after m,a (default: all)")
    _add_common(p, "csv")

    p = sub.add_parser("roots", help="zeros of the morphing and corrected denominators")
    p.add_argument("--m-max", type=int, default=morphing.MAX_CORRECTION_ORDER)
    p.add_argument("--szego", action="store_true", help="append Szego curve samples")
    p.add_argument("--szego-points", type=int, default=256)
    _add_common(p, "csv")

    p = sub.add_parser("simulate", help="discrete-event simulation against the analytic value")
    _add_point(p)
    p.add_argument("--discipline", choices=simulator.DISCIPLINES, default="fifo")
    p.add_argument("-n", type=int, default=100_000, help="customers per replication")
    p.add_argument("--reps", type=int, default=10)
    p.add_argument("--warmup", type=int, default=None)
    p.add_argument("--seed", type=int, default=20170101)
    _add_common(p)
    return parser


def _run(args, parser) -> int:
    prec = args.precision
    if prec is not None and not 1 <= prec <= 17:
        parser.error("--precision must be between 1 and 17")

    if args.command == "calc":
        rec = point_record(args.m, _traffic(args), args.s)
        emit([rec], RECORD_KEYS, args.format, prec)

    elif args.command == "table":
        rows = table_records()
        if args.format == "text":
            sys.stdout.write(format_table(rows))
        else:
            emit(rows, TABLE_KEYS, args.format, prec)

    elif args.command == "sweep":
        if not (0 <= args.a_min < args.a_max) or args.steps < 1:
            parser.error("need 0 <= a-min < a-max and steps >= 1")
        keys = SWEEP_KEYS
        if args.curves:
            wanted = [c.strip() for c in args.curves.split(",") if c.strip()]
            bad = [c for c in wanted if c not in SWEEP_KEYS]
            if bad:
                parser.error(f"unknown curves: {','.join(bad)}")
            keys = ("m", "a") + tuple(c for c in wanted if c not in ("m", "a"))
        grid = np.linspace(args.a_min, args.a_max, args.steps + 1)
        emit((sweep_record(args.m, float(a), args.s) for a in grid), keys, args.format, prec)

    elif args.command == "roots":
        if args.m_max < 1:
            parser.error("--m-max must be >= 1")
        if args.m_max > morphing.MAX_CORRECTION_ORDER:
            parser.error(f"--m-max {args.m_max} exceeds the tabulated correction polynomials "
                         f"(m <= {morphing.MAX_CORRECTION_ORDER})")
        rows = root_records(args.m_max, args.szego, args.szego_points)
        emit(rows, ROOT_KEYS, args.format, prec)

    elif args.command == "simulate":
        rec = simulate_record(args.m, _traffic(args), args.s, args.discipline, args.n,
                              args.reps, args.seed, args.warmup)
        emit([rec], SIM_KEYS, args.format, prec)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, parser)
    except UnstableQueueError as exc:
        print(f"erlangkit: {exc}", file=sys.stderr)
        return EXIT_UNSTABLE
    except (InvalidArgumentError, morphing.DeflationDomainError) as exc:
        print(f"erlangkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
