"""Command-line front door: benchmark runs and reduction verification.

Subcommands
    bench-synthetic   elliptical-stream benchmark over the four methods
    bench-csv         same pipeline over an ingested CSV dataset
    verify-reductions seeded pass/fail checks of the reduction constructions

Exit codes: 0 success, 1 runtime failure (and any verification failure),
2 flag validation. Output files are written atomically (temp + rename).
Every randomized path takes its seed from --seed (default 0), so published
numbers are replayable.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import multiprocessing
import os
import sys
import tempfile

from . import bench
from .errors import DynlsError
from .reductions import VERIFIERS

DEFAULT_EPS_PARAMS = (0.1, 0.2, 0.5, 1.0)
DEFAULT_UNIFORM_PARAMS = (0.05, 0.1, 0.2, 0.5)

_METHOD_NAMES = {m.lower(): m for m in bench.METHODS}


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".dynls-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_methods(parser, raw: str):
    methods = []
    for name in raw.split(","):
        key = name.strip().lower()
        if key not in _METHOD_NAMES:
            parser.error(f"unknown method {name!r}; choose from "
                         f"{sorted(_METHOD_NAMES)}")
        methods.append(_METHOD_NAMES[key])
    return methods


def _parse_floats(parser, raw: str, flag: str):
    try:
        return [float(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        parser.error(f"{flag} expects a comma-separated list of numbers")


def _params_for(method: str, args) -> list:
    if args.params is not None:
        return args.params
    if method == "Kalman":
        return [0.0]
    if method == "Uniform":
        return list(DEFAULT_UNIFORM_PARAMS)
    if args.epsilon is not None:
        return [args.epsilon]
    return list(DEFAULT_EPS_PARAMS)


_WORKER_DATA = None


def _cell(method, param, dataset, seed, init_fraction, repeats):
    a, b = _WORKER_DATA
    return bench.run_experiment(a, b, method, param, dataset=dataset,
                                init_fraction=init_fraction, seed=seed,
                                repeats=repeats)


def _run_cells(a, b, cells, jobs: int):
    global _WORKER_DATA
    _WORKER_DATA = (a, b)
    if jobs <= 1:
        return [_cell(*c) for c in cells]
    ctx = multiprocessing.get_context("fork")
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs,
                                                mp_context=ctx) as pool:
        return list(pool.map(_cell, *zip(*cells)))


def _emit(args, records) -> None:
    text = bench.emit_results(records)
    if args.out:
        _atomic_write(args.out, text)
        print(f"wrote {len(records)} records to {args.out}")
    else:
        sys.stdout.write(text)
    if args.plot_data:
        _atomic_write(args.plot_data, bench.emit_plot_data(records))
    if args.plot:
        from . import plotting

        plotting.render_records(records, args.plot,
                                title=records[0].dataset if records else None)


def _cmd_bench_synthetic(args, parser) -> int:
    if args.adversary == "adaptive":
        records = []
        for offset in range(args.repeats):
            records.append(bench.run_adaptive_experiment(
                d=args.d, steps=args.T, epsilon=args.epsilon or 0.25,
                seed=args.seed + offset, delta=args.delta))
        _emit(args, records)
        return 0
    cfg = bench.EllipticalConfig(T=args.T, d=args.d, seed=args.seed,
                                 heavy_fraction=args.heavy_fraction)
    a, b = bench.elliptical_generate(cfg)
    cells = []
    for method in args.methods:
        for param in _params_for(method, args):
            cells.append((method, param, "synthetic", args.seed,
                          args.init_fraction, args.repeats))
    records = _run_cells(a, b, cells, args.jobs)
    _emit(args, records)
    return 0


def _cmd_bench_csv(args, parser) -> int:
    a, b = bench.ingest_csv(args.csv, label_column=args.label_column)
    dataset = os.path.splitext(os.path.basename(args.csv))[0]
    cells = []
    for method in args.methods:
        for param in _params_for(method, args):
            cells.append((method, param, dataset, args.seed,
                          args.init_fraction, args.repeats))
    records = _run_cells(a, b, cells, args.jobs)
    _emit(args, records)
    return 0


def _cmd_verify(args, parser) -> int:
    names = list(VERIFIERS) if args.construction == "all" else [args.construction]
    dims = args.d_list
    rows = []
    all_pass = True
    for name in names:
        fn = VERIFIERS[name]
        for d in (dims or [None]):
            result = fn(d=d, seed=args.seed) if d is not None else fn(seed=args.seed)
            rows.append(result)
            all_pass &= result.passed
    width = max(len(r.construction) for r in rows)
    print(f"{'construction':<{width + 2}}{'d':>5}  {'metric':>12}  "
          f"{'threshold':>12}  status")
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.construction:<{width + 2}}{r.d:>5}  {r.metric:>12.4e}  "
              f"{r.threshold:>12.4e}  {status}  ({r.detail})")
    return 0 if all_pass else 1


def _add_bench_flags(sub, with_synthetic: bool):
    sub.add_argument("--methods", default="kalman,ours,rowsampling,uniform",
                     help="comma list: kalman, ours, rowsampling, uniform")
    sub.add_argument("--params", default=None,
                     help="comma list of method parameters (epsilon for "
                          "ours/rowsampling, keep-probability for uniform); "
                          "per-method defaults otherwise")
    sub.add_argument("--epsilon", type=float, default=None,
                     help="single accuracy target (overridden by --params)")
    sub.add_argument("--delta", type=float, default=0.1,
                     help="failure budget (default 0.1)")
    sub.add_argument("--seed", type=int, default=0,
                     help="master seed; identical flags + seed replay results "
                          "(default 0)")
    sub.add_argument("--repeats", type=int, default=1,
                     help="timing repeats; the median is reported (default 1)")
    sub.add_argument("--init-fraction", type=float, default=0.1,
                     help="fraction of rows used to initialize (default 0.1)")
    sub.add_argument("--out", default=None, help="results CSV path (stdout if omitted)")
    sub.add_argument("--plot-data", default=None,
                     help="write error-vs-time plot data CSV here")
    sub.add_argument("--plot", default=None,
                     help="render the error-vs-time figure to this image file")
    sub.add_argument("--jobs", type=int, default=1,
                     help="parallel benchmark cells (default 1)")
    if with_synthetic:
        sub.add_argument("--T", type=int, required=True, help="stream length")
        sub.add_argument("--d", type=int, required=True, help="feature dimension")
        sub.add_argument("--heavy-fraction", type=float, default=0.1,
                         help="heavy rows as a fraction of d (default 0.1)")
        sub.add_argument("--adversary", choices=("oblivious", "adaptive"),
                         default="oblivious",
                         help="adaptive runs the scripted residual-aligned "
                              "adversary against the sketched sampler")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynls",
        description="Streaming least-squares benchmarks and reduction verifiers",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    syn = subs.add_parser("bench-synthetic",
                          help="benchmark methods on the elliptical stream")
    _add_bench_flags(syn, with_synthetic=True)

    csvp = subs.add_parser("bench-csv", help="benchmark methods on a CSV dataset")
    _add_bench_flags(csvp, with_synthetic=False)
    csvp.add_argument("--csv", required=True, help="input CSV path")
    csvp.add_argument("--label-column", default="last",
                      help="label column name, or 'last' (default)")

    ver = subs.add_parser("verify-reductions",
                          help="run the reduction construction verifiers")
    ver.add_argument("--construction", required=True,
                     choices=sorted(VERIFIERS) + ["all"])
    ver.add_argument("--d", dest="d_list", default=None,
                     help="comma list of dimensions (per-construction default "
                          "if omitted)")
    ver.add_argument("--seed", type=int, default=0,
                     help="seed for the verification inputs (default 0)")
    return parser


def _validate(args, parser) -> None:
    if getattr(args, "methods", None) is not None and isinstance(args.methods, str):
        args.methods = _parse_methods(parser, args.methods)
    if getattr(args, "params", None) is not None and isinstance(args.params, str):
        args.params = _parse_floats(parser, args.params, "--params")
        for p in args.params:
            if p <= 0:
                parser.error("--params values must be positive")
    if getattr(args, "epsilon", None) is not None and not 0 < args.epsilon <= 1:
        parser.error("--epsilon must lie in (0, 1]")
    if (getattr(args, "adversary", None) == "adaptive"
            and args.epsilon is not None and args.epsilon >= 1):
        parser.error("--epsilon must lie in (0, 1) for the adaptive adversary")
    if getattr(args, "delta", None) is not None and not 0 < args.delta < 1:
        parser.error("--delta must lie in (0, 1)")
    if getattr(args, "repeats", None) is not None and args.repeats < 1:
        parser.error("--repeats must be >= 1")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if getattr(args, "T", None) is not None and args.T < 1:
        parser.error("--T must be >= 1")
    if getattr(args, "d", None) is not None and isinstance(args.d, int) and args.d < 1:
        parser.error("--d must be >= 1")
    if getattr(args, "init_fraction", None) is not None:
        if not 0 < args.init_fraction < 1:
            parser.error("--init-fraction must lie in (0, 1)")
    if getattr(args, "d_list", None) is not None and isinstance(args.d_list, str):
        try:
            args.d_list = [int(x) for x in args.d_list.split(",") if x.strip()]
        except ValueError:
            parser.error("--d expects a comma-separated list of integers")
        for d in args.d_list:
            if d < 2:
                parser.error("--d values must be >= 2")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    handlers = {
        "bench-synthetic": _cmd_bench_synthetic,
        "bench-csv": _cmd_bench_csv,
        "verify-reductions": _cmd_verify,
    }
    try:
        return handlers[args.command](args, parser)
    except (DynlsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
