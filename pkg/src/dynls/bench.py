"""Benchmark harness: synthetic stream generation, CSV ingestion, timed
experiment runs for the four methods, and delimited result emission.

Timing covers the update loop only; data generation, initialization, and the
final error oracle run outside the timed section.
"""
from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .baselines import (
    LeverageRowSampler,
    RecursiveLsq,
    UniformRowSampler,
    leverage_constant,
)
from .errors import InvalidParameter, ParseError
from .linalg import as_matrix, as_vector, normal_equation_solve
from .sampler import ADAPTIVE, OBLIVIOUS, SamplerConfig, SketchedLsqSampler

METHODS = ("Kalman", "Ours", "RowSampling", "Uniform")

CSV_HEADER = "dataset,method,parameter,error_ratio,wall_time_s,rows_sampled,seed"


# ---------------------------------------------------------------------------
# synthetic data


@dataclass(frozen=True)
class EllipticalConfig:
    """Stream model a_t = w_t Sigma z_t with Gaussian z_t and per-row scalar
    w_t; labels b_t = <a_t, x_star> + w_t xi_t.

    A handful of heavy rows (count = round(heavy_fraction * d), scalar
    heavy_scale, default sqrt(T)) is planted uniformly inside the second 10%
    of the stream, which makes leverage profiles non-uniform after a model
    initialized on the first 10% has settled.
    """

    T: int
    d: int
    sigma: np.ndarray | None = None
    heavy_fraction: float = 0.1
    heavy_scale: float | None = None
    x_star: np.ndarray | None = None
    noise_std: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.T < 1 or self.d < 1:
            raise InvalidParameter("T and d must be positive")
        if not 0.0 <= self.heavy_fraction <= 1.0:
            raise InvalidParameter("heavy_fraction must lie in [0, 1]")
        if self.heavy_scale is not None and self.heavy_scale <= 0:
            raise InvalidParameter("heavy_scale must be positive")
        if self.noise_std < 0:
            raise InvalidParameter("noise_std must be nonnegative")
        if self.sigma is not None:
            as_matrix(self.sigma, rows=self.d, cols=self.d, name="sigma")
        if self.x_star is not None:
            as_vector(self.x_star, dim=self.d, name="x_star")


def elliptical_generate(cfg: EllipticalConfig):
    """Returns (A, b) with A of shape (T, d); deterministic given the seed."""
    rng = np.random.Generator(np.random.Philox(cfg.seed))
    if cfg.x_star is not None:
        x_star = np.asarray(cfg.x_star, dtype=np.float64)
    else:
        x_star = rng.normal(size=cfg.d)
        x_star /= np.linalg.norm(x_star)
    n_heavy = round(cfg.heavy_fraction * cfg.d)
    lo, hi = cfg.T // 10, 2 * (cfg.T // 10)
    if n_heavy > max(hi - lo, 0):
        raise InvalidParameter(
            f"{n_heavy} heavy rows do not fit in the [{lo}, {hi}) window"
        )
    weights = np.ones(cfg.T)
    if n_heavy:
        scale = cfg.heavy_scale if cfg.heavy_scale is not None else math.sqrt(cfg.T)
        picks = rng.choice(hi - lo, size=n_heavy, replace=False) + lo
        weights[picks] = scale
    z = rng.normal(size=(cfg.T, cfg.d))
    if cfg.sigma is not None:
        z = z @ np.asarray(cfg.sigma, dtype=np.float64).T
    a = weights[:, None] * z
    xi = rng.normal(size=cfg.T) * cfg.noise_std
    b = a @ x_star + weights * xi
    return a, b


def heavy_row_indices(cfg: EllipticalConfig) -> np.ndarray:
    """The planted heavy-row indices of elliptical_generate for this config."""
    a, _ = elliptical_generate(cfg)
    norms = np.linalg.norm(a, axis=1)
    cut = np.median(norms) * 10
    return np.flatnonzero(norms > cut)


# ---------------------------------------------------------------------------
# CSV ingestion


def _try_float(cell: str):
    try:
        return float(cell)
    except ValueError:
        return None


def ingest_csv(path, label_column: str = "last"):
    """Parse a rectangular numeric CSV into (features, labels).

    A header row is auto-detected when any cell of the first row is
    non-numeric. `label_column` is "last" or a header name. Raises ParseError
    with a 1-based row/column location for malformed cells.
    """
    if hasattr(path, "read"):
        raw = path.read()
    else:
        with open(path, "r", newline="") as fh:
            raw = fh.read()
    rows = [r for r in csv.reader(io.StringIO(raw)) if r]
    if not rows:
        raise ParseError("empty file")
    header = None
    first = [_try_float(c.strip()) for c in rows[0]]
    if any(v is None for v in first):
        header = [c.strip() for c in rows[0]]
        rows = rows[1:]
        if not rows:
            raise ParseError("no data rows after header")
    width = len(rows[0])
    if label_column == "last":
        label_idx = width - 1
    else:
        if header is None:
            raise ParseError(f"label column {label_column!r} needs a header row")
        if label_column not in header:
            raise ParseError(f"label column {label_column!r} not in header {header}")
        label_idx = header.index(label_column)
    data = np.empty((len(rows), width))
    offset = 2 if header is not None else 1
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ParseError(f"row {i + offset}: expected {width} cells, got {len(row)}")
        for j, cell in enumerate(row):
            value = _try_float(cell.strip())
            if value is None:
                raise ParseError(f"row {i + offset}, column {j + 1}: {cell!r} is not numeric")
            data[i, j] = value
    if width < 2:
        raise ParseError("need at least one feature column and one label column")
    features = np.delete(data, label_idx, axis=1)
    labels = data[:, label_idx]
    return features, labels


# ---------------------------------------------------------------------------
# experiment runner


@dataclass(frozen=True)
class BenchRecord:
    dataset: str
    method: str
    parameter: float
    error_ratio: float
    wall_time_s: float
    rows_sampled: int
    seed: int
    trajectory: tuple = field(default=(), compare=False)


def _pad_if_rank_deficient(a_init, b_init):
    """Append sqrt(lam0)-scaled identity rows when the initial block is rank
    deficient, with lam0 = 1e-6 times the mean squared row norm."""
    m = np.hstack([a_init, b_init[:, None]])
    lam0 = 1e-6 * float(np.mean(np.sum(m * m, axis=1)))
    svals = np.linalg.svd(m, compute_uv=False)
    if svals[-1] >= math.sqrt(lam0):
        return a_init, b_init
    dp1 = m.shape[1]
    pad = math.sqrt(lam0) * np.eye(dp1)
    a_pad = np.vstack([a_init, pad[:, :-1]])
    b_pad = np.concatenate([b_init, pad[:, -1]])
    return a_pad, b_pad


def _build_solver(method, a_init, b_init, parameter, seed, horizon, *,
                  mode=OBLIVIOUS, ours_sketch_rows=20):
    d = a_init.shape[1]
    if method == "Kalman":
        return RecursiveLsq(a_init, b_init)
    if method == "Ours":
        m0 = np.hstack([a_init, b_init[:, None]])
        svals = np.linalg.svd(m0, compute_uv=False)
        sig_min = max(float(svals[-1]) * 0.99, 1e-12)
        sig_max = math.sqrt(float(svals[0]) ** 2 + horizon * max(d, 1) * 100.0)
        cfg = SamplerConfig(
            epsilon=min(parameter, 0.999), delta=0.1, horizon=horizon, mode=mode,
            sigma_min=sig_min, sigma_max=max(sig_max, sig_min), seed=seed,
            sampling_constant=leverage_constant(parameter),
            sketch_rows=ours_sketch_rows, compact=True,
        )
        return SketchedLsqSampler.from_block(a_init, b_init, cfg)
    if method == "RowSampling":
        return LeverageRowSampler(a_init, b_init, eps=parameter, seed=seed)
    if method == "Uniform":
        return UniformRowSampler(a_init, b_init, p=parameter, seed=seed)
    raise InvalidParameter(f"unknown method {method!r}; choose from {METHODS}")


def _rows_kept(method, solver, n_streamed):
    if method == "Kalman":
        return solver.n_rows
    if method == "Ours":
        return solver.s
    return solver.kept


def _timed_stream(solver, a_rows, b_vals, eval_points, eval_fn):
    """Insert all rows under the monotonic clock; evaluation at the probe
    points is carved out of the measured time."""
    insert = solver.insert
    trajectory = []
    carved = 0.0
    start = time.perf_counter()
    if eval_points:
        points = set(eval_points)
        for i in range(len(b_vals)):
            insert(a_rows[i], b_vals[i])
            if i + 1 in points:
                pause = time.perf_counter()
                trajectory.append((i + 1, eval_fn(i + 1)))
                carved += time.perf_counter() - pause
    else:
        for i in range(len(b_vals)):
            insert(a_rows[i], b_vals[i])
    elapsed = time.perf_counter() - start - carved
    return elapsed, trajectory


def run_experiment(a, b, method, parameter, *, dataset="data",
                   init_fraction: float = 0.1, seed: int = 0, repeats: int = 1,
                   eval_every: int | None = None,
                   ours_sketch_rows: int = 20) -> BenchRecord:
    """Stream `a`, `b` through one method and measure error ratio and time.

    The model is initialized from the first `init_fraction` of the rows
    (padded with tiny-ridge identity rows if that block is rank deficient),
    the remainder is streamed one row at a time, and the final error ratio is
    ||A x - b|| over the *entire* data against the static normal-equation
    optimum. Wall time is the median of `repeats` runs of the update loop.
    """
    a = as_matrix(a, name="A")
    b = as_vector(b, dim=a.shape[0], name="b")
    n, d = a.shape
    n_init = max(int(n * init_fraction), d + 1)
    if n_init >= n:
        raise InvalidParameter(
            f"need more than {n_init} rows at init_fraction={init_fraction}"
        )
    if repeats < 1:
        raise InvalidParameter("repeats must be >= 1")
    a_init, b_init = _pad_if_rank_deficient(a[:n_init], b[:n_init])
    a_stream = np.ascontiguousarray(a[n_init:])
    b_stream = np.ascontiguousarray(b[n_init:])
    horizon = len(b_stream)
    eval_points = list(range(eval_every, horizon + 1, eval_every)) if eval_every else []

    opt_norm = float(np.linalg.norm(a @ normal_equation_solve(a, b) - b))

    def ratio_from(x):
        err = float(np.linalg.norm(a @ x - b))
        if opt_norm == 0.0:
            return 1.0 if err <= 1e-12 else math.inf
        return err / opt_norm

    times = []
    solver = None
    trajectory = []
    for _ in range(repeats):
        solver = _build_solver(method, a_init, b_init, parameter, seed, horizon,
                               ours_sketch_rows=ours_sketch_rows)
        if eval_points:
            prefix_opt = {}

            def eval_fn(t):
                x_now = (solver.solution() if hasattr(solver, "solution")
                         else solver.current_solution())
                upto = n_init + t
                if t not in prefix_opt:
                    x_opt = normal_equation_solve(a[:upto], b[:upto])
                    prefix_opt[t] = float(np.linalg.norm(a[:upto] @ x_opt - b[:upto]))
                err = float(np.linalg.norm(a[:upto] @ x_now - b[:upto]))
                denom = prefix_opt[t]
                return err / denom if denom > 0 else 1.0
        else:
            eval_fn = None
        elapsed, trajectory = _timed_stream(solver, a_stream, b_stream,
                                            eval_points, eval_fn)
        times.append(elapsed)
    x_final = solver.solution() if hasattr(solver, "solution") else solver.current_solution()
    return BenchRecord(
        dataset=dataset, method=method, parameter=float(parameter),
        error_ratio=ratio_from(x_final), wall_time_s=float(np.median(times)),
        rows_sampled=_rows_kept(method, solver, horizon), seed=seed,
        trajectory=tuple(trajectory),
    )


# ---------------------------------------------------------------------------
# scripted adaptive adversary


def adversarial_stream(state, steps: int, seed: int, *, noise_std: float = 0.1,
                       x_hidden=None):
    """Drive a solver with rows aligned with its current error direction.

    Each step reads the solver's latest output, aims the new row along the
    deviation from a hidden target (plus slight Gaussian exploration so the
    stream stays well conditioned), and labels it consistently with the
    target. Returns the realized (A, b) stream.
    """
    d = state.d
    rng = np.random.Generator(np.random.Philox(seed))
    if x_hidden is None:
        x_hidden = rng.normal(size=d)
        x_hidden /= np.linalg.norm(x_hidden)
    else:
        x_hidden = np.asarray(x_hidden, dtype=np.float64)
    rows = np.empty((steps, d))
    labels = np.empty(steps)
    x_now = state.current_solution() if hasattr(state, "current_solution") else state.solution()
    for t in range(steps):
        err = x_now - x_hidden
        norm = float(np.linalg.norm(err))
        if norm > 1e-12:
            direction = err / norm
        else:
            direction = rng.normal(size=d)
            direction /= np.linalg.norm(direction)
        a = direction + 0.3 * rng.normal(size=d)
        beta = float(a @ x_hidden) + noise_std * float(rng.normal())
        x_now = state.insert(a, beta)
        rows[t] = a
        labels[t] = beta
    return rows, labels


def run_adaptive_experiment(d: int, steps: int, epsilon: float, seed: int, *,
                            delta: float = 0.1, noise_std: float = 0.1,
                            probes: int = 10,
                            sampling_constant: float | None = None) -> BenchRecord:
    """End-to-end adaptive-adversary run of the sketched sampler.

    The structure runs in adaptive mode (the enlarged constant unless
    `sampling_constant` overrides it) while the scripted adversary aims each
    row along the current error direction. error_ratio is the worst ratio of
    ||A x - b|| to the prefix optimum over `probes` evenly spaced checkpoints.
    """
    rng = np.random.default_rng(seed)
    a0 = rng.normal(size=(d + 1, d)) + np.eye(d + 1, d)
    b0 = rng.normal(size=d + 1)
    m0 = np.hstack([a0, b0[:, None]])
    svals = np.linalg.svd(m0, compute_uv=False)
    cfg = SamplerConfig(
        epsilon=epsilon, delta=delta, horizon=steps, mode=ADAPTIVE,
        sigma_min=max(float(svals[-1]) * 0.99, 1e-12),
        sigma_max=math.sqrt(float(svals[0]) ** 2 + steps * 16.0 * d),
        seed=seed, sampling_constant=sampling_constant,
    )
    state = SketchedLsqSampler(a0, b0, cfg)
    adv_rng = np.random.Generator(np.random.Philox(seed + 1))
    x_hidden = adv_rng.normal(size=d)
    x_hidden /= np.linalg.norm(x_hidden)
    a_full = np.empty((d + 1 + steps, d))
    b_full = np.empty(d + 1 + steps)
    a_full[: d + 1] = a0
    b_full[: d + 1] = b0
    probe_set = set(np.linspace(max(steps // probes, 1), steps, probes, dtype=int))
    worst = 0.0
    trajectory = []
    x_now = state.current_solution()
    start = time.perf_counter()
    for t in range(1, steps + 1):
        err_dir = x_now - x_hidden
        norm = float(np.linalg.norm(err_dir))
        if norm > 1e-12:
            direction = err_dir / norm
        else:
            direction = adv_rng.normal(size=d)
            direction /= np.linalg.norm(direction)
        a = direction + 0.3 * adv_rng.normal(size=d)
        beta = float(a @ x_hidden) + noise_std * float(adv_rng.normal())
        x_now = state.insert(a, beta)
        row = d + t
        a_full[row] = a
        b_full[row] = beta
        if t in probe_set:
            prefix_a = a_full[: row + 1]
            prefix_b = b_full[: row + 1]
            x_opt = normal_equation_solve(prefix_a, prefix_b)
            opt = float(np.linalg.norm(prefix_a @ x_opt - prefix_b))
            err = float(np.linalg.norm(prefix_a @ x_now - prefix_b))
            ratio = err / opt if opt > 0 else 1.0
            trajectory.append((t, ratio))
            worst = max(worst, ratio)
    elapsed = time.perf_counter() - start
    return BenchRecord(
        dataset="adaptive", method="Ours", parameter=float(epsilon),
        error_ratio=worst, wall_time_s=elapsed, rows_sampled=state.s, seed=seed,
        trajectory=tuple(trajectory),
    )


# ---------------------------------------------------------------------------
# result emission


def emit_results(records) -> str:
    """Deterministic CSV: sorted by (dataset, method, parameter, seed), reals
    at 6 significant digits."""
    records = list(records)
    if not records:
        raise InvalidParameter("no records to emit")
    records.sort(key=lambda r: (r.dataset, r.method, r.parameter, r.seed))
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.dataset},{r.method},{r.parameter:.6g},{r.error_ratio:.6g},"
            f"{r.wall_time_s:.6g},{r.rows_sampled},{r.seed}"
        )
    return "\n".join(lines) + "\n"


def parse_results(text: str):
    """Inverse of emit_results (up to formatting precision)."""
    lines = [ln for ln in text.strip().splitlines() if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ParseError("missing results header")
    out = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 7:
            raise ParseError(f"bad record line: {ln!r}")
        out.append(BenchRecord(
            dataset=parts[0], method=parts[1], parameter=float(parts[2]),
            error_ratio=float(parts[3]), wall_time_s=float(parts[4]),
            rows_sampled=int(parts[5]), seed=int(parts[6]),
        ))
    return out


def emit_plot_data(records) -> str:
    """Second CSV carrying the error-versus-time axes (x = wall_time_s,
    y = error_ratio - 1)."""
    records = sorted(records, key=lambda r: (r.dataset, r.method, r.parameter, r.seed))
    lines = ["dataset,method,parameter,wall_time_s,rel_error"]
    for r in records:
        lines.append(
            f"{r.dataset},{r.method},{r.parameter:.6g},{r.wall_time_s:.6g},"
            f"{max(r.error_ratio - 1.0, 0.0):.6g}"
        )
    return "\n".join(lines) + "\n"
