"""Random-projection sketches for fast squared-norm estimation.

A sketch is a k x n matrix with scaled Rademacher entries (+-1/sqrt(k)).
For a fixed collection of m vectors, a fresh sketch preserves each squared
norm to relative accuracy governed by k = ceil(c * eps^-2 * ln(m / delta)),
optionally capped for desk-scale runs where generation speed matters more
than the worst-case constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidParameter

DEFAULT_C = 8.0
DEFAULT_MAX_ROWS = 64


def sketch_rows(m: int, eps: float, delta: float, *, c: float = DEFAULT_C,
                max_rows: int | None = DEFAULT_MAX_ROWS) -> int:
    """Row count k = ceil(c * eps^-2 * ln(m/delta)), capped at max_rows."""
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    if not 0.0 < eps < 1.0:
        raise InvalidParameter(f"eps must lie in (0, 1), got {eps}")
    if not 0.0 < delta < 1.0:
        raise InvalidParameter(f"delta must lie in (0, 1), got {delta}")
    k = math.ceil(c / (eps * eps) * math.log(m / delta))
    k = max(k, 1)
    if max_rows is not None:
        k = min(k, int(max_rows))
    return k


@dataclass(frozen=True)
class JlSketch:
    """Immutable random projection with its replay seed and parameters."""

    entries: np.ndarray  # (k, n), entries +-1/sqrt(k)
    seed: int
    eps: float
    m: int
    delta: float

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        return self.entries.shape[1]


def _entries_from_seed(seed: int, k: int, n: int) -> np.ndarray:
    gen = np.random.Generator(np.random.Philox(seed))
    signs = gen.integers(0, 2, size=(k, n)).astype(np.float64)
    signs *= 2.0
    signs -= 1.0
    signs /= math.sqrt(k)
    return signs


def jl_generate(n: int, m: int, eps: float, delta: float, rng,
                *, c: float = DEFAULT_C, max_rows: int | None = DEFAULT_MAX_ROWS,
                rows: int | None = None) -> JlSketch:
    """Draw a fresh sketch for n-dimensional inputs.

    ``rng`` is either an integer seed or a numpy Generator; in the latter
    case a 63-bit replay seed is drawn from it and recorded on the sketch.
    ``rows`` overrides the formula-derived k (used by experiment configs that
    pin k directly).
    """
    if n < 1:
        raise InvalidParameter(f"n must be >= 1, got {n}")
    if rows is not None:
        if rows < 1:
            raise InvalidParameter(f"rows must be >= 1, got {rows}")
        k = int(rows)
        # Still validate the nominal parameters so they are meaningful on replay.
        if m < 1 or not 0.0 < eps < 1.0 or not 0.0 < delta < 1.0:
            raise InvalidParameter("m, eps, delta out of range")
    else:
        k = sketch_rows(m, eps, delta, c=c, max_rows=max_rows)
    if isinstance(rng, (int, np.integer)):
        seed = int(rng)
    else:
        seed = int(rng.integers(0, 2**63))
    return JlSketch(entries=_entries_from_seed(seed, k, n), seed=seed,
                    eps=float(eps), m=int(m), delta=float(delta))


def jl_apply(sketch: JlSketch, b) -> np.ndarray:
    """Exact product sketch.entries @ B for an n x d matrix B."""
    b = np.asarray(b, dtype=np.float64)
    if b.ndim != 2 or b.shape[0] != sketch.n:
        raise DimensionMismatch(
            f"B must be {sketch.n} x d, got shape {b.shape}"
        )
    return sketch.entries @ b
