"""Comparison methods: exact recursive least squares (insert and delete),
uniform row sampling, and exact-leverage-score row sampling.

All three maintain their solution incrementally through rank-1 inverse
updates, so timing comparisons against the sketched sampler measure the
sampling policy rather than the update mechanics. Same single-writer
contract as the sampler: serialize mutations per instance.
"""
from __future__ import annotations

import numpy as np

from .errors import InvalidParameter, SingularAfterDelete
from .linalg import as_matrix, as_vector, spd_inverse, symmetrize


class RecursiveLsq:
    """Exact fully-dynamic least squares via rank-1 inverse maintenance.

    Keeps H = (A^T A)^{-1} and u = A^T b; the exact minimizer is x = H u.
    Raw rows are retained solely to support deletion by index.
    """

    def __init__(self, a0, b0):
        a0 = as_matrix(a0, name="A0")
        n0, d = a0.shape
        if n0 < d:
            raise InvalidParameter("initial block needs at least d rows")
        b0 = as_vector(b0, dim=n0, name="b0")
        self._d = d
        self._h = spd_inverse(a0.T @ a0)
        self._u = a0.T @ b0
        self._rows = [(a0[i].copy(), float(b0[i])) for i in range(n0)]

    @property
    def d(self) -> int:
        return self._d

    @property
    def n_rows(self) -> int:
        return len(self._rows)

    @property
    def inverse_gram(self) -> np.ndarray:
        return self._h.copy()

    def solution(self) -> np.ndarray:
        return self._h @ self._u

    def insert(self, a, beta: float) -> np.ndarray:
        a = np.asarray(a, dtype=np.float64)
        ha = self._h @ a
        denom = 1.0 + float(a @ ha)
        self._h = symmetrize(self._h - np.outer(ha, ha / denom))
        self._u += beta * a
        self._rows.append((a.copy(), float(beta)))
        return self._h @ self._u

    def delete(self, index: int) -> np.ndarray:
        """Remove the row at `index` (0-based, current ordering)."""
        a, beta = self._rows[index]
        ha = self._h @ a
        denom = 1.0 - float(a @ ha)
        if denom <= 1e-10:
            raise SingularAfterDelete(
                f"removing row {index} leaves a singular Gram (1 - a^T H a = {denom:.3e})"
            )
        self._h = symmetrize(self._h + np.outer(ha, ha / denom))
        self._u -= beta * a
        del self._rows[index]
        return self._h @ self._u


class _SampledSolver:
    """Shared state for the two row-sampling baselines: weighted kept rows,
    the inverted kept A-Gram, and the maintained solution."""

    def __init__(self, a0, b0, seed: int):
        a0 = as_matrix(a0, name="A0")
        n0, d = a0.shape
        b0 = as_vector(b0, dim=n0, name="b0")
        self._d = d
        gram = a0.T @ a0
        self._g = spd_inverse(gram)
        self._u = a0.T @ b0
        self._x = self._g @ self._u
        self._kept = n0
        # Child 0 mirrors the sketched sampler's stream layout so that runs
        # with identical seeds share keep/reject draws.
        kids = np.random.SeedSequence(seed).spawn(2)
        self._rng = np.random.Generator(np.random.Philox(kids[0]))

    @property
    def d(self) -> int:
        return self._d

    @property
    def kept(self) -> int:
        """Kept row count, initial block included."""
        return self._kept

    def solution(self) -> np.ndarray:
        return self._x.copy()

    def _keep(self, a: np.ndarray, beta: float, p: float) -> None:
        ga = self._g @ a
        denom = 1.0 + float(a @ ga) / p
        self._g = symmetrize(self._g - np.outer(ga, ga / (p * denom)))
        self._u += (beta / p) * a
        self._x = self._g @ self._u
        self._kept += 1


class UniformRowSampler(_SampledSolver):
    """Keeps each incoming row with a fixed probability p, weight 1/sqrt(p)."""

    def __init__(self, a0, b0, p: float, seed: int = 0):
        if not 0.0 < p <= 1.0:
            raise InvalidParameter(f"p must lie in (0, 1], got {p}")
        super().__init__(a0, b0, seed)
        self.p = float(p)

    def insert(self, a, beta: float) -> np.ndarray:
        a = np.asarray(a, dtype=np.float64)
        if self._rng.random() < self.p:
            self._keep(a, beta, self.p)
        return self._x


def leverage_constant(eps: float) -> float:
    """Sampling factor p = min(C tau, 1) with C = eps^-2 / 2 (C = 1 at eps = 1,
    where the halved factor would make the policy trivial)."""
    if not 0.0 < eps <= 1.0:
        raise InvalidParameter(f"eps must lie in (0, 1], got {eps}")
    if eps == 1.0:
        return 1.0
    return 0.5 / (eps * eps)


class LeverageRowSampler(_SampledSolver):
    """Samples rows by their exact leverage score against the kept Gram.

    The score of [a, beta] is m^T H m with H the inverse Gram of the kept
    (weighted) rows of [A, b] - the quantity the sketched sampler estimates.
    With use_full_gram=True the score is taken against the full-stream Gram
    instead (ablation; costs a rank-1 update on every insert).
    """

    def __init__(self, a0, b0, eps: float, seed: int = 0, *,
                 use_full_gram: bool = False, oversample: float = 1.0):
        if oversample <= 0:
            raise InvalidParameter("oversample must be positive")
        super().__init__(a0, b0, seed)
        self.eps = float(eps)
        self._c = leverage_constant(eps) * float(oversample)
        self._full = bool(use_full_gram)
        m0 = np.hstack([as_matrix(a0), as_vector(b0)[:, None]])
        self._h = spd_inverse(m0.T @ m0)

    def score(self, m) -> float:
        m = np.asarray(m, dtype=np.float64)
        return float(m @ (self._h @ m))

    def insert(self, a, beta: float) -> np.ndarray:
        a = np.asarray(a, dtype=np.float64)
        m = np.empty(self._d + 1)
        m[: self._d] = a
        m[self._d] = beta
        tau = self.score(m)
        p = min(self._c * tau, 1.0)
        u = self._rng.random()
        kept = p > 0.0 and u < p
        if kept:
            self._keep(a, beta, p)
        if self._full or kept:
            # Kept-set policy folds the weighted row into H; the ablation
            # folds every row in at weight 1 instead.
            w = 1.0 if self._full else 1.0 / p
            hm = self._h @ m
            denom = 1.0 + float(m @ hm) * w
            self._h = symmetrize(self._h - np.outer(hm, hm * (w / denom)))
        return self._x
