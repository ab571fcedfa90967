"""Streaming least-squares sketch with leverage-score row sampling.

Maintains an approximate solution to min_x ||A x - b||_2 under row
insertions. Each incoming row [a, beta] is kept with probability
proportional to an estimate of its online leverage score; the estimate is
computed from a random projection of the matrix B = N H, where N holds the
kept (rescaled) rows and H = (N^T N)^{-1}. Kept rows trigger rank-1
(Sherman-Morrison) updates of every maintained member and a fresh
projection; rejected rows cost only a k x (d+1) mat-vec.

Maintained members (with M the full stream and D the diagonal of weights):
    N  = kept rows of D M            s x (d+1)
    H  = (N^T N)^{-1}                (d+1) x (d+1)
    B  = N H                         s x (d+1)
    Bt = J B  (projection J)         k x (d+1)
    G  = (A^T D^2 A)^{-1}            d x d
    u  = A^T D^2 b                   d
    x  = G u                         d

One instance is single-writer: insertions must be externally serialized.
Distinct instances are independent.
"""
from __future__ import annotations

import io
import math
import struct
from dataclasses import dataclass

import numpy as np

from . import sketch as _sketch
from .errors import (
    HorizonExceeded,
    InvalidParameter,
    RankDeficientInit,
    SingularGram,
)
from .linalg import (
    _chol_with_jitter,
    as_matrix,
    as_vector,
    gram_rcond,
    spd_inverse,
    spd_solve,
    symmetrize,
)

OBLIVIOUS = "oblivious"
ADAPTIVE = "adaptive"

_MAGIC = b"DLSR1"
_FORMAT_VERSION = 1


@dataclass(frozen=True)
class SamplerConfig:
    """Stream parameters and sampling policy.

    epsilon, delta: target accuracy and failure budget. The update-time and
        row-count guarantees are stated for epsilon, delta < 1/8, but any
        value in (0, 1) is accepted (benchmarks sweep epsilon up to 1).
    horizon: total number of insertions the structure will accept (T).
    mode: "oblivious" or "adaptive"; selects the sampling constant.
    sigma_min, sigma_max: lower bound on the least singular value of the
        initial block and upper bound on the largest singular value of the
        final stream matrix [A, b]; only the adaptive constant reads them.
    seed: master seed; one substream drives the keep/reject draws, another
        the projection refreshes.
    recompute_interval: if set, rebuild H, B, G, u, x from N from scratch
        every that-many kept rows to bound rank-1 drift.
    sampling_constant: explicit override for the factor C in
        p = min(C * tau, 1). None selects the mode's theory constant
        (C_obl = 10 eps^-2 ln(2T/delta), C_adv = 32 (1+eps) d
        ln(sigma_max/sigma_min) C_obl). At desk scale the theory constants
        usually saturate p = 1; benchmarks pass eps^-2 / 2 instead.
    sketch_eps, sketch_c, sketch_max_rows: projection sizing knobs; the row
        count is ceil(sketch_c * sketch_eps^-2 * ln(m/delta')) capped at
        sketch_max_rows, with delta' = delta / (2 T^2).
    sketch_rows: pin the projection row count directly; 0 disables the
        projection entirely (scores use B itself).
    compact: keep the kept-row matrix in compressed form. N is periodically
        replaced by the (d+1)-row Cholesky factor of its own Gram, so every
        maintained quantity (H, G, u, x, the score ||B m||^2 and its
        projection) is numerically identical while the per-keep refresh cost
        drops from k*s*d to k*d^2. The s counter still reports the number of
        kept rows. Off by default so the stored members match the row-level
        description exactly; the benchmark harness switches it on.
    """

    epsilon: float
    delta: float
    horizon: int
    mode: str = OBLIVIOUS
    sigma_min: float = 1e-6
    sigma_max: float = 1e6
    seed: int = 0
    recompute_interval: int | None = None
    sampling_constant: float | None = None
    sketch_eps: float = 0.01
    sketch_c: float = _sketch.DEFAULT_C
    sketch_max_rows: int = _sketch.DEFAULT_MAX_ROWS
    sketch_rows: int | None = None
    compact: bool = False

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise InvalidParameter(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if not 0.0 < self.delta < 1.0:
            raise InvalidParameter(f"delta must lie in (0, 1), got {self.delta}")
        if self.horizon < 1:
            raise InvalidParameter(f"horizon must be >= 1, got {self.horizon}")
        if self.mode not in (OBLIVIOUS, ADAPTIVE):
            raise InvalidParameter(f"mode must be oblivious or adaptive, got {self.mode!r}")
        if not (0.0 < self.sigma_min <= self.sigma_max):
            raise InvalidParameter("need 0 < sigma_min <= sigma_max")
        if self.recompute_interval is not None and self.recompute_interval < 1:
            raise InvalidParameter("recompute_interval must be >= 1 or None")
        if self.sampling_constant is not None and self.sampling_constant <= 0:
            raise InvalidParameter("sampling_constant must be positive")
        if self.sketch_rows is not None and self.sketch_rows < 0:
            raise InvalidParameter("sketch_rows must be >= 0 or None")

    def oblivious_constant(self) -> float:
        return 10.0 / self.epsilon**2 * math.log(2.0 * self.horizon / self.delta)

    def adaptive_constant(self, d: int) -> float:
        return (32.0 * (1.0 + self.epsilon) * d
                * math.log(self.sigma_max / self.sigma_min)
                * self.oblivious_constant())

    def effective_constant(self, d: int) -> float:
        """The factor C used in p = min(C * tau, 1)."""
        if self.sampling_constant is not None:
            return self.sampling_constant
        if self.mode == ADAPTIVE:
            return self.adaptive_constant(d)
        return self.oblivious_constant()


@dataclass(frozen=True)
class LeverageEstimate:
    """Outcome of scoring one row: estimate tau, probability p, weight nu."""

    tau: float
    p: float
    nu: float


def exact_online_leverage(rows, m) -> float:
    """Exact score m^T (R^T R)^{-1} m for a row matrix R seen so far."""
    rows = as_matrix(rows, name="rows")
    m = as_vector(m, dim=rows.shape[1], name="m")
    gram = rows.T @ rows
    if gram_rcond(gram) < 1e-14:
        raise SingularGram("Gram of the row prefix is numerically singular")
    return float(m @ spd_solve(gram, m))


def sigma_bounds_from_init(m0, horizon: int, row_norm_bound: float | None = None):
    """Heuristic (sigma_min, sigma_max) for a config, from the initial block.

    sigma_min is the least singular value of m0. sigma_max assumes every one
    of the `horizon` future rows has norm at most row_norm_bound (default:
    the largest row norm seen in m0).
    """
    m0 = as_matrix(m0, name="M0")
    svals = np.linalg.svd(m0, compute_uv=False)
    sigma_min = float(svals[-1])
    if row_norm_bound is None:
        row_norm_bound = float(np.max(np.linalg.norm(m0, axis=1)))
    sigma_max = math.sqrt(float(svals[0]) ** 2 + horizon * row_norm_bound**2)
    return sigma_min, max(sigma_max, sigma_min)


class SketchedLsqSampler:
    """The leverage-sampled streaming least-squares structure.

    Construct either from a square initial block (``SketchedLsqSampler(a0,
    b0, cfg)`` with a0 of shape (d+1) x d) or from an arbitrary full-rank
    block via :meth:`from_block`.
    """

    def __init__(self, a0, b0, cfg: SamplerConfig):
        a0 = as_matrix(a0, name="A0")
        d = a0.shape[1]
        a0 = as_matrix(a0, rows=d + 1, cols=d, name="A0")
        b0 = as_vector(b0, dim=d + 1, name="b0")
        m0 = np.hstack([a0, b0[:, None]])
        self._init_from_rows(m0, cfg, compress=False)

    @classmethod
    def from_block(cls, a0, b0, cfg: SamplerConfig) -> "SketchedLsqSampler":
        """Initialize from any n0 x d block with n0 >= d + 1.

        The block is compressed to d + 1 virtual rows N with N^T N equal to
        the block's Gram matrix, so every maintained member matches the
        uncompressed initialization exactly while keeping s = d + 1.
        """
        a0 = as_matrix(a0, name="A0")
        n0, d = a0.shape
        if n0 < d + 1:
            raise InvalidParameter(f"initial block needs at least d+1 rows, got {n0}")
        b0 = as_vector(b0, dim=n0, name="b0")
        m0 = np.hstack([a0, b0[:, None]])
        obj = cls.__new__(cls)
        obj._init_from_rows(m0, cfg, compress=True)
        return obj

    # -- construction ------------------------------------------------------

    def _init_from_rows(self, m0: np.ndarray, cfg: SamplerConfig, compress: bool):
        dp1 = m0.shape[1]
        gram = symmetrize(m0.T @ m0)
        evals = np.linalg.eigvalsh(gram)
        smallest = math.sqrt(max(float(evals[0]), 0.0))
        if smallest < cfg.sigma_min:
            raise RankDeficientInit(
                f"least singular value {smallest:.3e} of the initial block is "
                f"below sigma_min={cfg.sigma_min:.3e}"
            )
        self.cfg = cfg
        self._d = dp1 - 1
        self._dp1 = dp1
        self._c = cfg.effective_constant(self._d)
        self._compact = cfg.compact
        if compress or self._compact:
            rows = np.linalg.cholesky(gram).T.copy()
        else:
            rows = m0.copy()
        n_phys = rows.shape[0]
        cap = 3 * dp1 if self._compact else max(2 * n_phys, 32)
        self._N = np.zeros((cap, dp1))
        self._N[:n_phys] = rows
        self._n_phys = n_phys
        self._s = dp1 if compress else m0.shape[0]
        self._H = spd_inverse(gram)
        if self._compact:
            self._B = None
            self._gram = gram.copy()
        else:
            self._B = np.zeros((cap, dp1))
            self._B[:n_phys] = rows @ self._H
            self._gram = None
        self._G = spd_inverse(gram[: self._d, : self._d])
        self._u = gram[: self._d, -1].copy()
        self._x = self._G @ self._u
        self._t = 0
        self._samples_since_recompute = 0
        self._mbuf = np.empty(dp1)
        self._weights: list[float] = []
        self._replay: list[float] = []
        seq = np.random.SeedSequence(cfg.seed)
        kids = seq.spawn(2)
        self._sample_rng = np.random.Generator(np.random.Philox(kids[0]))
        self._sketch_rng = np.random.Generator(np.random.Philox(kids[1]))
        self._jl = None
        self._btilde = None
        self._refresh_sketch()

    # -- read-only views ---------------------------------------------------

    @property
    def d(self) -> int:
        return self._d

    @property
    def s(self) -> int:
        """Number of kept (virtual) rows, initial block included."""
        return self._s

    @property
    def inserted(self) -> int:
        return self._t

    @property
    def kept_rows(self) -> np.ndarray:
        """Copy of N, the rescaled kept rows.

        In compact mode the returned matrix is the compressed representative
        (at most 3(d+1) rows) whose Gram equals that of the kept rows.
        """
        return self._N[: self._n_phys].copy()

    @property
    def h_matrix(self) -> np.ndarray:
        return self._H.copy()

    @property
    def b_matrix(self) -> np.ndarray:
        if self._B is None:
            return self._N[: self._n_phys] @ self._H
        return self._B[: self._n_phys].copy()

    @property
    def sketched_b(self) -> np.ndarray:
        return self._btilde.copy() if self._btilde is not None else self.b_matrix

    @property
    def gram_inverse(self) -> np.ndarray:
        return self._G.copy()

    @property
    def weights(self) -> np.ndarray:
        """Per-insertion weight nu (0 for rejected rows)."""
        return np.asarray(self._weights)

    @property
    def replay_log(self) -> np.ndarray:
        """Uniform draws consumed by sampling, in insertion order."""
        return np.asarray(self._replay)

    def current_solution(self) -> np.ndarray:
        """The maintained solution x = G u (copy; no mutation)."""
        return self._x.copy()

    # -- core operations ----------------------------------------------------

    def score(self, m) -> float:
        """Leverage estimate tau = ||Bt m||_2^2 without consuming randomness.

        With the projection disabled the exact value m^T H m (= ||B m||_2^2)
        is used instead.
        """
        m = as_vector(m, dim=self._dp1, name="m")
        if self._btilde is not None:
            v = self._btilde @ m
            return float(v @ v)
        return float(m @ (self._H @ m))

    def sample(self, m) -> LeverageEstimate:
        """Score a row and draw the keep/reject decision.

        Consumes one uniform from the sampling stream (recorded in the
        replay log). tau = 0 forces p = 0 and nu = 0 without a division.
        """
        tau = self.score(m)
        p = min(self._c * tau, 1.0)
        u = float(self._sample_rng.random())
        self._replay.append(u)
        nu = 1.0 / math.sqrt(p) if (p > 0.0 and u < p) else 0.0
        return LeverageEstimate(tau=tau, p=p, nu=nu)

    def insert(self, a, beta: float) -> np.ndarray:
        """Stream in one row; returns the maintained solution.

        The returned array is the live solution vector; it is replaced (not
        mutated) by later updates.
        """
        if self._t >= self.cfg.horizon:
            raise HorizonExceeded(f"horizon {self.cfg.horizon} reached")
        m = self._mbuf
        m[: self._d] = a
        m[self._d] = beta
        est = self.sample(m)
        self._weights.append(est.nu)
        self._t += 1
        if est.nu != 0.0:
            # m is not retained by reference: the kept row is stored rescaled.
            self.update_members(m, est.p)
        return self._x

    def update_members(self, m, p: float) -> None:
        """Apply the rank-1 member updates for a kept row with probability p."""
        if not 0.0 < p <= 1.0:
            raise InvalidParameter(f"p must lie in (0, 1], got {p}")
        m = np.asarray(m, dtype=np.float64)
        n_phys = self._n_phys
        root = 1.0 / math.sqrt(p)
        hm = self._H @ m
        denom = 1.0 + (m @ hm) / p
        scale = 1.0 / (p * denom)
        self._H = symmetrize(self._H - np.outer(hm, hm * scale))
        self._ensure_capacity(n_phys + 1)
        if self._compact:
            self._gram += np.outer(m, m / p)
            self._N[n_phys] = m * root
            self._n_phys = n_phys + 1
            if self._n_phys >= 3 * self._dp1:
                self._compress()
        else:
            # B + N dH is the rank-1 update -(N hm)(hm)^T scale over the old
            # rows, plus the new row m^T H / sqrt(p) with the updated H.
            w = self._N[:n_phys] @ hm
            self._B[:n_phys] -= np.outer(w, hm * scale)
            self._B[n_phys] = (self._H @ m) * root
            self._N[n_phys] = m * root
            self._n_phys = n_phys + 1
        self._s += 1
        self._refresh_sketch()
        a = m[: self._d]
        beta = m[self._d]
        ga = self._G @ a
        gden = 1.0 + (a @ ga) / p
        self._G = symmetrize(self._G - np.outer(ga, ga / (p * gden)))
        self._u += (beta / p) * a
        self._x = self._G @ self._u
        self._samples_since_recompute += 1
        interval = self.cfg.recompute_interval
        if interval is not None and self._samples_since_recompute >= interval:
            self.recompute()

    def recompute(self) -> None:
        """Rebuild H, B, G, u, x from the kept rows; draws a fresh sketch."""
        n = self._N[: self._n_phys]
        gram = symmetrize(n.T @ n)
        self._H = spd_inverse(gram)
        if self._compact:
            self._gram = gram
            self._compress()
        else:
            self._B[: self._n_phys] = n @ self._H
        self._G = spd_inverse(gram[: self._d, : self._d])
        self._u = gram[: self._d, -1].copy()
        self._x = self._G @ self._u
        self._samples_since_recompute = 0
        self._refresh_sketch()

    # -- internals -----------------------------------------------------------

    def _compress(self) -> None:
        """Replace the physical rows by the Cholesky factor of their Gram;
        every Gram-derived member is unchanged."""
        self._N[: self._dp1] = _chol_with_jitter(symmetrize(self._gram)).T
        self._n_phys = self._dp1

    def _ensure_capacity(self, rows: int) -> None:
        cap = self._N.shape[0]
        if rows <= cap:
            return
        new_cap = max(rows, 2 * cap)
        grown = np.zeros((new_cap, self._dp1))
        grown[: self._n_phys] = self._N[: self._n_phys]
        self._N = grown
        if self._B is not None:
            grown_b = np.zeros((new_cap, self._dp1))
            grown_b[: self._n_phys] = self._B[: self._n_phys]
            self._B = grown_b

    def _refresh_sketch(self) -> None:
        cfg = self.cfg
        if cfg.sketch_rows == 0:
            self._jl = None
            self._btilde = None
            return
        seed = int(self._sketch_rng.integers(0, 2**63))
        delta_prime = cfg.delta / (2.0 * cfg.horizon**2)
        self._jl = _sketch.jl_generate(
            self._n_phys, cfg.horizon, cfg.sketch_eps, delta_prime, seed,
            c=cfg.sketch_c, max_rows=cfg.sketch_max_rows, rows=cfg.sketch_rows,
        )
        if self._B is not None:
            self._btilde = self._jl.entries @ self._B[: self._n_phys]
        else:
            self._btilde = (self._jl.entries @ self._N[: self._n_phys]) @ self._H

    # -- serialization -------------------------------------------------------

    def save(self, path) -> None:
        """Write a versioned binary snapshot (magic DLSR1) to `path`."""
        payload = self._serialize()
        if hasattr(path, "write"):
            path.write(payload)
        else:
            with open(path, "wb") as fh:
                fh.write(payload)

    @classmethod
    def load(cls, path) -> "SketchedLsqSampler":
        """Restore a snapshot written by :meth:`save`, RNG streams included."""
        if hasattr(path, "read"):
            payload = path.read()
        else:
            with open(path, "rb") as fh:
                payload = fh.read()
        return cls._deserialize(payload)

    def _serialize(self) -> bytes:
        cfg = self.cfg
        out = io.BytesIO()
        out.write(_MAGIC)
        out.write(struct.pack("<I", _FORMAT_VERSION))
        mode_flag = 0 if cfg.mode == OBLIVIOUS else 1
        sketch_seed = self._jl.seed if self._jl is not None else -1
        k = self._btilde.shape[0] if self._btilde is not None else 0
        out.write(struct.pack(
            "<QQQQq d d d d Q q d d q q Q q Q",
            self._d, self._s, self._t, len(self._replay), mode_flag,
            cfg.epsilon, cfg.delta, cfg.sigma_min, cfg.sigma_max,
            cfg.horizon, cfg.seed,
            math.nan if cfg.sampling_constant is None else cfg.sampling_constant,
            cfg.sketch_eps,
            -1 if cfg.recompute_interval is None else cfg.recompute_interval,
            -1 if cfg.sketch_rows is None else cfg.sketch_rows,
            self._samples_since_recompute,
            sketch_seed, k,
        ))
        out.write(struct.pack(
            "<d q q Q", cfg.sketch_c,
            -1 if cfg.sketch_max_rows is None else cfg.sketch_max_rows,
            1 if self._compact else 0, self._n_phys,
        ))
        arrays = [self._H, self._N[: self._n_phys]]
        if self._compact:
            arrays.append(self._gram)
        else:
            arrays.append(self._B[: self._n_phys])
        arrays += [self._G, self._u, self._x,
                   np.asarray(self._weights), np.asarray(self._replay)]
        for arr in arrays:
            out.write(np.ascontiguousarray(arr, dtype="<f8").tobytes())
        if self._btilde is not None:
            out.write(np.ascontiguousarray(self._btilde, dtype="<f8").tobytes())
        for gen in (self._sample_rng, self._sketch_rng):
            out.write(_pack_philox(gen))
        return out.getvalue()

    @classmethod
    def _deserialize(cls, payload: bytes) -> "SketchedLsqSampler":
        if payload[:5] != _MAGIC:
            raise InvalidParameter("not a DLSR1 snapshot")
        off = 5
        (version,) = struct.unpack_from("<I", payload, off)
        off += 4
        if version != _FORMAT_VERSION:
            raise InvalidParameter(f"unsupported snapshot version {version}")
        head = struct.unpack_from("<QQQQq d d d d Q q d d q q Q q Q", payload, off)
        off += struct.calcsize("<QQQQq d d d d Q q d d q q Q q Q")
        (d, s, t, n_replay, mode_flag, epsilon, delta, sig_min, sig_max,
         horizon, seed, samp_const, sk_eps, rec_int, sk_rows,
         since_recompute, sketch_seed, k) = head
        sk_c, sk_max, compact_flag, n_phys = struct.unpack_from("<d q q Q", payload, off)
        off += struct.calcsize("<d q q Q")
        cfg = SamplerConfig(
            epsilon=epsilon, delta=delta, horizon=int(horizon),
            mode=OBLIVIOUS if mode_flag == 0 else ADAPTIVE,
            sigma_min=sig_min, sigma_max=sig_max, seed=int(seed),
            recompute_interval=None if rec_int < 0 else int(rec_int),
            sampling_constant=None if math.isnan(samp_const) else samp_const,
            sketch_eps=sk_eps, sketch_c=sk_c,
            sketch_max_rows=None if sk_max < 0 else int(sk_max),
            sketch_rows=None if sk_rows < 0 else int(sk_rows),
            compact=bool(compact_flag),
        )
        dp1 = int(d) + 1

        def take(shape):
            count = 1
            for dim in shape:
                count *= int(dim)
            if count == 0:
                return np.zeros(shape), 0
            arr = np.frombuffer(payload, dtype="<f8", count=count, offset=off)
            return arr.reshape(shape).astype(np.float64), count * 8

        n_phys = int(n_phys)
        obj = cls.__new__(cls)
        obj.cfg = cfg
        obj._d = int(d)
        obj._dp1 = dp1
        obj._c = cfg.effective_constant(int(d))
        obj._compact = bool(compact_flag)
        obj._s = int(s)
        obj._n_phys = n_phys
        obj._t = int(t)
        obj._samples_since_recompute = int(since_recompute)
        obj._mbuf = np.empty(dp1)
        arr, step = take((dp1, dp1)); obj._H = arr.copy(); off += step
        arr, step = take((n_phys, dp1)); rows = arr.copy(); off += step
        if obj._compact:
            arr, step = take((dp1, dp1)); obj._gram = arr.copy(); off += step
            brows = None
        else:
            arr, step = take((n_phys, dp1)); brows = arr.copy(); off += step
            obj._gram = None
        arr, step = take((int(d), int(d))); obj._G = arr.copy(); off += step
        arr, step = take((int(d),)); obj._u = arr.copy(); off += step
        arr, step = take((int(d),)); obj._x = arr.copy(); off += step
        arr, step = take((int(t),)); obj._weights = list(arr); off += step
        arr, step = take((int(n_replay),)); obj._replay = list(arr); off += step
        cap = 3 * dp1 if obj._compact else max(2 * n_phys, 32)
        cap = max(cap, n_phys)
        obj._N = np.zeros((cap, dp1))
        obj._N[:n_phys] = rows
        if obj._compact:
            obj._B = None
        else:
            obj._B = np.zeros((cap, dp1))
            obj._B[:n_phys] = brows
        if sketch_seed >= 0:
            arr, step = take((int(k), dp1)); obj._btilde = arr.copy(); off += step
            delta_prime = cfg.delta / (2.0 * cfg.horizon**2)
            obj._jl = _sketch.JlSketch(
                entries=_sketch._entries_from_seed(int(sketch_seed), int(k), n_phys),
                seed=int(sketch_seed), eps=cfg.sketch_eps, m=cfg.horizon,
                delta=delta_prime,
            )
        else:
            obj._btilde = None
            obj._jl = None
        obj._sample_rng, off = _unpack_philox(payload, off)
        obj._sketch_rng, off = _unpack_philox(payload, off)
        return obj


_PHILOX_WORDS = 13  # counter(4) key(2) buffer(4) buffer_pos has_uint32 uinteger


def _pack_philox(gen: np.random.Generator) -> bytes:
    st = gen.bit_generator.state
    words = list(np.asarray(st["state"]["counter"], dtype=np.uint64))
    words += list(np.asarray(st["state"]["key"], dtype=np.uint64))
    words += list(np.asarray(st["buffer"], dtype=np.uint64))
    words += [np.uint64(st["buffer_pos"]), np.uint64(st["has_uint32"]),
              np.uint64(st["uinteger"])]
    return struct.pack("<13Q", *[int(w) for w in words])


def _unpack_philox(payload: bytes, off: int):
    words = struct.unpack_from("<13Q", payload, off)
    off += struct.calcsize("<13Q")
    bitgen = np.random.Philox()
    bitgen.state = {
        "bit_generator": "Philox",
        "state": {
            "counter": np.array(words[0:4], dtype=np.uint64),
            "key": np.array(words[4:6], dtype=np.uint64),
        },
        "buffer": np.array(words[6:10], dtype=np.uint64),
        "buffer_pos": int(words[10]),
        "has_uint32": int(words[11]),
        "uinteger": int(words[12]),
    }
    return np.random.Generator(bitgen), off
