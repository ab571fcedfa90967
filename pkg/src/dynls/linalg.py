"""Dense linear-algebra substrate: validated arrays, normal-equation solves,
spectral-approximation checks, orthonormal complements and symmetric
eigendecompositions.

All public functions accept anything convertible to a float64 ndarray and
reject non-finite entries at the boundary.
"""
from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatch,
    NotOrthonormal,
    NotSymmetric,
    SingularGram,
)

# Solves reject Gram matrices whose reciprocal condition number falls below
# this floor: beyond 64-bit float resolution.
RCOND_FLOOR = 1e-14


def as_matrix(a, rows: int | None = None, cols: int | None = None, name: str = "matrix") -> np.ndarray:
    """Validate and convert to a C-contiguous float64 2-D array."""
    out = np.ascontiguousarray(a, dtype=np.float64)
    if out.ndim != 2:
        raise DimensionMismatch(f"{name}: expected 2-D array, got ndim={out.ndim}")
    if rows is not None and out.shape[0] != rows:
        raise DimensionMismatch(f"{name}: expected {rows} rows, got {out.shape[0]}")
    if cols is not None and out.shape[1] != cols:
        raise DimensionMismatch(f"{name}: expected {cols} columns, got {out.shape[1]}")
    if out.size and not np.isfinite(out).all():
        raise ValueError(f"{name}: entries must be finite")
    return out


def as_vector(v, dim: int | None = None, name: str = "vector") -> np.ndarray:
    """Validate and convert to a float64 1-D array."""
    out = np.ascontiguousarray(v, dtype=np.float64)
    if out.ndim != 1:
        raise DimensionMismatch(f"{name}: expected 1-D array, got ndim={out.ndim}")
    if dim is not None and out.shape[0] != dim:
        raise DimensionMismatch(f"{name}: expected length {dim}, got {out.shape[0]}")
    if out.size and not np.isfinite(out).all():
        raise ValueError(f"{name}: entries must be finite")
    return out


def symmetrize(m: np.ndarray) -> np.ndarray:
    """(M + M^T)/2; suppresses round-off drift after rank-1 updates."""
    return 0.5 * (m + m.T)


def _chol_with_jitter(gram: np.ndarray) -> np.ndarray:
    """Cholesky factor of an SPD matrix, retrying once with diagonal jitter."""
    try:
        return np.linalg.cholesky(gram)
    except np.linalg.LinAlgError:
        jitter = 1e-12 * np.trace(gram) / max(gram.shape[0], 1)
        try:
            return np.linalg.cholesky(gram + jitter * np.eye(gram.shape[0]))
        except np.linalg.LinAlgError as exc:
            raise SingularGram("Cholesky failed even with diagonal jitter") from exc


def spd_solve(gram: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Solve gram @ x = rhs for SPD gram via Cholesky (never explicit inverse)."""
    chol = _chol_with_jitter(gram)
    y = np.linalg.solve(chol, rhs)
    return np.linalg.solve(chol.T, y)


def spd_inverse(gram: np.ndarray) -> np.ndarray:
    """Explicit SPD inverse for data-structure members that must be stored."""
    return symmetrize(spd_solve(gram, np.eye(gram.shape[0])))


def gram_rcond(gram: np.ndarray) -> float:
    """Reciprocal condition number of a symmetric PSD matrix."""
    w = np.linalg.eigvalsh(symmetrize(gram))
    top = float(w[-1])
    if top <= 0.0:
        return 0.0
    return max(float(w[0]), 0.0) / top


def normal_equation_solve(a, b, *, rcond_floor: float = RCOND_FLOOR) -> np.ndarray:
    """Least-squares minimizer of ||A x - b||_2 through the normal equations.

    Requires n >= d and a numerically invertible Gram matrix; raises
    SingularGram when the reciprocal condition estimate falls below the floor.
    """
    a = as_matrix(a, name="A")
    n, d = a.shape
    b = as_vector(b, dim=n, name="b")
    if n < d:
        raise DimensionMismatch(f"need n >= d, got {n} x {d}")
    gram = a.T @ a
    if gram_rcond(gram) < rcond_floor:
        raise SingularGram(
            f"reciprocal condition of A^T A below floor {rcond_floor:g}"
        )
    return spd_solve(gram, a.T @ b)


def residual_norm(a, x, b) -> float:
    """||A x - b||_2 for already-validated operands."""
    return float(np.linalg.norm(np.asarray(a) @ np.asarray(x) - np.asarray(b)))


def spectral_approx_check(g1, g2, eps: float) -> bool:
    """True iff (1-eps) * G2 <= G1 <= (1+eps) * G2 in the PSD order.

    Both inputs must be symmetric PSD of the same dimension. Checked by
    symmetric whitening: all generalized eigenvalues of (G1, G2) must lie in
    [1-eps, 1+eps]. Directions in the (numerical) null space of G2 must also
    be null for G1.
    """
    g1 = as_matrix(g1, name="G1")
    g2 = as_matrix(g2, rows=g1.shape[0], cols=g1.shape[1], name="G2")
    if g1.shape[0] != g1.shape[1]:
        raise DimensionMismatch("G1 must be square")
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    slack = 1e-9
    w2, v2 = np.linalg.eigh(symmetrize(g2))
    scale = max(float(w2[-1]), 0.0)
    null_cut = max(scale, 1.0) * 1e-13
    live = w2 > null_cut
    if not live.all():
        # On G2's null space the sandwich forces x^T G1 x = 0 as well.
        null_dirs = v2[:, ~live]
        if np.linalg.norm(g1 @ null_dirs) > max(1.0, np.linalg.norm(g1)) * 1e-10:
            return False
    if not live.any():
        return True
    whiten = v2[:, live] / np.sqrt(w2[live])
    mid = symmetrize(whiten.T @ g1 @ whiten)
    evals = np.linalg.eigvalsh(mid)
    return bool(evals[0] >= 1.0 - eps - slack and evals[-1] <= 1.0 + eps + slack)


def orthonormal_complement(u, *, tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of the complement of span(U), as a d x (d-d1) matrix.

    U must have orthonormal columns within `tol`; raises NotOrthonormal
    otherwise. Returns an empty d x 0 matrix when U already spans R^d.
    """
    u = as_matrix(u, name="U")
    d, d1 = u.shape
    if d1 > d:
        raise DimensionMismatch("U cannot have more columns than rows")
    if d1 and np.linalg.norm(u.T @ u - np.eye(d1)) > tol:
        raise NotOrthonormal(f"U^T U deviates from identity beyond {tol:g}")
    if d1 == d:
        return np.zeros((d, 0))
    if d1 == 0:
        return np.eye(d)
    q, _ = np.linalg.qr(u, mode="complete")
    comp = q[:, d1:]
    # QR may flip the span relative to U's columns; re-orthogonalize against U
    # to pin U^T comp down to round-off.
    comp = comp - u @ (u.T @ comp)
    comp, _ = np.linalg.qr(comp)
    return comp


def eig_sym(h, *, tol: float = 1e-12):
    """Eigendecomposition of a symmetric matrix, eigenvalues descending.

    Returns (eigenvalues, eigenvectors) with H = V diag(w) V^T.
    """
    h = as_matrix(h, name="H")
    if h.shape[0] != h.shape[1]:
        raise DimensionMismatch("H must be square")
    scale = max(1.0, float(np.linalg.norm(h)))
    if np.linalg.norm(h - h.T) > tol * scale:
        raise NotSymmetric(f"H deviates from symmetry beyond {tol:g} (relative)")
    w, v = np.linalg.eigh(symmetrize(h))
    order = np.argsort(w)[::-1]
    return w[order], v[:, order]
