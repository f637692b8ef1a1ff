"""Dense complex linear algebra: Hermitian eigendecomposition, singular
values, polar factorization, block constructions, and the unitary exponential.

Matrices are numpy complex128 arrays. Inputs that must be Hermitian or
projections are validated and rejected (never symmetrized) at 1e-10 relative
tolerance.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPositive, NotProjection

HERM_TOL = 1e-10
PROJ_TOL = 1e-10
EIG_TOL = 1e-10
# clamp floor for eigenvalues of X*X that should be >= 0
PSD_CLAMP = 1e-12


def as_cmatrix(a) -> np.ndarray:
    """Validate and return a 2-d complex128 matrix with finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def as_hermitian(a, tol: float = HERM_TOL) -> np.ndarray:
    """Validate a square matrix as Hermitian at relative tolerance.

    Raises:
        NotHermitian: if the defect max|A - A*| exceeds tol * max(1, max|A|).
    """
    m = as_cmatrix(a)
    if m.shape[0] != m.shape[1]:
        raise NotHermitian(f"matrix is {m.shape[0]}x{m.shape[1]}, not square")
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 0.0)
    defect = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if defect > tol * scale:
        raise NotHermitian(f"Hermitian defect {defect:.3e} exceeds {tol * scale:.3e}")
    return m


class EigenPair(NamedTuple):
    """Eigenvalues (non-increasing) and matching orthonormal eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray


class CompressResult(NamedTuple):
    """Compression A_P on an orthonormal basis of range(P), plus full-space PAP."""

    compressed: np.ndarray
    pap: np.ndarray


def eigh(a) -> EigenPair:
    """Hermitian eigendecomposition with non-increasing eigenvalues.

    Args:
        a: Hermitian matrix (validated at HERM_TOL).

    Returns:
        EigenPair(values, vectors) with A @ vectors == vectors @ diag(values)
        up to EIG_TOL * max(1, ||A||_F).

    Raises:
        NotHermitian: input fails the Hermiticity gate.
        NoConvergence: the underlying solver did not converge.
    """
    m = as_hermitian(a)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return EigenPair(w[::-1].copy(), v[:, ::-1].copy())


def sv_array(x) -> np.ndarray:
    """Singular values of X, non-increasing, length min(rows, cols).

    Computed as square roots of the eigenvalues of X*X, so s(X) = s(X*) holds
    by construction up to the eigensolver tolerance. Tiny negative eigenvalues
    of X*X (>= -PSD_CLAMP * scale) are clamped to zero.
    """
    m = as_cmatrix(x)
    rows, cols = m.shape
    h = m.conj().T @ m
    w = eigh(h).values
    scale = max(1.0, float(w[0]) if w.size else 0.0)
    if w.size and float(w[-1]) < -PSD_CLAMP * scale:
        raise NotPositive(f"X*X has eigenvalue {w[-1]:.3e} below clamp floor")
    w = np.clip(w, 0.0, None)
    return np.sqrt(w[: min(rows, cols)])


def opnorm(x) -> float:
    """Operator (spectral) norm, i.e. s_1(X)."""
    s = sv_array(x)
    return float(s[0]) if s.size else 0.0


def polar(x) -> tuple[np.ndarray, np.ndarray]:
    """Polar decomposition X = U P.

    P = (X*X)^(1/2) is positive semidefinite; U is a partial isometry whose
    initial space is range(P). Rank deficiency is handled by a spectral
    cutoff at 1e-10 relative to the largest singular value.
    """
    m = as_cmatrix(x)
    h = m.conj().T @ m
    w, v = eigh(h)
    scale = max(1.0, float(w[0]) if w.size else 0.0)
    if w.size and float(w[-1]) < -PSD_CLAMP * scale:
        raise NotPositive(f"X*X has eigenvalue {w[-1]:.3e} below clamp floor")
    s = np.sqrt(np.clip(w, 0.0, None))
    p = v @ np.diag(s.astype(np.complex128)) @ v.conj().T
    p = (p + p.conj().T) / 2.0
    cutoff = 1e-10 * max(1.0, float(s[0]) if s.size else 0.0)
    inv = np.where(s > cutoff, 1.0 / np.where(s > cutoff, s, 1.0), 0.0)
    u = m @ v @ np.diag(inv.astype(np.complex128)) @ v.conj().T
    return u, p


def direct_sum(a, b) -> np.ndarray:
    """Block-diagonal matrix diag(A, B)."""
    ma, mb = as_cmatrix(a), as_cmatrix(b)
    out = np.zeros(
        (ma.shape[0] + mb.shape[0], ma.shape[1] + mb.shape[1]), dtype=np.complex128
    )
    out[: ma.shape[0], : ma.shape[1]] = ma
    out[ma.shape[0] :, ma.shape[1] :] = mb
    return out


def offdiag_embed(b) -> np.ndarray:
    """Hermitian embedding [[0, B], [B*, 0]] of an arbitrary matrix B."""
    m = as_cmatrix(b)
    rows, cols = m.shape
    out = np.zeros((rows + cols, rows + cols), dtype=np.complex128)
    out[:rows, rows:] = m
    out[rows:, :rows] = m.conj().T
    return out


def unitary_exp(x) -> np.ndarray:
    """U = e^{iX} for Hermitian X, via the eigendecomposition of X."""
    w, v = eigh(x)
    u = v @ np.diag(np.exp(1j * w)) @ v.conj().T
    d = u.conj().T @ u - np.eye(u.shape[0])
    if float(np.linalg.norm(d)) > 1e-10:
        raise NoConvergence("e^{iX} failed the unitarity residual")
    return u


def as_projection(p, tol: float = PROJ_TOL) -> np.ndarray:
    """Validate P as an orthogonal projection (P = P* = P^2) at relative tol."""
    m = as_hermitian(p, tol)
    scale = max(1.0, float(np.max(np.abs(m))) if m.size else 0.0)
    defect = float(np.max(np.abs(m @ m - m)))
    if defect > tol * scale:
        raise NotProjection(f"idempotency defect {defect:.3e} exceeds {tol * scale:.3e}")
    return m


def compress(a, p) -> CompressResult:
    """Compression of A to range(P).

    Args:
        a: Hermitian matrix.
        p: orthogonal projection (validated).

    Returns:
        CompressResult: A_P of dimension rank(P) on an orthonormal basis of
        range(P), and PAP on the full space.
    """
    ma = as_hermitian(a)
    mp = as_projection(p)
    if ma.shape != mp.shape:
        raise ValueError(f"dimension mismatch {ma.shape} vs {mp.shape}")
    w, v = eigh(mp)
    basis = v[:, w > 0.5]
    compressed = basis.conj().T @ ma @ basis
    return CompressResult(compressed, mp @ ma @ mp)


def svd_values(x, horizon: int | None = None):
    """Singular values as a compact-mode SpreadSeq, zero-padded to horizon."""
    from .spectra import SpreadSeq

    s = sv_array(x)
    if horizon is None:
        horizon = len(s)
    if horizon < len(s):
        raise ValueError(f"horizon {horizon} is below the value count {len(s)}")
    vals = np.concatenate([s, np.zeros(horizon - len(s))])
    return SpreadSeq(values=vals, tail=0.0, mode="compact")
