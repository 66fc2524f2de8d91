"""Dense Hermitian eigensolver for the small matrices that occur here.

The matrices are n x n with n the ambient dimension, so a cyclic complex
Jacobi sweep is both accurate and fast enough.  Each rotation first removes
the phase of the pivot entry, then applies a real plane rotation.
"""

from __future__ import annotations

import numpy as np

from .errors import FrameInputError

__all__ = [
    "hermitian_eigh",
    "hermitian_eigenvalues",
    "check_hermitian",
    "JACOBI_TOL",
    "JACOBI_MAX_SWEEPS",
]

JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100


def check_hermitian(M, rtol: float = 1e-12) -> np.ndarray:
    """Return ``M`` as a complex square array, or raise if it is not Hermitian."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise FrameInputError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise FrameInputError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
    skew = float(np.max(np.abs(M - M.conj().T))) if M.size else 0.0
    if skew > rtol * scale:
        raise FrameInputError(
            f"matrix is not Hermitian: max |M - M^H| = {skew:.3e} exceeds {rtol * scale:.3e}")
    return M


def _off_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A[~np.eye(A.shape[0], dtype=bool)]))


def hermitian_eigh(M, rtol: float = 1e-12):
    """Eigenvalues (ascending) and unitary eigenvectors of a Hermitian matrix.

    Returns ``(evals, evecs)`` with ``M @ evecs[:, i] == evals[i] * evecs[:, i]``.
    Convergence: off-diagonal Frobenius norm at most ``JACOBI_TOL * ||M||_F``.
    """
    A = check_hermitian(M, rtol).copy()
    A = 0.5 * (A + A.conj().T)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    if n == 0:
        return np.zeros(0), V
    target = JACOBI_TOL * float(np.linalg.norm(A))

    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_norm(A) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                # phase so that the (p, q) entry becomes real and positive
                phase = apq / r
                app = A[p, p].real
                aqq = A[q, q].real
                zeta = (aqq - app) / (2.0 * r)
                t = (1.0 if zeta >= 0 else -1.0) / (abs(zeta) + np.hypot(1.0, zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                # 2x2 unitary block of G on (p, q); (G^H A G)[p, q] == 0
                g_pp, g_pq = c, s
                g_qp, g_qq = -s * np.conj(phase), c * np.conj(phase)
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = col_p * g_pp + col_q * g_qp
                A[:, q] = col_p * g_pq + col_q * g_qq
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = np.conj(g_pp) * row_p + np.conj(g_qp) * row_q
                A[q, :] = np.conj(g_pq) * row_p + np.conj(g_qq) * row_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = vp * g_pp + vq * g_qp
                V[:, q] = vp * g_pq + vq * g_qq
    else:
        if _off_norm(A) > target:
            raise np.linalg.LinAlgError(
                f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")

    evals = np.diag(A).real.copy()
    order = np.argsort(evals, kind="stable")
    return evals[order], V[:, order]


def hermitian_eigenvalues(M, rtol: float = 1e-12) -> np.ndarray:
    """Ascending real spectrum of a Hermitian matrix."""
    return hermitian_eigh(M, rtol)[0]
