"""Frame quotients, optimal frame bounds and the frame/Parseval predicates.

For a family ``u`` in F^n with component Gramian ``U`` the quotient

    N(v; u) = sum_x w_x |<v, u_x>|^2 / ||v||^2

is the Rayleigh quotient ``v^H U v / v^H v``, so the optimal frame bounds are
the extreme eigenvalues of ``U`` and the family is a frame exactly when its
components are linearly independent (``U`` nonsingular).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, asdict

import numpy as np

from .errors import FrameDomainError, FrameInputError
from .family import WeightedFamily, gramian, total_energy
from .linalg import hermitian_eigenvalues, hermitian_eigh

__all__ = [
    "QuotientForm",
    "FrameVerdict",
    "BesselReport",
    "quotient_N",
    "quotient_N_extended",
    "frame_bounds",
    "extremal_vectors",
    "is_bessel",
    "is_frame",
    "is_parseval",
    "parseval_deviation",
    "default_frame_tol",
    "f2_sufficient",
    "trace_mean_bounds_check",
    "analyze",
    "DEFAULT_PARSEVAL_TOL",
]

FRAME_RTOL = 1e-10
DEFAULT_PARSEVAL_TOL = 1e-10


class QuotientForm(enum.Enum):
    DIRECT = "direct"
    TRACE = "trace"
    SYNTH = "synth"


def _as_vector(v, n: int) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.shape != (n,):
        raise FrameInputError(f"test vector has shape {v.shape}, expected ({n},)")
    if not np.all(np.isfinite(v)):
        raise FrameInputError("test vector has non-finite entries")
    return v


def quotient_N(v, fam: WeightedFamily, form: QuotientForm | str = QuotientForm.DIRECT) -> float:
    """Frame quotient of the test vector ``v`` against ``fam``.

    All three forms compute the same number:

    * ``DIRECT``: ``sum_j w_j |<v, u_j>|^2 / ||v||^2``
    * ``TRACE``:  ``Tr(V U) / Tr(V)`` with ``V[k, l] = v^k conj(v^l)``
    * ``SYNTH``:  ``||sum_k conj(v^k) u^k||^2 / ||v||^2`` (weighted norm)
    """
    form = QuotientForm(form)
    v = _as_vector(v, fam.n)
    norm2 = float(np.vdot(v, v).real)
    if norm2 == 0.0:
        raise FrameDomainError("zero test vector: the quotient is undefined")
    if form is QuotientForm.DIRECT:
        coeffs = fam.vectors.conj() @ v  # <v, u_j>
        return float(np.sum(fam.weights * np.abs(coeffs) ** 2) / norm2)
    if form is QuotientForm.TRACE:
        V = np.outer(v, v.conj())
        return float(np.trace(V @ gramian(fam)).real / np.trace(V).real)
    synth = fam.vectors @ v.conj()  # sum_k conj(v^k) u^k, pointwise
    return float(np.sum(fam.weights * np.abs(synth) ** 2) / norm2)


def quotient_N_extended(tv: WeightedFamily, fam: WeightedFamily, form: str = "trace") -> float:
    """Quotient of a test family ``tv`` in L^2(Y, nu; F^n) against ``fam``.

    ``form="trace"`` uses ``Tr(V^Y U) / Tr(V^Y)`` with ``V^Y = gramian(tv)``;
    ``form="direct"`` evaluates the weighted double sum over X x Y.
    """
    if tv.n != fam.n:
        raise FrameInputError(f"test family lives in F^{tv.n}, frame family in F^{fam.n}")
    energy = total_energy(tv)
    if energy == 0.0:
        raise FrameDomainError("zero-energy test family: the quotient is undefined")
    if form == "trace":
        VY = gramian(tv)
        return float(np.trace(VY @ gramian(fam)).real / np.trace(VY).real)
    if form == "direct":
        c = fam.vectors.conj() @ tv.vectors.T  # c[i, j] = <v_j, u_i>
        num = np.sum(fam.weights[:, None] * tv.weights[None, :] * np.abs(c) ** 2)
        return float(num / energy)
    raise FrameInputError(f"unknown extended quotient form {form!r}")


def frame_bounds(fam: WeightedFamily) -> tuple[float, float]:
    """Optimal frame bounds ``(A, B) = (lambda_min(U), lambda_max(U))``.

    A rank-deficient family reports ``A`` clipped at 0 (it may come out as a
    tiny negative number from roundoff otherwise).
    """
    evals = hermitian_eigenvalues(gramian(fam))
    return max(float(evals[0]), 0.0), max(float(evals[-1]), 0.0)


def extremal_vectors(fam: WeightedFamily) -> tuple[np.ndarray, np.ndarray]:
    """Unit test vectors at which the quotient attains ``A`` and ``B``."""
    _, vecs = hermitian_eigh(gramian(fam))
    return vecs[:, 0].copy(), vecs[:, -1].copy()


@dataclass(frozen=True)
class BesselReport:
    is_bessel: bool
    energy: float
    tail_bound: float
    upper_bound: float


def is_bessel(fam: WeightedFamily) -> BesselReport:
    """Finite energy is equivalent to the Bessel property in F^n.

    Finitely represented families always qualify; the tail bound of a
    truncated generator is carried along so the caller can see how much
    energy the truncation left out.
    """
    energy = total_energy(fam)
    bessel = bool(np.isfinite(energy + fam.tail_bound))
    return BesselReport(bessel, energy, fam.tail_bound, frame_bounds(fam)[1])


def default_frame_tol(fam: WeightedFamily) -> float:
    return FRAME_RTOL * max(1.0, frame_bounds(fam)[1])


def is_frame(fam: WeightedFamily, tol: float | None = None) -> bool:
    """True iff ``lambda_min(U) > tol``, the numerical form of component freeness."""
    if tol is None:
        tol = default_frame_tol(fam)
    if tol <= 0:
        raise FrameInputError("frame tolerance must be positive")
    return frame_bounds(fam)[0] > tol


def parseval_deviation(fam: WeightedFamily) -> float:
    """Entrywise max-norm of ``U - I``."""
    U = gramian(fam)
    return float(np.max(np.abs(U - np.eye(fam.n))))


def is_parseval(fam: WeightedFamily, tol: float = DEFAULT_PARSEVAL_TOL) -> bool:
    if tol <= 0:
        raise FrameInputError("Parseval tolerance must be positive")
    return parseval_deviation(fam) <= tol


def f2_sufficient(fam: WeightedFamily, tol: float | None = None) -> tuple[bool, float]:
    """Sufficient frame condition for families in F^2.

    Returns ``(holds, guaranteed_A)`` where
    ``guaranteed_A = min(||u^1||^2, ||u^2||^2) - |<u^1, u^2>|`` is a lower
    bound for ``lambda_min(U)``, rounded down by a few ulps so that it stays
    below the computed spectrum in the equal-norm case where the two
    coincide exactly.  ``holds`` requires ``guaranteed_A > tol``;
    the default tolerance is the frame tolerance, so exact ties (components
    of equal norm that are proportional) do not pass on roundoff.
    """
    if fam.n != 2:
        raise FrameInputError(f"the F^2 criterion needs n = 2, got n = {fam.n}")
    U = gramian(fam)
    m = float(min(U[0, 0].real, U[1, 1].real))
    off = float(abs(U[0, 1]))
    guaranteed = (m - off) - 4.0 * np.finfo(float).eps * (m + off)
    if tol is None:
        tol = FRAME_RTOL * max(1.0, float(max(U[0, 0].real, U[1, 1].real)))
    return bool(guaranteed > tol), float(guaranteed)


def trace_mean_bounds_check(P, U, slack: float = 1e-10) -> bool:
    """Check ``lambda_min(U) <= Tr(P U) / Tr(P) <= lambda_max(U)`` for PSD ``P``."""
    P = np.asarray(P, dtype=complex)
    U = np.asarray(U, dtype=complex)
    if P.shape != U.shape:
        raise FrameInputError(f"shape mismatch {P.shape} vs {U.shape}")
    trP = float(np.trace(P).real)
    if trP <= 0.0:
        raise FrameDomainError("Tr(P) must be positive")
    ratio = float(np.trace(P @ U).real) / trP
    evals = hermitian_eigenvalues(U)
    return bool(evals[0] - slack <= ratio <= evals[-1] + slack)


@dataclass(frozen=True)
class FrameVerdict:
    energy: float
    lower_bound: float
    upper_bound: float
    det_U: float
    is_frame: bool
    is_parseval: bool
    tol_frame: float
    tol_parseval: float
    parseval_deviation: float
    n: int
    points: int
    tail_bound: float = 0.0
    f2_holds: bool | None = None
    guaranteed_A: float | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def analyze(fam: WeightedFamily, tol_frame: float | None = None,
            tol_parseval: float = DEFAULT_PARSEVAL_TOL) -> FrameVerdict:
    """Full diagnostic record for one family."""
    U = gramian(fam)
    evals = hermitian_eigenvalues(U)
    A, B = frame_bounds(fam)
    if tol_frame is None:
        tol_frame = default_frame_tol(fam)
    f2 = f2_sufficient(fam) if fam.n == 2 else (None, None)
    return FrameVerdict(
        energy=total_energy(fam),
        lower_bound=A,
        upper_bound=B,
        det_U=float(np.prod(evals)),
        is_frame=A > tol_frame,
        is_parseval=is_parseval(fam, tol_parseval),
        tol_frame=tol_frame,
        tol_parseval=tol_parseval,
        parseval_deviation=parseval_deviation(fam),
        n=fam.n,
        points=fam.size,
        tail_bound=fam.tail_bound,
        f2_holds=f2[0],
        guaranteed_A=f2[1],
    )
