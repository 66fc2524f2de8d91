"""Constructive side of the topology of frame space.

* density: any family is the limit of frames ``u + t (a - u)`` for a frame
  ``a`` and small generic ``t``;
* polygonal connectedness: two frames ``u`` and ``v`` are joined through an
  auxiliary frame ``a`` whose component span meets ``span(u^k, v^k)`` only
  in zero, along the segments ``t e + (1 - t) a``;
* Parseval paths: same idea with an orthonormal auxiliary orthogonal to the
  endpoints' components, normalized by ``sqrt(2 t^2 - 2 t + 1)``.

Component functions are handled in ``sqrt(w)``-scaled coordinates, where the
weighted L^2 inner product becomes the Euclidean one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

import numpy as np

from .frame_analysis import FRAME_RTOL, frame_bounds, is_frame, parseval_deviation
from .errors import CapacityError, FrameInputError, GenerationError
from .family import FieldTag, WeightedFamily

__all__ = [
    "AuxMode",
    "PathMode",
    "Leg",
    "PathSpec",
    "PathCertificate",
    "effective_dimension",
    "auxiliary_family",
    "density_perturb",
    "build_path",
    "path_invariant_violations",
    "path_eval",
    "certify_path",
    "cross_gramian",
]

RANK_RTOL = 1e-8
MAX_AUX_DRAWS = 20
MAX_PERTURB_DRAWS = 64
PATH_PARSEVAL_TOL = 1e-8


class AuxMode(enum.Enum):
    INDEPENDENT = "independent"
    ORTHONORMAL = "orthonormal"


class PathMode(enum.Enum):
    FRAME_POLYGONAL = "frame"
    PARSEVAL_NORMALIZED = "parseval"


class Leg(enum.Enum):
    U_LEG = "u"
    V_LEG = "v"


def effective_dimension(fam_or_weights) -> int:
    """Number of points with positive weight."""
    w = fam_or_weights.weights if isinstance(fam_or_weights, WeightedFamily) else fam_or_weights
    return int(np.count_nonzero(np.asarray(w) > 0))


def cross_gramian(a: WeightedFamily, u: WeightedFamily) -> np.ndarray:
    """``C[k, l] = <a^k, u^l>`` over the shared weighted point set."""
    if not a.same_points(u):
        raise FrameInputError("families must share the same weighted point set")
    return (a.vectors.T * a.weights) @ u.vectors.conj()


def _scaled_components(fam: WeightedFamily, active: np.ndarray) -> np.ndarray:
    """Columns are components in sqrt(w)-scaled coordinates on active points."""
    return fam.vectors[active] * np.sqrt(fam.weights[active])[:, None]


def _span_basis(M: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of the column span of ``M``."""
    if M.shape[1] == 0:
        return np.zeros((M.shape[0], 0), dtype=M.dtype)
    U, s, _ = np.linalg.svd(M, full_matrices=False)
    if s.size == 0 or s[0] == 0:
        return np.zeros((M.shape[0], 0), dtype=M.dtype)
    rank = int(np.sum(s > RANK_RTOL * s[0]))
    return U[:, :rank]


def _project_out(X: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Remove the span of the orthonormal columns ``Q`` from ``X`` (twice)."""
    for _ in range(2):
        if Q.shape[1]:
            X = X - Q @ (Q.conj().T @ X)
    return X


def _gram_schmidt(X: np.ndarray, Q: np.ndarray) -> np.ndarray | None:
    """Orthonormalize the columns of ``X`` against ``Q`` and each other.

    Classical Gram-Schmidt with re-orthogonalization; returns None when a
    column collapses below the pivot threshold.
    """
    basis = Q
    out = []
    for k in range(X.shape[1]):
        x = X[:, k]
        norm0 = np.linalg.norm(x)
        for _ in range(2):
            if basis.shape[1]:
                x = x - basis @ (basis.conj().T @ x)
        norm = np.linalg.norm(x)
        if norm0 == 0 or norm <= RANK_RTOL * norm0:
            return None
        x = x / norm
        out.append(x)
        basis = np.column_stack([basis, x]) if basis.shape[1] else x[:, None]
    return np.column_stack(out)


def auxiliary_family(template, n: int, avoid=(), mode=AuxMode.INDEPENDENT, seed=None,
                     field=None) -> WeightedFamily:
    """Random family on the template's point set whose components avoid ``avoid``.

    ``template`` is a :class:`WeightedFamily` (only its weights are used) or a
    weight vector.  INDEPENDENT mode returns ``n`` independent components
    whose span meets the span of all ``avoid`` components only in zero.
    ORTHONORMAL mode additionally makes the components orthonormal and
    orthogonal to every ``avoid`` component.  Zero-weight points get zero
    vectors.

    Raises CapacityError when the effective dimension is smaller than
    ``n + rank(avoid components)``.
    """
    mode = AuxMode(mode)
    if isinstance(template, WeightedFamily):
        weights = template.weights
    else:
        weights = np.asarray(template, dtype=float)
    avoid = list(avoid)
    for fam in avoid:
        if fam.size != weights.size or not np.array_equal(fam.weights, weights):
            raise FrameInputError("avoid families must share the template's weighted point set")
    if field is None:
        complex_ = any(f.field is FieldTag.COMPLEX for f in avoid)
        if isinstance(template, WeightedFamily):
            complex_ = complex_ or template.field is FieldTag.COMPLEX
        field = FieldTag.COMPLEX if complex_ else FieldTag.REAL
    field = FieldTag.coerce(field)

    active = weights > 0
    dim = int(active.sum())
    if avoid:
        stacked = np.column_stack([_scaled_components(f, active) for f in avoid])
        if field is FieldTag.REAL and np.any(stacked.imag != 0):
            raise FrameInputError("a REAL auxiliary cannot avoid complex components; use field='C'")
        if field is FieldTag.REAL:
            stacked = stacked.real
    else:
        stacked = np.zeros((dim, 0))
    Q = _span_basis(stacked)
    rank = Q.shape[1]
    if dim < n + rank:
        raise CapacityError(
            f"effective dimension {dim} is smaller than n + rank(avoid) = {n} + {rank}")

    rng = np.random.default_rng(seed)
    sqrt_w = np.sqrt(weights[active])
    for _ in range(MAX_AUX_DRAWS):
        X = rng.standard_normal((dim, n))
        if field is FieldTag.COMPLEX:
            X = X + 1j * rng.standard_normal((dim, n))
        if mode is AuxMode.ORTHONORMAL:
            Y = _gram_schmidt(X, Q)
            if Y is None:
                continue
        else:
            R = _project_out(X, Q)
            s = np.linalg.svd(R, compute_uv=False)
            s_all = np.linalg.svd(X, compute_uv=False)
            if s[-1] <= RANK_RTOL * s_all[0]:
                continue
            Y = X
        vectors = np.zeros((weights.size, n), dtype=Y.dtype)
        vectors[active] = Y / sqrt_w[:, None]
        return WeightedFamily(weights, vectors, field, label=f"auxiliary({mode.value})")
    raise GenerationError(f"no admissible auxiliary family after {MAX_AUX_DRAWS} draws")


def density_perturb(u: WeightedFamily, a: WeightedFamily, eps: float, seed=None,
                    tol: float | None = None) -> WeightedFamily:
    """A frame ``u + t (a - u)`` within distance ``eps`` of ``u``.

    ``a`` must be a frame on the same point set.  ``t`` is drawn uniformly
    from ``(0, eps / (||a - u|| + 1))``, so the distance ``t ||a - u||`` is
    below ``eps``; the determinant of the Gramian along the segment is a
    polynomial in ``t`` that is nonzero at ``t = 1``, hence vanishes only at
    finitely many ``t`` and a random draw avoids them.
    """
    if eps <= 0:
        raise FrameInputError("eps must be positive")
    if not u.same_points(a) or u.n != a.n:
        raise FrameInputError("u and a must share the weighted point set and dimension")
    if not is_frame(a):
        raise FrameInputError("the auxiliary family a must be a frame")
    diff = a.vectors - u.vectors
    dist = float(np.sqrt(np.sum(u.weights * np.sum(np.abs(diff) ** 2, axis=1))))
    field = FieldTag.COMPLEX if FieldTag.COMPLEX in (u.field, a.field) else FieldTag.REAL
    rng = np.random.default_rng(seed)
    hi = eps / (dist + 1.0)
    for _ in range(MAX_PERTURB_DRAWS):
        t = rng.uniform(0.0, hi)
        if t == 0.0:
            continue
        vt = u.vectors + t * diff
        if field is FieldTag.REAL:
            vt = vt.real
        cand = WeightedFamily(u.weights, vt, field, label=u.label, tail_bound=u.tail_bound)
        if is_frame(cand, tol):
            return cand
    raise GenerationError(f"no frame found near u after {MAX_PERTURB_DRAWS} draws of t")


@dataclass(frozen=True)
class PathSpec:
    """Two-leg path ``u -> a -> v`` through the auxiliary family ``a``."""

    endpoint_u: WeightedFamily
    endpoint_v: WeightedFamily
    auxiliary: WeightedFamily
    mode: PathMode = PathMode.FRAME_POLYGONAL

    def __post_init__(self):
        object.__setattr__(self, "mode", PathMode(self.mode))
        u, v, a = self.endpoint_u, self.endpoint_v, self.auxiliary
        if not (u.n == v.n == a.n):
            raise FrameInputError("path families must have the same dimension n")
        if not (u.same_points(a) and v.same_points(a)):
            raise FrameInputError("path families must share the identical weighted point set")

    def endpoint(self, leg) -> WeightedFamily:
        return self.endpoint_u if Leg(leg) is Leg.U_LEG else self.endpoint_v


def path_invariant_violations(path: PathSpec, tol: float = PATH_PARSEVAL_TOL) -> list[str]:
    """Human-readable list of broken path invariants (empty when all hold)."""
    problems = []
    u, v, a = path.endpoint_u, path.endpoint_v, path.auxiliary
    if path.mode is PathMode.FRAME_POLYGONAL:
        for name, fam in (("u", u), ("v", v), ("auxiliary", a)):
            if not is_frame(fam):
                problems.append(f"{name} is not a frame")
        return problems
    for name, fam in (("u", u), ("v", v), ("auxiliary", a)):
        dev = parseval_deviation(fam)
        if dev > tol:
            problems.append(f"{name} is not Parseval (max |U - I| = {dev:.3e})")
    for name, fam in (("u", u), ("v", v)):
        cross = float(np.max(np.abs(cross_gramian(a, fam))))
        if cross > tol:
            problems.append(f"auxiliary is not orthogonal to {name} (max cross entry {cross:.3e})")
    return problems


def build_path(u: WeightedFamily, v: WeightedFamily, mode=PathMode.FRAME_POLYGONAL,
               seed=None) -> PathSpec:
    """Draw an admissible auxiliary family and return the checked path."""
    mode = PathMode(mode)
    if not u.same_points(v):
        raise FrameInputError("endpoints must share the identical weighted point set")
    aux_mode = AuxMode.ORTHONORMAL if mode is PathMode.PARSEVAL_NORMALIZED else AuxMode.INDEPENDENT
    if mode is PathMode.PARSEVAL_NORMALIZED and effective_dimension(u) < 3 * u.n:
        raise CapacityError(
            f"Parseval paths need effective dimension >= 3n = {3 * u.n}, "
            f"got {effective_dimension(u)}")
    a = auxiliary_family(u, u.n, avoid=[u, v], mode=aux_mode, seed=seed)
    path = PathSpec(u, v, a, mode)
    problems = path_invariant_violations(path)
    if problems:
        raise FrameInputError("; ".join(problems))
    return path


def path_eval(path: PathSpec, t: float, leg=Leg.U_LEG) -> WeightedFamily:
    """Family at parameter ``t`` on the chosen leg; ``t = 1`` is the endpoint,
    ``t = 0`` the auxiliary."""
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise FrameInputError(f"path parameter t = {t!r} is outside [0, 1]")
    e = path.endpoint(leg)
    if t == 1.0:
        return e
    a = path.auxiliary
    vecs = t * e.vectors + (1.0 - t) * a.vectors
    if path.mode is PathMode.PARSEVAL_NORMALIZED:
        vecs = vecs / np.sqrt(2.0 * t * t - 2.0 * t + 1.0)
    field = FieldTag.COMPLEX if FieldTag.COMPLEX in (e.field, a.field) else FieldTag.REAL
    if field is FieldTag.REAL:
        vecs = vecs.real
    return WeightedFamily(e.weights, vecs, field)


@dataclass(frozen=True)
class PathCertificate:
    mode: PathMode
    samples: int
    passed: bool
    min_lower_bound: float
    max_parseval_deviation: float
    tolerance: float
    relative_tolerance: bool
    first_failure: tuple[str, float] | None = None
    per_sample: list = dc_field(default_factory=list, repr=False)


def certify_path(path: PathSpec, samples: int = 21, tol: float | None = None) -> PathCertificate:
    """Evaluate both legs at ``samples`` equispaced parameters and check each.

    FRAME mode checks ``lambda_min > tol`` and reports the smallest
    ``lambda_min`` seen; without ``tol`` each sample uses its own
    ``1e-10 * max(1, lambda_max)``.  PARSEVAL mode checks
    ``max |U(t) - I| <= tol`` (default 1e-9).
    """
    if samples < 2:
        raise FrameInputError("certification needs at least 2 samples")
    ts = np.linspace(0.0, 1.0, samples)
    parseval = path.mode is PathMode.PARSEVAL_NORMALIZED
    relative = False
    if tol is None:
        if parseval:
            tol = 1e-9
        else:
            tol, relative = FRAME_RTOL, True
    min_a = np.inf
    max_dev = 0.0
    first = None
    rows = []
    for leg in Leg:
        for t in ts:
            fam = path_eval(path, t, leg)
            A, B = frame_bounds(fam)
            dev = parseval_deviation(fam)
            min_a = min(min_a, A)
            max_dev = max(max_dev, dev)
            if parseval:
                ok = dev <= tol
            else:
                ok = A > (tol * max(1.0, B) if relative else tol)
            rows.append((leg.value, float(t), A, dev, ok))
            if not ok and first is None:
                first = (leg.value, float(t))
    return PathCertificate(path.mode, samples, first is None, float(min_a), float(max_dev),
                           float(tol), relative, first, rows)
