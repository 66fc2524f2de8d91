"""Analysis, synthesis and frame operators on extended test spaces.

A test family ``tv = (v_y)`` with weights ``nu_y`` is an element of
L^2(Y, nu; F^n); unit weights give the l^2(J; F^n) case.  The extended
analysis operator pairs every test vector with every frame vector,

    T tv = (<v_y, u_x>)_{x, y}          in L^2(X x Y, mu x nu; F),

its adjoint integrates coefficients against the frame over X,

    T* c = (sum_x mu_x c_{x, y} u_x)_y,

and ``S = T* T`` acts on each test vector separately with the classical frame
operator, i.e. it is block diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .frame_analysis import frame_bounds, is_frame, quotient_N, quotient_N_extended
from .errors import FrameInputError
from .family import FieldTag, WeightedFamily, total_energy

__all__ = [
    "CoefficientField",
    "TestFamily",
    "frame_operator_apply",
    "analysis",
    "synthesis",
    "extended_frame_operator",
    "extended_frame_matrix",
    "coefficient_inner",
    "family_inner",
    "delta_embedding",
    "indicator_embedding",
    "ExtensionReport",
    "extension_equivalence_check",
]

# A test family is represented exactly like a frame family.
TestFamily = WeightedFamily


@dataclass(frozen=True, eq=False)
class CoefficientField:
    """Dense X x Y array ``values[i, j] = <v_j, u_i>`` with both weight vectors."""

    x_weights: np.ndarray
    y_weights: np.ndarray
    values: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        xw = np.asarray(self.x_weights, dtype=float)
        yw = np.asarray(self.y_weights, dtype=float)
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (xw.size, yw.size):
            raise FrameInputError(
                f"coefficient array has shape {vals.shape}, expected {(xw.size, yw.size)}")
        object.__setattr__(self, "x_weights", xw)
        object.__setattr__(self, "y_weights", yw)
        object.__setattr__(self, "values", vals)

    @property
    def shape(self):
        return self.values.shape

    def norm2(self) -> float:
        """Weighted square sum ``sum_ij mu_i nu_j |c_ij|^2``."""
        w = self.x_weights[:, None] * self.y_weights[None, :]
        return float(np.sum(w * np.abs(self.values) ** 2))


def _check_dim(fam: WeightedFamily, n: int, what: str):
    if fam.n != n:
        raise FrameInputError(f"{what} lives in F^{n} but the frame family in F^{fam.n}")


def frame_operator_apply(fam: WeightedFamily, v) -> np.ndarray:
    """Classical frame operator ``S v = sum_i w_i <v, u_i> u_i``."""
    v = np.asarray(v, dtype=complex)
    if v.shape != (fam.n,):
        raise FrameInputError(f"vector has shape {v.shape}, expected ({fam.n},)")
    coeffs = fam.weights * (fam.vectors.conj() @ v)
    return coeffs @ fam.vectors


def analysis(fam: WeightedFamily, tv: TestFamily) -> CoefficientField:
    _check_dim(fam, tv.n, "test family")
    c = fam.vectors.conj() @ tv.vectors.T
    return CoefficientField(fam.weights, tv.weights, c)


def synthesis(fam: WeightedFamily, c: CoefficientField) -> TestFamily:
    """Block ``j`` of the result is ``sum_i w_i c_ij u_i``; Y-weights are kept."""
    if c.values.shape[0] != fam.size:
        raise FrameInputError(
            f"coefficient field has {c.values.shape[0]} rows, family has {fam.size} points")
    if not np.array_equal(c.x_weights, fam.weights):
        raise FrameInputError("coefficient field X-weights differ from the family weights")
    blocks = c.values.T @ (fam.weights[:, None] * fam.vectors)
    return WeightedFamily(c.y_weights, blocks, FieldTag.COMPLEX)


def extended_frame_operator(fam: WeightedFamily, tv: TestFamily) -> TestFamily:
    """``S^J tv``: the classical frame operator applied to each block."""
    _check_dim(fam, tv.n, "test family")
    out = np.empty_like(tv.vectors)
    for j in range(tv.size):
        out[j] = frame_operator_apply(fam, tv.vectors[j])
    field = FieldTag.REAL if fam.field is tv.field is FieldTag.REAL else FieldTag.COMPLEX
    if field is FieldTag.REAL:
        out = out.real
    return WeightedFamily(tv.weights, out, field)


def extended_frame_matrix(fam: WeightedFamily, blocks: int) -> np.ndarray:
    """Matrix of ``S^J`` on ``blocks`` unit-weight blocks, column by column.

    Built by applying :func:`extended_frame_operator` to the standard basis of
    (F^n)^blocks, so it reflects the operator as implemented.
    """
    n = fam.n
    dim = n * blocks
    M = np.zeros((dim, dim), dtype=complex)
    ones = np.ones(blocks)
    for col in range(dim):
        e = np.zeros((blocks, n), dtype=complex)
        e[col // n, col % n] = 1.0
        M[:, col] = extended_frame_operator(fam, WeightedFamily(ones, e)).vectors.reshape(-1)
    return M


def coefficient_inner(c: CoefficientField, d: CoefficientField) -> complex:
    """Weighted inner product on L^2(X x Y)."""
    w = c.x_weights[:, None] * c.y_weights[None, :]
    return complex(np.sum(w * c.values * d.values.conj()))


def family_inner(tv: TestFamily, sv: TestFamily) -> complex:
    """Weighted inner product on L^2(Y, nu; F^n)."""
    if not tv.same_points(sv) or tv.n != sv.n:
        raise FrameInputError("test families must share points and dimension")
    return complex(np.sum(tv.weights * np.sum(tv.vectors * sv.vectors.conj(), axis=1)))


def delta_embedding(v, blocks: int = 1, index: int = 0, weights=None) -> TestFamily:
    """Test family equal to ``v`` at one index and zero elsewhere."""
    v = np.asarray(v, dtype=complex)
    weights = np.ones(blocks) if weights is None else np.asarray(weights, dtype=float)
    vecs = np.zeros((weights.size, v.size), dtype=complex)
    vecs[index] = v
    return WeightedFamily(weights, vecs)


def indicator_embedding(v, weights, support) -> TestFamily:
    """Test family ``y -> f(y) v`` with ``f = 1_D / sqrt(nu(D))``."""
    v = np.asarray(v, dtype=complex)
    weights = np.asarray(weights, dtype=float)
    mask = np.zeros(weights.size, dtype=bool)
    mask[np.asarray(support)] = True
    measure = float(np.sum(weights[mask]))
    if measure <= 0.0:
        raise FrameInputError("indicator support must have positive measure")
    f = mask / np.sqrt(measure)
    return WeightedFamily(weights, f[:, None] * v[None, :])


@dataclass(frozen=True)
class ExtensionReport:
    lower_bound: float
    upper_bound: float
    is_frame: bool
    trials: int
    blocks: int
    max_bound_violation: float
    max_delta_error: float
    max_indicator_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return (self.max_bound_violation <= self.tolerance
                and self.max_delta_error <= self.tolerance
                and self.max_indicator_error <= self.tolerance)


def _rel(value, ref):
    return abs(value - ref) / ref if ref > 0 else abs(value)


def _random_vectors(rng, shape, complex_):
    x = rng.standard_normal(shape)
    if complex_:
        x = x + 1j * rng.standard_normal(shape)
    return x


def extension_equivalence_check(fam: WeightedFamily, trials: int = 100, blocks: int = 2,
                                seed=None, tol: float = 1e-10) -> ExtensionReport:
    """Exercise the equivalence between classical and extended frames.

    (a) for random multi-block test families, the quadratic form of the
        extended frame operator lies in ``[A, B] * energy``;
    (b) a delta embedding of ``v`` reproduces ``quotient_N(v)``;
    (c) an indicator embedding ``1_D / sqrt(nu(D)) * v`` does too.

    Violations are measured relative to ``max(1, B)`` times the energy.
    """
    if trials < 1 or blocks < 1:
        raise FrameInputError("trials and blocks must be at least 1")
    rng = np.random.default_rng(seed)
    A, B = frame_bounds(fam)
    cplx = fam.field is FieldTag.COMPLEX
    scale = max(1.0, B)
    bound_v = delta_err = ind_err = 0.0
    for _ in range(trials):
        weights = rng.uniform(0.1, 2.0, size=blocks)
        vecs = _random_vectors(rng, (blocks, fam.n), cplx)
        tv = WeightedFamily(weights, vecs)
        energy = total_energy(tv)
        q = family_inner(extended_frame_operator(fam, tv), tv).real
        lo = A * energy - q
        hi = q - B * energy
        bound_v = max(bound_v, lo / (scale * energy), hi / (scale * energy))

        v = _random_vectors(rng, fam.n, cplx)
        ref = quotient_N(v, fam)
        idx = int(rng.integers(blocks))
        dq = quotient_N_extended(delta_embedding(v, blocks, idx, weights=np.ones(blocks)), fam)
        delta_err = max(delta_err, _rel(dq, ref))

        support = rng.permutation(blocks)[: int(rng.integers(1, blocks + 1))]
        iq = quotient_N_extended(indicator_embedding(v, weights, support), fam)
        ind_err = max(ind_err, _rel(iq, ref))

    return ExtensionReport(A, B, is_frame(fam), trials, blocks,
                           max(bound_v, 0.0), delta_err, ind_err, tol)
