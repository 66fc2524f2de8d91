"""Weighted families of vectors in F^n and their component Gramians.

A family ``u = (u_x)`` indexed by a finite weighted point set stands for
either a discrete frame (all weights 1) or a quadrature discretization of a
continuous frame (weights = quadrature weights of the measure).  Every
quantity in this package depends on the family only through weighted sums
over its points.

Inner products are linear in the first argument and conjugate-linear in the
second::

    <f, g> = sum_j w_j f_j conj(g_j)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import FrameInputError

__all__ = [
    "FieldTag",
    "WeightedFamily",
    "weighted_inner",
    "gramian",
    "total_energy",
    "component",
    "family_from_components",
    "HERMITIAN_RTOL",
    "PSD_RTOL",
]

HERMITIAN_RTOL = 1e-12
PSD_RTOL = 1e-10


class FieldTag(enum.Enum):
    REAL = "R"
    COMPLEX = "C"

    @classmethod
    def coerce(cls, value) -> "FieldTag":
        if isinstance(value, cls):
            return value
        text = str(value).upper()
        if text in ("R", "REAL"):
            return cls.REAL
        if text in ("C", "COMPLEX"):
            return cls.COMPLEX
        raise FrameInputError(f"unknown field tag {value!r}; expected 'R' or 'C'")


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class WeightedFamily:
    """A family of ``m`` vectors in F^n carried by ``m`` nonnegative weights.

    ``vectors`` has shape ``(m, n)`` and is always stored as complex; a REAL
    family is a view constrained to zero imaginary parts.  Column ``k`` of
    ``vectors`` is the k-th component function ``u^k``.
    """

    weights: np.ndarray
    vectors: np.ndarray
    field: FieldTag = FieldTag.COMPLEX
    label: str | None = None
    tail_bound: float = 0.0
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        field = FieldTag.coerce(self.field)
        w = np.asarray(self.weights, dtype=float)
        u = np.asarray(self.vectors)
        if w.ndim != 1:
            raise FrameInputError(f"weights must be one-dimensional, got shape {w.shape}")
        if u.ndim != 2:
            raise FrameInputError(f"vectors must have shape (points, n), got {u.shape}")
        if u.shape[0] != w.shape[0]:
            raise FrameInputError(
                f"{w.shape[0]} weights given for {u.shape[0]} vectors")
        if u.shape[1] < 1:
            raise FrameInputError("ambient dimension n must be positive")
        if not np.all(np.isfinite(w)):
            bad = int(np.flatnonzero(~np.isfinite(w))[0])
            raise FrameInputError(f"point {bad}: weight is not finite")
        if np.any(w < 0):
            bad = int(np.flatnonzero(w < 0)[0])
            raise FrameInputError(f"point {bad}: negative weight {w[bad]!r}")
        if not np.any(w > 0):
            raise FrameInputError("at least one weight must be positive")
        u = u.astype(complex)
        finite = np.isfinite(u).all(axis=1)
        if not finite.all():
            bad = int(np.flatnonzero(~finite)[0])
            raise FrameInputError(f"point {bad}: vector has non-finite entries")
        if field is FieldTag.REAL and np.any(u.imag != 0):
            bad = int(np.flatnonzero(np.any(u.imag != 0, axis=1))[0])
            raise FrameInputError(f"point {bad}: REAL family has a non-zero imaginary part")
        tail = float(self.tail_bound)
        if not (tail >= 0 and np.isfinite(tail)):
            raise FrameInputError(f"tail bound must be a finite nonnegative number, got {tail!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "weights", _frozen(w))
        object.__setattr__(self, "vectors", _frozen(u))
        object.__setattr__(self, "tail_bound", tail)

    @property
    def n(self) -> int:
        return self.vectors.shape[1]

    @property
    def size(self) -> int:
        """Number of points, including zero-weight ones."""
        return self.vectors.shape[0]

    def __len__(self):
        return self.size

    def components(self) -> np.ndarray:
        """Component functions as rows: array of shape ``(n, m)``."""
        return self.vectors.T

    def scaled(self, alpha) -> "WeightedFamily":
        """Every vector multiplied by the scalar ``alpha``."""
        field = self.field if np.isreal(alpha) else FieldTag.COMPLEX
        return self.replace(vectors=self.vectors * alpha, field=field)

    def replace(self, **changes) -> "WeightedFamily":
        kw = dict(weights=self.weights, vectors=self.vectors, field=self.field,
                  label=self.label, tail_bound=self.tail_bound)
        kw.update(changes)
        return WeightedFamily(**kw)

    def same_points(self, other: "WeightedFamily") -> bool:
        """True if both families live on the identical weighted point set."""
        return self.weights.shape == other.weights.shape and np.array_equal(
            self.weights, other.weights)

    def __eq__(self, other):
        if not isinstance(other, WeightedFamily):
            return NotImplemented
        return (self.field is other.field and self.label == other.label
                and self.tail_bound == other.tail_bound
                and np.array_equal(self.weights, other.weights)
                and np.array_equal(self.vectors, other.vectors))

    __hash__ = None

    def __repr__(self):
        return (f"WeightedFamily(field={self.field.value}, n={self.n}, "
                f"points={self.size}, label={self.label!r})")


def family_from_components(weights, components, field=None, **kw) -> WeightedFamily:
    """Build a family from an ``(n, m)`` array of component functions."""
    comps = np.asarray(components)
    if field is None:
        field = FieldTag.REAL if np.isrealobj(comps) or not np.any(np.imag(comps)) else FieldTag.COMPLEX
    return WeightedFamily(weights, comps.T, field, **kw)


def component(fam: WeightedFamily, k: int) -> np.ndarray:
    """The k-th component function ``x -> u_x^k`` (0-based)."""
    return fam.vectors[:, k]


def weighted_inner(f, g, fam: WeightedFamily) -> complex:
    """``sum_j w_j f_j conj(g_j)`` over the points of ``fam``."""
    f = np.asarray(f)
    g = np.asarray(g)
    m = fam.size
    if f.shape != (m,) or g.shape != (m,):
        raise FrameInputError(
            f"component lengths {f.shape} and {g.shape} do not match {m} points")
    return complex(np.sum(fam.weights * f * np.conj(g)))


def gramian(fam: WeightedFamily) -> np.ndarray:
    """Gramian of the components: ``U[k, l] = <u^k, u^l>``.

    The result is Hermitian positive semidefinite; the diagonal is real
    by construction.
    """
    cached = fam._cache.get("gramian")
    if cached is not None:
        return cached
    u = fam.vectors
    U = (u.T * fam.weights) @ u.conj()
    U = 0.5 * (U + U.conj().T)
    U.setflags(write=False)
    fam._cache["gramian"] = U
    return U


def total_energy(fam: WeightedFamily) -> float:
    """``sum_j w_j ||u_j||^2``, i.e. the squared norm in L^2(X, mu; F^n)."""
    return float(np.sum(fam.weights * np.sum(np.abs(fam.vectors) ** 2, axis=1)))
