"""Reference families: the Dirichlet-series frame in C^2, quadrature circle
frames, orthonormal-component Parseval frames and seeded random families."""

from __future__ import annotations

import warnings

import numpy as np

from .errors import DegenerateFamilyWarning, FrameInputError
from .family import FieldTag, WeightedFamily

__all__ = [
    "dirichlet_example",
    "circle_frame",
    "mercedes_benz",
    "standard_basis",
    "random_family",
    "random_parseval_family",
]


def dirichlet_example(a: float, b: float, terms: int) -> WeightedFamily:
    """Truncation of ``u_k = (e^{2 pi i a k} / k, e^{2 pi i b k} / k)``, k >= 1.

    Each component has squared norm ``pi^2/6`` in the limit; the left-out
    tail ``sum_{k > terms} 1/k^2 <= 1/terms`` per component is recorded as
    ``tail_bound = 2 / terms`` on the energy.  When ``a - b`` is an integer
    the two components are proportional and the family is not a frame.
    """
    terms = int(terms)
    if terms < 1:
        raise FrameInputError("terms must be at least 1")
    diff = a - b
    if abs(diff - round(diff)) <= 1e-12:
        warnings.warn(f"a - b = {diff!r} is an integer: the components are proportional "
                      "and the family is not a frame", DegenerateFamilyWarning, stacklevel=2)
    k = np.arange(1, terms + 1, dtype=float)
    # reduce the phase mod 1 before scaling by 2 pi to keep large k accurate
    phase_a = np.mod(a * k, 1.0)
    phase_b = np.mod(b * k, 1.0)
    vectors = np.stack([np.exp(2j * np.pi * phase_a) / k,
                        np.exp(2j * np.pi * phase_b) / k], axis=1)
    return WeightedFamily(np.ones(terms), vectors, FieldTag.COMPLEX,
                          label=f"dirichlet(a={a!r}, b={b!r}, terms={terms})",
                          tail_bound=2.0 / terms)


def circle_frame(nodes: int, scale: float = 1.0) -> WeightedFamily:
    """Equispaced trapezoid discretization of ``x -> scale * (cos x, sin x)``
    on [0, 2 pi) with weights ``2 pi / nodes``; its Gramian is
    ``scale^2 * pi * I``."""
    nodes = int(nodes)
    if nodes < 3:
        raise FrameInputError("circle frame needs at least 3 nodes")
    x = 2.0 * np.pi * np.arange(nodes) / nodes
    vectors = scale * np.stack([np.cos(x), np.sin(x)], axis=1)
    return WeightedFamily(np.full(nodes, 2.0 * np.pi / nodes), vectors, FieldTag.REAL,
                          label=f"circle(nodes={nodes}, scale={scale!r})")


def mercedes_benz(scale: float = 1.0) -> WeightedFamily:
    """Three unit vectors at 120 degrees in R^2, unit weights (Gramian 3/2 I)."""
    x = 2.0 * np.pi * np.arange(3) / 3
    vectors = scale * np.stack([np.cos(x), np.sin(x)], axis=1)
    return WeightedFamily(np.ones(3), vectors, FieldTag.REAL,
                          label=f"mercedes(scale={scale!r})")


def standard_basis(n: int) -> WeightedFamily:
    return WeightedFamily(np.ones(n), np.eye(n), FieldTag.REAL, label=f"basis(n={n})")


def _normal(rng, shape, field: FieldTag) -> np.ndarray:
    x = rng.standard_normal(shape)
    if field is FieldTag.COMPLEX:
        x = x + 1j * rng.standard_normal(shape)
    return x


def random_family(points: int, n: int, field=FieldTag.REAL, seed=None) -> WeightedFamily:
    """Unit weights, i.i.d. standard normal entries (real and imaginary parts
    drawn separately for complex families)."""
    if points < 1 or n < 1:
        raise FrameInputError("points and n must be at least 1")
    field = FieldTag.coerce(field)
    rng = np.random.default_rng(seed)
    return WeightedFamily(np.ones(points), _normal(rng, (points, n), field), field,
                          label=f"random(points={points}, n={n}, seed={seed!r})")


def random_parseval_family(points: int, n: int, field=FieldTag.REAL, seed=None,
                           weights=None) -> WeightedFamily:
    """Family whose components are orthonormal in the weighted L^2 space.

    Components are a QR-orthonormalized Gaussian draw in the ``sqrt(w)``-scaled
    coordinates, so the Gramian is the identity up to roundoff.
    """
    field = FieldTag.coerce(field)
    rng = np.random.default_rng(seed)
    w = np.ones(points) if weights is None else np.asarray(weights, dtype=float)
    active = w > 0
    if int(active.sum()) < n:
        raise FrameInputError(
            f"need at least {n} positive-weight points for {n} orthonormal components")
    G = _normal(rng, (int(active.sum()), n), field)
    Q, _ = np.linalg.qr(G)
    vectors = np.zeros((points, n), dtype=Q.dtype)
    vectors[active] = Q / np.sqrt(w[active])[:, None]
    return WeightedFamily(w, vectors, field,
                          label=f"random_parseval(points={points}, n={n}, seed={seed!r})")
