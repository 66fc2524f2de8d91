import numpy as np
import pytest

from contframes import (AuxMode, CapacityError, FrameInputError, Leg, PathMode, PathSpec,
                        WeightedFamily, auxiliary_family, build_path, certify_path,
                        cross_gramian, density_perturb, effective_dimension, frame_bounds,
                        gramian, is_frame, mercedes_benz, path_eval, random_family,
                        random_parseval_family, total_energy)
from contframes.topology import path_invariant_violations

from oracles import row_reduction_rank


def test_effective_dimension():
    assert effective_dimension(np.ones(5)) == 5
    assert effective_dimension(np.array([1, 0, 1, 0, 1.0])) == 3
    fam = WeightedFamily([1, 0, 2], np.ones((3, 2)))
    assert effective_dimension(fam) == 2


def test_effective_dimension_dirichlet():
    from contframes import dirichlet_example
    assert effective_dimension(dirichlet_example(0.5, 0, 1000)) == 1000


def _stacked_rank(fams):
    M = np.column_stack([np.sqrt(f.weights)[:, None] * f.vectors for f in fams])
    return row_reduction_rank(M, 1e-10)


def test_auxiliary_independent_no_avoid():
    a = auxiliary_family(np.ones(6), 2, seed=0)
    assert a.n == 2 and is_frame(a)


def test_auxiliary_independent_avoids_span():
    u = random_family(8, 2, seed=1)
    v = random_family(8, 2, seed=2)
    a = auxiliary_family(u, 2, avoid=[u, v], seed=3)
    assert _stacked_rank([u, v, a]) == 6


def test_auxiliary_orthonormal_complement_support():
    n = 2
    w = np.ones(6)
    avoid = WeightedFamily(w, np.eye(6)[:, :2 * n])  # components e_1..e_4
    a = auxiliary_family(w, n, avoid=[avoid], mode=AuxMode.ORTHONORMAL, seed=0)
    assert np.max(np.abs(a.vectors[:2 * n])) < 1e-12
    np.testing.assert_allclose(gramian(a), np.eye(n), atol=1e-10)


def test_auxiliary_orthonormal_weighted():
    w = np.array([0.5, 2.0, 0.0, 1.0, 3.0, 0.25, 1.5, 0.75, 1.0])
    u = random_parseval_family(9, 2, "C", seed=1, weights=w)
    v = random_parseval_family(9, 2, "C", seed=2, weights=w)
    a = auxiliary_family(u, 2, avoid=[u, v], mode="orthonormal", seed=4)
    np.testing.assert_allclose(gramian(a), np.eye(2), atol=1e-10)
    assert np.max(np.abs(cross_gramian(a, u))) <= 1e-10
    assert np.max(np.abs(cross_gramian(a, v))) <= 1e-10
    assert np.all(a.vectors[2] == 0)


def test_auxiliary_capacity_error():
    # avoid has rank r = 3 on 4 points; n = 2 needs 5
    fam = WeightedFamily(np.ones(4), np.eye(4)[:, :3])
    with pytest.raises(CapacityError):
        auxiliary_family(fam, 2, avoid=[fam])


def test_density_perturb_frame_stays_close():
    u = random_family(6, 2, seed=0)
    a = auxiliary_family(u, 2, seed=1)
    out = density_perturb(u, a, 0.5, seed=2)
    assert is_frame(out)


@pytest.mark.parametrize("eps", [1e-1, 1e-3])
def test_density_perturb_repairs_non_frame(eps):
    rng = np.random.default_rng(11)
    base = rng.standard_normal(5)
    u = WeightedFamily(np.ones(5), np.column_stack([base, base]), "R")
    a = WeightedFamily(np.ones(5), np.eye(5)[:, :2], "R")
    assert not is_frame(u)
    out = density_perturb(u, a, eps, seed=3)
    dist = np.sqrt(total_energy(out.replace(vectors=out.vectors - u.vectors)))
    assert dist <= eps
    assert is_frame(out)
    assert np.prod(np.linalg.eigvalsh(gramian(out))) > 0


def test_density_perturb_deterministic():
    u = WeightedFamily(np.ones(4), np.zeros((4, 2)), "R")
    a = WeightedFamily(np.ones(4), np.eye(4)[:, :2], "R")
    assert density_perturb(u, a, 0.1, seed=7) == density_perturb(u, a, 0.1, seed=7)


def test_density_perturb_needs_frame_auxiliary():
    u = random_family(4, 2, seed=0)
    with pytest.raises(FrameInputError):
        density_perturb(u, WeightedFamily(np.ones(4), np.zeros((4, 2))), 0.1)


def _parseval_path():
    n = 2
    w = np.ones(6)
    u = np.zeros((6, n))
    u[:3] = mercedes_benz(np.sqrt(2 / 3)).vectors.real
    th = 0.7
    v = np.zeros((6, n))
    v[3:5] = [[np.cos(th), np.sin(th)], [-np.sin(th), np.cos(th)]]
    return WeightedFamily(w, u, "R"), WeightedFamily(w, v, "R")


def test_path_eval_endpoints():
    u, v = random_family(6, 2, seed=0), random_family(6, 2, seed=1)
    path = build_path(u, v, "frame", seed=2)
    assert path_eval(path, 1.0) is u or np.array_equal(path_eval(path, 1.0).vectors, u.vectors)
    assert np.array_equal(path_eval(path, 1.0, Leg.V_LEG).vectors, v.vectors)
    assert np.array_equal(path_eval(path, 0.0).vectors, path.auxiliary.vectors)


def test_path_eval_parseval_midpoint():
    u, v = _parseval_path()
    path = build_path(u, v, "parseval", seed=0)
    mid = path_eval(path, 0.5)
    np.testing.assert_allclose(mid.vectors, (u.vectors + path.auxiliary.vectors) / np.sqrt(2),
                               atol=1e-15)
    np.testing.assert_allclose(gramian(mid), (gramian(u) + np.eye(2)) / 2, atol=1e-12)
    np.testing.assert_allclose(gramian(mid), np.eye(2), atol=1e-12)


def test_path_eval_rejects_t():
    u, v = random_family(6, 2, seed=0), random_family(6, 2, seed=1)
    path = build_path(u, v, seed=2)
    with pytest.raises(FrameInputError):
        path_eval(path, 1.5)


def test_certify_frame_path():
    u, v = random_family(12, 2, seed=5), random_family(12, 2, seed=6)
    cert = certify_path(build_path(u, v, seed=1), 21)
    assert cert.passed and cert.min_lower_bound > 0
    # oracle: per-sample eigenvalues recomputed independently
    path = build_path(u, v, seed=1)
    lows = [np.linalg.eigvalsh(gramian(path_eval(path, t, leg)))[0]
            for leg in Leg for t in np.linspace(0, 1, 21)]
    assert min(lows) == pytest.approx(cert.min_lower_bound, rel=1e-9)


def test_certify_parseval_path():
    u, v = _parseval_path()
    cert = certify_path(build_path(u, v, "parseval", seed=3), 21)
    assert cert.passed and cert.max_parseval_deviation <= 1e-9


def test_certify_negative_control():
    u, v = _parseval_path()
    bad_aux = random_parseval_family(6, 2, "R", seed=0)
    path = PathSpec(u, v, bad_aux, PathMode.PARSEVAL_NORMALIZED)
    assert path_invariant_violations(path)
    cert = certify_path(path, 21)
    assert not cert.passed
    leg, t = cert.first_failure
    assert leg in ("u", "v") and 0.0 < t < 1.0


def test_build_path_parseval_needs_3n():
    w = np.ones(5)
    u = random_parseval_family(5, 2, seed=0)
    v = random_parseval_family(5, 2, seed=1)
    with pytest.raises(CapacityError):
        build_path(u, v, "parseval")


def test_pathspec_requires_shared_points():
    u = random_family(6, 2, seed=0)
    v = random_family(7, 2, seed=1)
    with pytest.raises(FrameInputError):
        PathSpec(u, v, u)
