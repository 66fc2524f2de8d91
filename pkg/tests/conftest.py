import numpy as np
import pytest

from contframes import WeightedFamily, dirichlet_example

# Brute-force partial sums at N = 10^5 (math.fsum, cross-checked with mpmath):
#   sum 1/k^2 and sum (-1)^k / k^2 for k = 1..N
DIRICHLET_TERMS = 10**5
SUM_INV_SQ = 1.6449240668982263
SUM_ALT_INV_SQ = -0.8224670333741138


@pytest.fixture(scope="session")
def dirichlet_half():
    return dirichlet_example(0.5, 0.0, DIRICHLET_TERMS)


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


def random_complex_family(rng, points, n, field="C"):
    vecs = rng.standard_normal((points, n))
    if field == "C":
        vecs = vecs + 1j * rng.standard_normal((points, n))
    weights = rng.uniform(0.1, 2.0, size=points)
    return WeightedFamily(weights, vecs, field)


def pytest_terminal_summary(terminalreporter):
    reports = [r for r in terminalreporter.getreports("passed") + terminalreporter.getreports("failed")
               if "test_acceptance.py" in r.nodeid and r.when == "call"]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        name = r.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if r.passed else 'FAIL'}  {name}")
