import math

import numpy
import pytest

from latticeburgers.base.exceptions import (
    EmptyComparisonError,
    InvalidArgumentError,
    UndefinedEstimatorError,
)
from latticeburgers.calculus.operators import Field
from latticeburgers.estimator.chi import ChiReport, chi
from latticeburgers.lattice.grid import build_orthogonal
from latticeburgers.solutions.exact import SOLUTIONS, ExactSolution
from test.lattices import sampled

F1 = SOLUTIONS['f1']


def test_exact_field(orthogonal):
    report = chi(orthogonal, sampled(orthogonal), F1)
    assert report.chi == 0.0
    assert report.num_sites == 64
    assert report.excluded_sites == 0


def test_scaled_field(orthogonal):
    f = Field(1.1 * sampled(orthogonal).u)
    assert chi(orthogonal, f, F1).chi == pytest.approx(0.1)


def test_absent_sites_are_excluded(orthogonal):
    u = sampled(orthogonal).u.copy()
    u[6:, :] = numpy.nan
    u[0, 0] += 1.0
    report = chi(orthogonal, Field(u), F1)
    assert report.num_sites == 48
    assert report.excluded_sites == 16
    norm = sum(
        F1(float(orthogonal.x[n, m]), float(orthogonal.y[n, m])) ** 2
        for n in range(6)
        for m in range(8)
    )
    assert report.chi == pytest.approx(math.sqrt(1.0 / norm))


def test_sites_outside_the_domain_are_excluded():
    g = build_orthogonal(a=0.1, b=0.1, x0=0.0, y0=0.0, N=8, M=8)
    f2 = SOLUTIONS['f2']
    u = numpy.ones(g.shape)
    for n, m in g.sites():
        if m:
            u[n, m] = f2(float(g.x[n, m]), float(g.y[n, m]))
    report = chi(g, Field(u), f2)
    assert report.chi == 0.0
    assert (report.num_sites, report.excluded_sites) == (56, 8)


def test_nothing_to_compare(orthogonal):
    with pytest.raises(EmptyComparisonError):
        chi(orthogonal, Field.absent(orthogonal.shape), F1)


def test_vanishing_solution(orthogonal):
    zero = ExactSolution(id='zero', evaluate=lambda x, y: 0.0)
    with pytest.raises(UndefinedEstimatorError):
        chi(orthogonal, sampled(orthogonal), zero)


def test_shape_mismatch(orthogonal):
    with pytest.raises(InvalidArgumentError):
        chi(orthogonal, Field(numpy.zeros((3, 3))), F1)


def test_line():
    assert ChiReport(0.5, 10, 2).line() == 'chi=0.5 sites=10 excluded=2'


def test_absent_and_undefined_sites_together(orthogonal):
    g = orthogonal
    left = ExactSolution(
        id='left', evaluate=lambda x, y: math.exp(x - y), domain=lambda x, y: x < 0.55
    )
    u = 1.01 * left.sample(g.x, g.y)
    u[0, :] = numpy.nan
    report = chi(g, Field(u), left)
    assert (report.num_sites, report.excluded_sites) == (40, 24)

    kept = [(n, m) for n in range(1, 6) for m in range(8)]
    error = sum((u[p] - left(float(g.x[p]), float(g.y[p]))) ** 2 for p in kept)
    norm = sum(left(float(g.x[p]), float(g.y[p])) ** 2 for p in kept)
    assert report.chi == pytest.approx(math.sqrt(error / norm))
