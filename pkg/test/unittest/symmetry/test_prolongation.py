import numpy
import pytest

from latticeburgers.base.exceptions import OutOfBoundsError
from latticeburgers.calculus.operators import Field, jet
from latticeburgers.lattice.grid import Grid, diffs_at
from latticeburgers.symmetry.flows import Generator, GroupFlow, apply_flow, generator
from latticeburgers.symmetry.prolongation import (
    OFFSETS,
    lattice_wave_residuals,
    prolongation_coeffs,
    wave_residual,
)
from test.lattices import sampled, skewed

STEP = 1e-5


def test_separable_coefficients_have_no_wave_residual(exponential):
    rng = numpy.random.default_rng(4)
    p, q = rng.normal(size=exponential.N), rng.normal(size=exponential.M)
    f = Field(p[:, None] + q[None, :])
    for n in range(exponential.N - 1):
        for m in range(exponential.M - 1):
            value = wave_residual(lambda x, y, u: u, exponential, f, n, m)
            assert value == pytest.approx(0.0, abs=1e-12)


def test_wave_residual_bounds(orthogonal):
    f = Field(numpy.zeros(orthogonal.shape))
    with pytest.raises(OutOfBoundsError):
        wave_residual(lambda x, y, u: x, orthogonal, f, orthogonal.N - 1, 0)


@pytest.mark.parametrize('generator_id', list(Generator)[:5])
def test_preserved_generators_fit_schwarzian_lattices(
    generator_id, orthogonal, schwarzian
):
    for g in (orthogonal, schwarzian):
        found = lattice_wave_residuals(g, generator_id)
        assert found.xi == pytest.approx(0.0, abs=1e-12)
        assert found.tau == pytest.approx(0.0, abs=1e-12)


def test_dilation_does_not_fit_the_exponential_lattice(exponential):
    a, c = 0.1, 0.15
    for generator_id in ('V1', 'V2', 'V3', 'V5'):
        found = lattice_wave_residuals(exponential, generator_id)
        assert found.xi == pytest.approx(0.0, abs=1e-12)
        assert found.tau == pytest.approx(0.0, abs=1e-12)

    found = lattice_wave_residuals(exponential, 'V4')
    assert found.xi == pytest.approx(c * (1 + c) ** 6 * a)
    assert found.tau == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize('lattice', ('orthogonal', 'schwarzian'))
def test_projective_wave_residuals_on_schwarzian_lattices(lattice, request):
    g = request.getfixturevalue(lattice)
    v = generator('V6')
    f = Field(numpy.zeros(g.shape))
    for n in range(g.N - 1):
        for m in range(g.M - 1):
            d = diffs_at(g, n, m)
            assert wave_residual(v.xi, g, f, n, m) == pytest.approx(
                -4 * (d.hx * d.hy + d.sx * d.sy), abs=1e-12
            )
            assert wave_residual(v.tau, g, f, n, m) == pytest.approx(
                -8 * d.hy * d.sy, abs=1e-12
            )


def test_projective_wave_residuals_on_the_exponential_lattice(exponential):
    b, c = 0.1, 0.15
    v = generator('V6')
    f = Field(numpy.zeros(exponential.shape))
    for n in range(exponential.N - 1):
        for m in range(exponential.M - 1):
            d = diffs_at(exponential, n, m)
            y = exponential.y[n, m]
            assert wave_residual(v.xi, exponential, f, n, m) == pytest.approx(
                -4 * d.hx * (c * y + (1 + c) * b), abs=1e-12
            )
            assert wave_residual(v.tau, exponential, f, n, m) == pytest.approx(
                0.0, abs=1e-12
            )
    assert lattice_wave_residuals(exponential, 'V6').xi > 0


def _moved_jet(g: Grid, f: Field, flow: GroupFlow, n: int, m: int):
    x, y, u = apply_flow(flow, g.x, g.y, f.u)
    moved_g, moved_f = Grid(x=x, y=y), Field(u)
    j = jet(moved_g, moved_f, n, m)
    cells = {k: diffs_at(moved_g, n + k[0], m + k[1]) for k in OFFSETS}
    return j, cells


def _derivative(g, f, generator_id, n, m):
    """
    Central difference in the group parameter of every prolonged quantity.
    """
    forward = _moved_jet(g, f, GroupFlow(generator_id, STEP), n, m)
    backward = _moved_jet(g, f, GroupFlow(generator_id, -STEP), n, m)

    def rate(name, k=None):
        if k is None:
            return (getattr(forward[0], name) - getattr(backward[0], name)) / (
                2 * STEP
            )
        return (getattr(forward[1][k], name) - getattr(backward[1][k], name)) / (
            2 * STEP
        )

    return rate


@pytest.mark.parametrize('generator_id', list(Generator))
@pytest.mark.parametrize('lattice', ('exponential', 'schwarzian'))
def test_prolongation_matches_the_flow(generator_id, lattice, request):
    g = request.getfixturevalue(lattice)
    f = sampled(g, lambda x, y: 0.3 * x * x - 0.7 * x * y + numpy.sin(2 * y))
    n, m = 2, 3
    v = generator(generator_id)
    coeffs = prolongation_coeffs(v.xi, v.tau, v.phi, g, f, n, m)
    rate = _derivative(g, f, generator_id, n, m)

    for k in OFFSETS:
        assert coeffs.eta_x[k] == pytest.approx(rate('hx', k), rel=1e-6, abs=1e-8)
        assert coeffs.eta_y[k] == pytest.approx(rate('hy', k), rel=1e-6, abs=1e-8)
        assert coeffs.chi_x[k] == pytest.approx(rate('sx', k), rel=1e-6, abs=1e-8)
        assert coeffs.chi_y[k] == pytest.approx(rate('sy', k), rel=1e-6, abs=1e-8)

    expected = {
        'phi_x': rate('ux'),
        'phi_y': rate('uy'),
        'phi_xx': rate('uxx'),
        'phi_xy': rate('uxy'),
        'phi_yy': rate('uyy'),
    }
    for name, value in expected.items():
        assert getattr(coeffs, name) == pytest.approx(value, rel=1e-5, abs=1e-6), name


def test_prolongation_on_a_coarse_skewed_lattice():
    g = skewed(a=0.5, s=0.2, t=0.1, b=0.4, N=4, M=4)
    f = sampled(g)
    v = generator('V5')
    coeffs = prolongation_coeffs(v.xi, v.tau, v.phi, g, f, 0, 0)
    rate = _derivative(g, f, 'V5', 0, 0)
    assert coeffs.phi_xx == pytest.approx(rate('uxx'), rel=1e-5, abs=1e-6)
