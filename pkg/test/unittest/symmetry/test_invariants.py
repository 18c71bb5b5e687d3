import math

import numpy
import pytest

from latticeburgers.base.config import BoundaryMode
from latticeburgers.base.exceptions import (
    InvalidArgumentError,
    InvalidStencilError,
    InvariantUndefinedError,
    OutOfBoundsError,
)
from latticeburgers.scheme.burgers import EvolutionConfig, evolve
from latticeburgers.solutions.exact import f1, f2, solution
from latticeburgers.symmetry.flows import PRESERVED, GroupFlow
from latticeburgers.symmetry.invariants import (
    NAMES,
    SchemeData,
    flow_invariance_test,
    invariant_spread,
    invariants,
    non_constant,
    scheme_data,
)
from test.lattices import sampled, stable

EPSILONS = -0.5, -0.1, 0.1, 0.5
STENCILS = (0, 0), (2, 3), (5, 5)


def test_orthogonal_values(orthogonal):
    found = invariants(scheme_data(orthogonal, sampled(orthogonal), 1, 2))
    a = b = 0.1
    assert found.k1 == pytest.approx(1.0)
    assert found.k2 == pytest.approx(1.0)
    assert found.k3 == found.k4 == 0.0
    assert found.k5 == pytest.approx(a / math.sqrt(b))
    assert found.k6 == pytest.approx(0.0, abs=1e-12)
    assert found.k7 == pytest.approx(0.0, abs=1e-12)
    assert found.k8 == 0.0
    assert found.k9 == pytest.approx(a / math.sqrt(b))
    assert found.k10 * found.i1 == pytest.approx(1.0)
    assert list(found.values()) == list(NAMES)


def test_spread(orthogonal, exponential):
    assert non_constant(invariant_spread(orthogonal, sampled(orthogonal))) == [
        'k10',
        'i1',
    ]

    varying = non_constant(invariant_spread(exponential, sampled(exponential)))
    assert {'k5', 'k6', 'k9'} <= set(varying)
    assert not {'k1', 'k2', 'k3', 'k4', 'k7', 'k8'} & set(varying)


@pytest.mark.parametrize('generator_id', PRESERVED)
@pytest.mark.parametrize('epsilon', EPSILONS)
@pytest.mark.parametrize('lattice', ('orthogonal', 'exponential'))
def test_invariance_under_preserved_flows(generator_id, epsilon, lattice, request):
    g = request.getfixturevalue(lattice)
    f = sampled(g)
    flow = GroupFlow(generator_id, epsilon)
    for n, m in STENCILS:
        assert flow_invariance_test(scheme_data(g, f, n, m), flow) <= 1e-9


def test_invariance_with_f2_data(exponential):
    f = sampled(exponential, f2)
    for generator_id in PRESERVED:
        flow = GroupFlow(generator_id, 0.1)
        assert flow_invariance_test(scheme_data(exponential, f, 2, 2), flow) <= 1e-9


def test_projective_flow_breaks_invariance(orthogonal):
    data = scheme_data(orthogonal, sampled(orthogonal), 0, 0)
    assert flow_invariance_test(data, GroupFlow('V6', 0.01)) > 1e-3


@pytest.mark.parametrize('generator_id', PRESERVED)
def test_scheme_stencils_stay_on_the_scheme(generator_id):
    for g in (stable('orthogonal'), stable('exponential')):
        cfg = EvolutionConfig(BoundaryMode.ORACLE, oracle=f1, steps=g.M - 1)
        f = evolve(g, sampled(g), cfg)
        for n, m in ((0, 0), (3, 4)):
            data = scheme_data(g, f, n, m)
            assert abs(data.residual()) <= 1e-12
            for epsilon in (-0.5, 0.5):
                moved = data.transform(GroupFlow(generator_id, epsilon))
                assert abs(moved.residual()) <= 1e-9


def test_undefined_components(orthogonal):
    data = scheme_data(orthogonal, sampled(orthogonal, lambda x, y: x + 2 * y), 0, 0)
    with pytest.raises(InvariantUndefinedError) as e:
        invariants(data)
    assert e.value.components == ('k10',)

    found = invariants(data, allow_undefined=True)
    assert found.k10 is None
    assert found.i1 == pytest.approx(0.0, abs=1e-9)
    assert found.undefined == ('k10',)


def test_steep_field_keeps_k10(orthogonal):
    c = 2.5e-8
    data = scheme_data(
        orthogonal, sampled(orthogonal, lambda x, y: x + 1000 * y + c * x * x), 0, 0
    )
    found = invariants(data)
    assert found.k10 is not None
    assert found.k10 == pytest.approx((1000.0 - 1.0) / (2 * c), rel=1e-3)


def test_decreasing_rows_are_rejected():
    data = SchemeData(
        x=[0.0, 0.1, 0.0, 0.2, 0.1, 0.0],
        y=[0.0, 0.0, -0.1, 0.0, -0.1, -0.2],
        u=[0.0, 0.1, 0.2, 0.3, 0.4, 0.5],
    )
    with pytest.raises(InvalidStencilError):
        invariants(data)


def test_scheme_data_bounds(orthogonal):
    f = sampled(orthogonal)
    with pytest.raises(OutOfBoundsError):
        scheme_data(orthogonal, f, orthogonal.N - 2, 0)


def test_scheme_data_shape():
    with pytest.raises(InvalidArgumentError):
        SchemeData(x=[0.0] * 5, y=[0.0] * 6, u=[0.0] * 6)


def test_embed_round_trip(exponential):
    f = sampled(exponential, solution('f1'))
    data = scheme_data(exponential, f, 2, 1)
    g, u = data.embed()
    assert numpy.isnan(g.x[2, 2]) and numpy.isnan(u.u[1, 2])
    assert data.jet().u == f.u[2, 1]
    assert g.x[1, 1] == exponential.x[3, 2]
