"""
Point symmetries of the potential Burgers equation ``u_y = u_xx + u_x^2``
and their exact one-parameter flows::

    V1 = d/dx     V2 = d/dy     V3 = d/du     V4 = x d/dx + 2y d/dy
    V5 = 2y d/dx - x d/du       V6 = 4xy d/dx + 4y^2 d/dy - (x^2 + 2y) d/du
"""

from __future__ import annotations

import dataclasses as dc
import enum
import typing as t

import numpy

from latticeburgers.base.exceptions import FlowSingularityError, InvalidArgumentError

Number = t.Union[float, numpy.ndarray]
Point = t.Tuple[Number, Number, Number]
Coefficient = t.Callable[[Number, Number, Number], Number]


class Generator(str, enum.Enum):
    V1 = 'V1'
    V2 = 'V2'
    V3 = 'V3'
    V4 = 'V4'
    V5 = 'V5'
    V6 = 'V6'


# The subalgebra the scheme preserves
PRESERVED = (Generator.V1, Generator.V2, Generator.V3, Generator.V4, Generator.V5)


@dc.dataclass(frozen=True)
class VectorField:
    '''
    Infinitesimal coefficients ``xi d/dx + tau d/dy + phi d/du``.
    '''

    xi: Coefficient
    tau: Coefficient
    phi: Coefficient

    def __call__(self, x: Number, y: Number, u: Number) -> numpy.ndarray:
        return numpy.array(
            [
                self.xi(x, y, u) + 0.0 * x,
                self.tau(x, y, u) + 0.0 * y,
                self.phi(x, y, u) + 0.0 * u,
            ]
        )


def _const(value: float) -> Coefficient:
    return lambda x, y, u: value


_FIELDS: t.Dict[Generator, VectorField] = {
    Generator.V1: VectorField(_const(1.0), _const(0.0), _const(0.0)),
    Generator.V2: VectorField(_const(0.0), _const(1.0), _const(0.0)),
    Generator.V3: VectorField(_const(0.0), _const(0.0), _const(1.0)),
    Generator.V4: VectorField(
        lambda x, y, u: x, lambda x, y, u: 2 * y, _const(0.0)
    ),
    Generator.V5: VectorField(
        lambda x, y, u: 2 * y, _const(0.0), lambda x, y, u: -x
    ),
    Generator.V6: VectorField(
        lambda x, y, u: 4 * x * y,
        lambda x, y, u: 4 * y * y,
        lambda x, y, u: -(x * x + 2 * y),
    ),
}

# Lie brackets [row, column] of the preserved subalgebra
_TABLE: t.Dict[t.Tuple[Generator, Generator], t.Dict[Generator, float]] = {
    (Generator.V1, Generator.V4): {Generator.V1: 1.0},
    (Generator.V1, Generator.V5): {Generator.V3: -1.0},
    (Generator.V2, Generator.V4): {Generator.V2: 2.0},
    (Generator.V2, Generator.V5): {Generator.V1: 2.0},
    (Generator.V4, Generator.V5): {Generator.V5: 1.0},
}


def generator(id: t.Union[Generator, str]) -> VectorField:
    """
    The infinitesimal coefficients of a generator.

    :param id: One of V1..V6
    """
    return _FIELDS[_generator(id)]


def _generator(id: t.Union[Generator, str]) -> Generator:
    try:
        return Generator(id)
    except ValueError:
        raise InvalidArgumentError(f'Unknown generator {id!r}')


def bracket(a: t.Union[Generator, str], b: t.Union[Generator, str]):
    """
    ``[a, b]`` as a map from generator to coefficient; empty when they commute.
    Only the preserved subalgebra V1..V5 is tabulated.
    """
    a, b = _generator(a), _generator(b)
    for g in (a, b):
        if g not in PRESERVED:
            raise InvalidArgumentError(f'{g.value} is outside the preserved algebra')
    if (a, b) in _TABLE:
        return dict(_TABLE[a, b])
    if (b, a) in _TABLE:
        return {k: -v for k, v in _TABLE[b, a].items()}
    return {}


@dc.dataclass(frozen=True)
class GroupFlow:
    '''
    The exact one-parameter transformation generated by one symmetry.

    :param generator_id: One of V1..V6
    :param epsilon: The group parameter
    '''

    generator_id: Generator
    epsilon: float

    def __post_init__(self):
        object.__setattr__(self, 'generator_id', _generator(self.generator_id))

    def __call__(self, x: Number, y: Number, u: Number) -> Point:
        return apply_flow(self, x, y, u)

    def inverse(self) -> GroupFlow:
        return GroupFlow(self.generator_id, -self.epsilon)


def apply_flow(flow: GroupFlow, x: Number, y: Number, u: Number) -> Point:
    """
    Transform ``(x, y, u)``; works elementwise on arrays.

    :param flow: The flow
    :param x: x coordinate(s)
    :param y: y coordinate(s)
    :param u: value(s) of the dependent variable
    """
    e = flow.epsilon
    g = flow.generator_id
    if g == Generator.V1:
        return x + e, y, u
    if g == Generator.V2:
        return x, y + e, u
    if g == Generator.V3:
        return x, y, u + e
    if g == Generator.V4:
        return numpy.exp(e) * x, numpy.exp(2 * e) * y, u
    if g == Generator.V5:
        return x + 2 * e * y, y, u - e * x - e * e * y

    # V6; the u component is fixed by u(0) = u
    w = 1 - 4 * e * numpy.asarray(y)
    if numpy.any(w <= 0):
        raise FlowSingularityError(
            f'V6 flow with epsilon={e} needs 1 - 4 epsilon y > 0 at every point'
        )
    return x / w, y / w, u - e * x * x / w + 0.5 * numpy.log(w)


@dc.dataclass(frozen=True)
class CommutatorReport:
    '''
    Observed and tabulated commutator of two flows at a point.

    :param observed: Displacement of the group commutator divided by delta^2
    :param expected: The tabulated bracket evaluated at the point
    :param error: |observed - expected| / |expected|, or |observed| when the
                  bracket vanishes
    '''

    a: Generator
    b: Generator
    observed: numpy.ndarray
    expected: numpy.ndarray
    error: float


def commutator_flow_test(
    a: t.Union[Generator, str],
    b: t.Union[Generator, str],
    point: Point,
    delta: float = 1e-3,
) -> CommutatorReport:
    """
    Run ``a`` for ``delta``, ``b`` for ``delta``, then both backwards, and
    compare the net displacement with ``delta^2 [a, b]`` at the point.

    :param a: First generator
    :param b: Second generator
    :param point: ``(x, y, u)``
    :param delta: Flow parameter
    """
    expected_combination = bracket(a, b)
    fa, fb = GroupFlow(a, delta), GroupFlow(b, delta)
    p = tuple(float(v) for v in point)
    q = fb.inverse()(*fa.inverse()(*fb(*fa(*p))))
    observed = (numpy.array(q, dtype=float) - numpy.array(p)) / delta**2

    expected = numpy.zeros(3)
    for g, coefficient in expected_combination.items():
        expected += coefficient * generator(g)(*p)

    scale = float(numpy.linalg.norm(expected))
    mismatch = float(numpy.linalg.norm(observed - expected))
    return CommutatorReport(
        a=_generator(a),
        b=_generator(b),
        observed=observed,
        expected=expected,
        error=mismatch / scale if scale else mismatch,
    )
