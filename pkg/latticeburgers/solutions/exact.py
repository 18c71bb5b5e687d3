"""
Exact solutions of ``u_y = u_xx + u_x^2``, all of the form ``u = log alpha``
with ``alpha_y = alpha_xx``.
"""

from __future__ import annotations

import dataclasses as dc
import typing as t

import numpy

from latticeburgers.base.exceptions import DomainError, InvalidArgumentError

Number = t.Union[float, numpy.ndarray]
Function = t.Callable[[Number, Number], Number]


def _everywhere(x: Number, y: Number) -> bool:
    return True


@dc.dataclass(frozen=True)
class ExactSolution:
    '''
    A closed-form solution.

    :param id: Name used on the command line
    :param evaluate: ``(x, y) -> u``, elementwise on arrays
    :param domain: ``(x, y) -> bool``
    '''

    id: str
    evaluate: Function
    domain: t.Callable[[float, float], bool] = _everywhere

    def __call__(self, x: Number, y: Number) -> Number:
        return self.evaluate(x, y)

    def sample(self, x: numpy.ndarray, y: numpy.ndarray) -> numpy.ndarray:
        return numpy.vectorize(self.evaluate, otypes=[float])(x, y)


def f1(x: Number, y: Number) -> Number:
    """
    ``log(1 + exp(-(x - y)))``, the travelling wave.

    >>> round(float(f1(0.5, 0.5)), 6)
    0.693147
    """
    z = numpy.asarray(x) - numpy.asarray(y)
    out = numpy.maximum(0.0, -z) + numpy.log1p(numpy.exp(-numpy.abs(z)))
    return float(out) if out.ndim == 0 else out


def f2(x: Number, y: Number) -> Number:
    """
    ``log(1 + exp(-x^2 / 4y) / sqrt(y))``, from the fundamental solution of
    the heat equation; defined for ``y > 0``.
    """
    x, y = numpy.asarray(x, dtype=float), numpy.asarray(y, dtype=float)
    if numpy.any(y <= 0):
        raise DomainError(f'f2 needs y > 0, got y = {y.min() if y.ndim else y}')
    out = numpy.log1p(numpy.exp(-x * x / (4 * y)) / numpy.sqrt(y))
    return float(out) if out.ndim == 0 else out


def affine(x: Number, y: Number) -> Number:
    return x + y


def cole_hopf(alpha: Function, id: str = 'cole-hopf') -> ExactSolution:
    """
    ``u = log(alpha)``; a solution whenever ``alpha`` solves the heat
    equation ``alpha_y = alpha_xx`` and is positive.

    :param alpha: ``(x, y) -> alpha``
    :param id: Name of the solution
    """

    def evaluate(x: Number, y: Number) -> Number:
        a = numpy.asarray(alpha(x, y), dtype=float)
        if numpy.any(a <= 0):
            raise DomainError(f'{id}: alpha must be positive, got {a.min()}')
        out = numpy.log(a)
        return float(out) if out.ndim == 0 else out

    def domain(x: float, y: float) -> bool:
        return bool(numpy.all(numpy.asarray(alpha(x, y)) > 0))

    return ExactSolution(id=id, evaluate=evaluate, domain=domain)


def _positive_y(x: float, y: float) -> bool:
    return y > 0


SOLUTIONS: t.Dict[str, ExactSolution] = {
    'f1': ExactSolution(id='f1', evaluate=f1),
    'f2': ExactSolution(id='f2', evaluate=f2, domain=_positive_y),
    'affine': ExactSolution(id='affine', evaluate=affine),
}


def solution(name: str) -> ExactSolution:
    try:
        return SOLUTIONS[name]
    except KeyError:
        raise InvalidArgumentError(
            f'Unknown solution {name!r}, expected one of {sorted(SOLUTIONS)}'
        )


def pde_residual(sol: ExactSolution, x: float, y: float, h: float = 1e-3) -> float:
    """
    ``u_y - u_xx - u_x^2`` by fourth-order central differences of step ``h``.

    :param sol: The solution
    :param x: x of the point
    :param y: y of the point
    :param h: Difference step
    """
    offsets = numpy.array([-2, -1, 0, 1, 2]) * h
    first = numpy.array([1, -8, 0, 8, -1]) / (12 * h)
    second = numpy.array([-1, 16, -30, 16, -1]) / (12 * h * h)

    along_x = numpy.array([sol(x + d, y) for d in offsets])
    along_y = numpy.array([sol(x, y + d) for d in offsets])
    ux = float(first @ along_x)
    return float(first @ along_y) - float(second @ along_x) - ux * ux
