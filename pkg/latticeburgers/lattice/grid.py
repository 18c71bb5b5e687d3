"""
Two-index quadrilateral lattices.

A lattice is the map ``(n, m) -> (x, y)`` sampled on ``0 <= n < N``,
``0 <= m < M``. Only the coordinates are stored; every lattice difference is
recomputed from them when asked for, so coordinates and differences can never
disagree.
"""

from __future__ import annotations

import dataclasses as dc
import enum
import typing as t

import numpy

import latticeburgers as s
from latticeburgers import logging
from latticeburgers.base.exceptions import (
    DegenerateLatticeError,
    InvalidArgumentError,
    OutOfBoundsError,
)

MIN_SITES = 3


class LatticeKind(str, enum.Enum):
    orthogonal = 'orthogonal'
    exponential = 'exponential'


@dc.dataclass(frozen=True)
class LatticeDiffs:
    '''
    The four differences owned by site ``(n, m)``.

    :param hx: x_{n+1,m} - x_{n,m}
    :param hy: y_{n,m+1} - y_{n,m}
    :param sx: x_{n,m+1} - x_{n,m}
    :param sy: y_{n+1,m} - y_{n,m}
    '''

    hx: float
    hy: float
    sx: float
    sy: float

    @property
    def det(self) -> float:
        return self.hx * self.hy - self.sx * self.sy

    def is_degenerate(self, tol: t.Optional[float] = None) -> bool:
        """
        Whether the cell determinant is negligible relative to its own terms.

        :param tol: Relative tolerance (defaults to ``CFG.tolerances.degeneracy``)
        """
        tol = s.CFG.tolerances.degeneracy if tol is None else tol
        scale = abs(self.hx * self.hy) + abs(self.sx * self.sy)
        return abs(self.det) <= tol * scale


@dc.dataclass(frozen=True, eq=False)
class Grid:
    '''
    Coordinates of a structured two-index lattice.

    :param x: ``(N, M)`` array of x coordinates, indexed ``[n, m]``
    :param y: ``(N, M)`` array of y coordinates, indexed ``[n, m]``
    '''

    x: numpy.ndarray
    y: numpy.ndarray

    def __post_init__(self):
        x = numpy.array(self.x, dtype=float)
        y = numpy.array(self.y, dtype=float)
        if x.ndim != 2 or x.shape != y.shape:
            raise InvalidArgumentError(
                f'x and y must be 2-d arrays of one shape, got {x.shape} and {y.shape}'
            )
        if min(x.shape) < MIN_SITES:
            raise InvalidArgumentError(
                f'A lattice needs at least {MIN_SITES}x{MIN_SITES} sites, '
                f'got {x.shape[0]}x{x.shape[1]}'
            )
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)

    @property
    def N(self) -> int:
        return self.x.shape[0]

    @property
    def M(self) -> int:
        return self.x.shape[1]

    @property
    def shape(self) -> t.Tuple[int, int]:
        return self.x.shape

    def diffs_at(self, n: int, m: int, tol: t.Optional[float] = None):
        return diffs_at(self, n, m, tol=tol)

    def differences(self) -> t.Dict[str, numpy.ndarray]:
        """
        All cell differences as ``(N-1, M-1)`` arrays, keyed ``hx, hy, sx, sy``.
        """
        x, y = self.x, self.y
        return {
            'hx': x[1:, :-1] - x[:-1, :-1],
            'hy': y[:-1, 1:] - y[:-1, :-1],
            'sx': x[:-1, 1:] - x[:-1, :-1],
            'sy': y[1:, :-1] - y[:-1, :-1],
        }

    def sites(self) -> t.Iterator[t.Tuple[int, int]]:
        for n in range(self.N):
            for m in range(self.M):
                yield n, m

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return numpy.array_equal(self.x, other.x) and numpy.array_equal(
            self.y, other.y
        )


def _check_size(N: int, M: int) -> None:
    if N < MIN_SITES or M < MIN_SITES:
        raise InvalidArgumentError(
            f'A lattice needs at least {MIN_SITES}x{MIN_SITES} sites, got {N}x{M}'
        )


def _check_spacing(**spacings: float) -> None:
    for name, value in spacings.items():
        if not value > 0:
            raise InvalidArgumentError(f'{name} must be positive, got {value}')


def build_orthogonal(
    a: float, b: float, x0: float, y0: float, N: int, M: int
) -> Grid:
    """
    The orthogonal cartesian lattice ``x = x0 + a n``, ``y = y0 + b m``.

    :param a: Spacing in x
    :param b: Spacing in y
    :param x0: x of site (0, 0)
    :param y0: y of site (0, 0)
    :param N: Number of sites in n
    :param M: Number of sites in m
    """
    _check_size(N, M)
    _check_spacing(a=a, b=b)
    n = numpy.arange(N, dtype=float)[:, None]
    m = numpy.arange(M, dtype=float)[None, :]
    x = numpy.broadcast_to(x0 + a * n, (N, M))
    y = numpy.broadcast_to(y0 + b * m, (N, M))
    logging.debug(f'orthogonal lattice a={a} b={b} origin=({x0}, {y0}) {N}x{M}')
    return Grid(x=x, y=y)


def build_exponential(
    a: float, a0: float, b: float, b0: float, c: float, N: int, M: int
) -> Grid:
    """
    The exponential lattice ``x = (1+c)^m (a n + a0)``, ``y = b m + b0``,
    dilated in x by ``1 + c`` per row. ``c = 0`` gives the orthogonal lattice.

    :param a: Spacing in x of row m = 0
    :param a0: x of site (0, 0)
    :param b: Spacing in y
    :param b0: y of site (0, 0)
    :param c: Dilation per row, ``c > -1``
    :param N: Number of sites in n
    :param M: Number of sites in m
    """
    _check_size(N, M)
    _check_spacing(a=a, b=b)
    if not 1 + c > 0:
        raise InvalidArgumentError(f'1 + c must be positive, got c={c}')
    n = numpy.arange(N, dtype=float)[:, None]
    m = numpy.arange(M, dtype=float)[None, :]
    x = (1 + c) ** m * (a * n + a0)
    y = numpy.broadcast_to(b * m + b0, (N, M))
    logging.debug(f'exponential lattice a={a} b={b} c={c} a0={a0} b0={b0} {N}x{M}')
    return Grid(x=x, y=y)


def build_lattice(
    kind: t.Union[LatticeKind, str],
    a: float,
    b: float,
    x0: float,
    y0: float,
    N: int,
    M: int,
    c: float = 0.0,
) -> Grid:
    """
    Build a lattice by kind; the origin is ``(a0, b0)`` on the exponential
    lattice.

    :param kind: 'orthogonal' or 'exponential'
    """
    try:
        kind = LatticeKind(kind)
    except ValueError:
        raise InvalidArgumentError(f'Unknown lattice kind {kind!r}')
    if kind == LatticeKind.orthogonal:
        return build_orthogonal(a=a, b=b, x0=x0, y0=y0, N=N, M=M)
    return build_exponential(a=a, a0=x0, b=b, b0=y0, c=c, N=N, M=M)


def check_site(g: Grid, n: int, m: int, n_max: int, m_max: int, what: str) -> None:
    """
    Raise OutOfBoundsError unless ``0 <= n <= n_max`` and ``0 <= m <= m_max``.
    """
    if not (0 <= n <= n_max and 0 <= m <= m_max):
        raise OutOfBoundsError(
            f'{what} at ({n}, {m}) needs 0 <= n <= {n_max} and 0 <= m <= {m_max} '
            f'on a {g.N}x{g.M} lattice'
        )


def diffs_at(g: Grid, n: int, m: int, tol: t.Optional[float] = None) -> LatticeDiffs:
    """
    The four differences owned by site ``(n, m)``.

    :param g: The lattice
    :param n: Site index, ``n <= N - 2``
    :param m: Site index, ``m <= M - 2``
    :param tol: Relative degeneracy tolerance
    """
    check_site(g, n, m, g.N - 2, g.M - 2, 'Lattice differences')
    x, y = g.x, g.y
    d = LatticeDiffs(
        hx=float(x[n + 1, m] - x[n, m]),
        hy=float(y[n, m + 1] - y[n, m]),
        sx=float(x[n, m + 1] - x[n, m]),
        sy=float(y[n + 1, m] - y[n, m]),
    )
    if d.is_degenerate(tol):
        raise DegenerateLatticeError(
            f'Degenerate cell at ({n}, {m}): hx*hy - sx*sy = {d.det!r}'
        )
    return d
