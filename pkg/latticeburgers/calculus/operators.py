"""
Skew discrete derivatives on two-index lattices.

At a site the lattice-direction differences of any function ``f`` satisfy::

    Δn f = hx Dx f + sy Dy f
    Δm f = sx Dx f + hy Dy f

and ``Dx``, ``Dy`` are the solution of this 2x2 system. Second derivatives
are compositions: ``Dx`` applied to the field of ``Dy`` values, where the
value at each of the sites ``(n, m)``, ``(n+1, m)``, ``(n, m+1)`` uses that
site's own differences.
"""

from __future__ import annotations

import dataclasses as dc
import math
import typing as t

import numpy

import latticeburgers as s
from latticeburgers.base.exceptions import (
    DegenerateLatticeError,
    DegenerateStencilError,
    InvalidArgumentError,
)
from latticeburgers.lattice.grid import Grid, LatticeDiffs, check_site, diffs_at

ValueAt = t.Callable[[int, int], float]


@dc.dataclass(frozen=True, eq=False)
class Field:
    '''
    Values of the dependent variable on the sites of a lattice.
    Absent values are ``nan``.

    :param u: ``(N, M)`` array indexed ``[n, m]``
    '''

    u: numpy.ndarray

    def __post_init__(self):
        u = numpy.array(self.u, dtype=float)
        if u.ndim != 2:
            raise InvalidArgumentError(f'A field is a 2-d array, got shape {u.shape}')
        u.setflags(write=False)
        object.__setattr__(self, 'u', u)

    @classmethod
    def absent(cls, shape: t.Tuple[int, int]) -> Field:
        return cls(numpy.full(shape, numpy.nan))

    @property
    def shape(self) -> t.Tuple[int, int]:
        return self.u.shape

    @property
    def populated(self) -> numpy.ndarray:
        return ~numpy.isnan(self.u)

    def at(self, n: int, m: int) -> float:
        value = float(self.u[n, m])
        if math.isnan(value):
            raise InvalidArgumentError(f'No value at site ({n}, {m})')
        return value

    def check(self, g: Grid) -> None:
        if self.shape != g.shape:
            raise InvalidArgumentError(
                f'Field of shape {self.shape} does not match lattice {g.shape}'
            )

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return numpy.array_equal(self.u, other.u, equal_nan=True)


def sample(g: Grid, fn: t.Callable[[float, float], float]) -> Field:
    """
    Materialise ``fn(x, y)`` on every site of ``g``.
    """
    return Field(numpy.vectorize(fn, otypes=[float])(g.x, g.y))


def _combine(a: float, dn: t.Callable[[], float], b: float, dm: t.Callable[[], float]):
    # A difference with zero weight never reads its neighbour
    return (a * dn() if a else 0.0) + (b * dm() if b else 0.0)


def _dx(d: LatticeDiffs, dn: t.Callable[[], float], dm: t.Callable[[], float]):
    return _combine(d.hy, dn, -d.sy, dm) / d.det


def _dy(d: LatticeDiffs, dn: t.Callable[[], float], dm: t.Callable[[], float]):
    return _combine(-d.sx, dn, d.hx, dm) / d.det


def _derivative(g: Grid, value_at: ValueAt, n: int, m: int, op) -> float:
    d = diffs_at(g, n, m)
    return op(
        d,
        lambda: value_at(n + 1, m) - value_at(n, m),
        lambda: value_at(n, m + 1) - value_at(n, m),
    )


def dx(g: Grid, f: Field, n: int, m: int) -> float:
    """
    ``Dx f = (hy Δn f - sy Δm f) / (hx hy - sx sy)`` at site ``(n, m)``.

    :param g: The lattice
    :param f: The field
    :param n: ``n <= N - 2``
    :param m: ``m <= M - 2``
    """
    f.check(g)
    return _derivative(g, f.at, n, m, _dx)


def dy(g: Grid, f: Field, n: int, m: int) -> float:
    """
    ``Dy f = (-sx Δn f + hx Δm f) / (hx hy - sx sy)`` at site ``(n, m)``.
    """
    f.check(g)
    return _derivative(g, f.at, n, m, _dy)


def dxx(g: Grid, f: Field, n: int, m: int) -> float:
    """
    ``[Dx]^2 f`` alone. Where ``sy`` vanishes the row ``m + 1`` is never read,
    which makes the value available as soon as row ``m`` is known.
    """
    f.check(g)
    check_site(g, n, m, g.N - 3, g.M - 2, 'Second x-derivative')
    return _derivative(g, lambda i, j: dx(g, f, i, j), n, m, _dx)


@dc.dataclass(frozen=True)
class JetValues:
    '''
    The scheme quantities at one site.

    :param u: u
    :param ux: Dx u
    :param uy: Dy u
    :param uxx: [Dx]^2 u
    :param uyy: [Dy]^2 u
    :param uxy: Dx Dy u
    :param uyx: Dy Dx u
    '''

    u: float
    ux: float
    uy: float
    uxx: float
    uyy: float
    uxy: float
    uyx: float


def jet(g: Grid, f: Field, n: int, m: int) -> JetValues:
    """
    All derivatives up to second order on the six-point stencil
    ``(n,m), (n+1,m), (n,m+1), (n+2,m), (n+1,m+1), (n,m+2)``.

    :param g: The lattice
    :param f: The field
    :param n: ``n <= N - 3``
    :param m: ``m <= M - 3``
    """
    f.check(g)
    check_site(g, n, m, g.N - 3, g.M - 3, 'Six-point jet')

    first = {}
    for i, j in ((n, m), (n + 1, m), (n, m + 1)):
        d = diffs_at(g, i, j)
        dn = f.at(i + 1, j) - f.at(i, j)
        dm = f.at(i, j + 1) - f.at(i, j)
        first[i, j] = (
            (d.hy * dn - d.sy * dm) / d.det,
            (-d.sx * dn + d.hx * dm) / d.det,
        )

    d = diffs_at(g, n, m)
    (ux, uy), (ux10, uy10), (ux01, uy01) = (
        first[n, m],
        first[n + 1, m],
        first[n, m + 1],
    )
    return JetValues(
        u=f.at(n, m),
        ux=ux,
        uy=uy,
        uxx=(d.hy * (ux10 - ux) - d.sy * (ux01 - ux)) / d.det,
        uyy=(-d.sx * (uy10 - uy) + d.hx * (uy01 - uy)) / d.det,
        uxy=(d.hy * (uy10 - uy) - d.sy * (uy01 - uy)) / d.det,
        uyx=(-d.sx * (ux10 - ux) + d.hx * (ux01 - ux)) / d.det,
    )


def cross_identity_rhs(
    j: JetValues, d00: LatticeDiffs, d01: LatticeDiffs, d10: LatticeDiffs
) -> float:
    """
    ``Dy Dx u`` rebuilt from ``[Dx]^2 u``, ``[Dy]^2 u`` and ``Dx Dy u``.
    The identity follows from the two paths from (n, m) to (n+1, m+1)
    agreeing, and reduces to ``uyx = uxy`` on Schwarzian lattices.

    :param j: The jet at (n, m)
    :param d00: Differences at (n, m)
    :param d01: Differences at (n, m+1), provides hx_{0,1}
    :param d10: Differences at (n+1, m), provides hy_{1,0}
    """
    h, k, sx, sy = d00.hx, d00.hy, d00.sx, d00.sy
    h01, k10 = d01.hx, d10.hy

    terms = (h01 * k, h * sy, h01 * sy, sx * sy)
    denominator = h01 * k + h * sy - h01 * sy - sx * sy
    if abs(denominator) <= s.CFG.tolerances.degeneracy * sum(map(abs, terms)):
        raise DegenerateStencilError(
            f'Cross-derivative denominator vanishes: {denominator!r}'
        )

    return (
        -j.uxx * (h - h01) * (h - sx)
        + j.uyy * (k - k10) * (k - sy)
        + j.uxy * (h * k10 + k * sx - k10 * sx - sx * sy)
    ) / denominator


def stencil_diffs(g: Grid, n: int, m: int) -> t.Tuple[LatticeDiffs, ...]:
    """
    Differences at ``(n, m)``, ``(n, m+1)`` and ``(n+1, m)``.
    """
    return diffs_at(g, n, m), diffs_at(g, n, m + 1), diffs_at(g, n + 1, m)


@dc.dataclass(frozen=True)
class MonomialDeltas:
    '''
    Lattice corrections of the derivatives of quadratic monomials::

        Dx x^2 = 2x + dxx_x    Dy x^2 = dxx_y
        Dx xy  = y + dxy_x     Dy xy  = x + dxy_y
        Dx y^2 = dyy_x         Dy y^2 = 2y + dyy_y
    '''

    dxx_x: float
    dxy_x: float
    dyy_x: float
    dxx_y: float
    dxy_y: float
    dyy_y: float


def monomial_deltas(d: LatticeDiffs) -> MonomialDeltas:
    if d.is_degenerate():
        raise DegenerateLatticeError(f'Degenerate cell: hx*hy - sx*sy = {d.det!r}')
    hx, hy, sx, sy, det = d.hx, d.hy, d.sx, d.sy, d.det
    return MonomialDeltas(
        dxx_x=(hy * hx**2 - sy * sx**2) / det,
        dxy_x=hy * sy * (hx - sx) / det,
        dyy_x=-hy * sy * (hy - sy) / det,
        dxx_y=-hx * sx * (hx - sx) / det,
        dxy_y=hx * sx * (hy - sy) / det,
        dyy_y=(hx * hy**2 - sx * sy**2) / det,
    )


def observed_order(hs: t.Sequence[float], errors: t.Sequence[float]) -> t.List[float]:
    """
    Observed convergence order between consecutive refinements,
    ``log(e_i / e_{i+1}) / log(h_i / h_{i+1})``.

    >>> observed_order([0.2, 0.1], [0.04, 0.01])
    [2.0]
    """
    if len(hs) != len(errors) or len(hs) < 2:
        raise InvalidArgumentError('Need at least two (h, error) pairs')
    return [
        math.log(errors[i] / errors[i + 1]) / math.log(hs[i] / hs[i + 1])
        for i in range(len(hs) - 1)
    ]
