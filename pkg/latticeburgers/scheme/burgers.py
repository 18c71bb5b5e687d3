"""
The six-point invariant scheme for the potential Burgers equation::

    Dy u - [Dx]^2 u - (Dx u)^2 = 0

On lattices with ``sy = 0`` the scheme is explicit both in ``u_{n,m+1}``
(a march along m) and in ``u_{n+2,m}`` (a march along n).
"""

from __future__ import annotations

import dataclasses as dc
import typing as t

import numpy

from latticeburgers import logging
from latticeburgers.base.config import BoundaryMode, Marching
from latticeburgers.base.exceptions import (
    InvalidArgumentError,
    OutOfBoundsError,
    UnsupportedLatticeError,
)
from latticeburgers.calculus.operators import Field, dx, dxx, dy
from latticeburgers.lattice.grid import Grid, check_site, diffs_at

Oracle = t.Callable[[float, float], float]


def residual(g: Grid, f: Field, n: int, m: int) -> float:
    """
    ``Dy u - [Dx]^2 u - (Dx u)^2`` at ``(n, m)``. Rows above ``m + 1`` are
    read only where ``sy`` is nonzero.

    :param g: The lattice
    :param f: The field
    :param n: ``n <= N - 3``
    :param m: ``m <= M - 2``
    """
    check_site(g, n, m, g.N - 3, g.M - 2, 'Scheme residual')
    ux = dx(g, f, n, m)
    return dy(g, f, n, m) - dxx(g, f, n, m) - ux * ux


def expanded_residual(g: Grid, f: Field, n: int, m: int) -> float:
    """
    The scheme written out site by site, with every difference labelled by
    the single index a Schwarzian lattice lets it depend on::

        hx_n, hx_{n+1}        hy_m, hy_{m+1}
        sx_m, sx_{m+1}        sy_n, sy_{n+1}

    Equal to ``residual`` on Schwarzian lattices and on every lattice with
    ``sy = 0``.
    """
    check_site(g, n, m, g.N - 3, g.M - 2, 'Scheme residual')
    f.check(g)
    u = f.at

    d = diffs_at(g, n, m)
    d1 = diffs_at(g, n + 1, m)
    hx_n, hy_m, sx_m, sy_n = d.hx, d.hy, d.sx, d.sy
    hx_n1, sy_n1 = d1.hx, d1.sy

    det = hx_n * hy_m - sx_m * sy_n
    dn = u(n + 1, m) - u(n, m)
    dm = u(n, m + 1) - u(n, m)
    ux = (hy_m * dn - sy_n * dm) / det
    uy = (-sx_m * dn + hx_n * dm) / det

    shifted = hy_m * (u(n + 2, m) - u(n + 1, m))
    if sy_n1:
        shifted -= sy_n1 * (u(n + 1, m + 1) - u(n + 1, m))
    ux_n1 = shifted / (hx_n1 * hy_m - sx_m * sy_n1)

    bracket = hy_m * (ux_n1 - ux)
    if sy_n:
        d2 = diffs_at(g, n, m + 1)
        hy_m1, sx_m1 = d2.hy, d2.sx
        ux_m1 = (
            hy_m1 * (u(n + 1, m + 1) - u(n, m + 1))
            - sy_n * (u(n, m + 2) - u(n, m + 1))
        ) / (hx_n * hy_m1 - sx_m1 * sy_n)
        bracket -= sy_n * (ux_m1 - ux)

    return uy - bracket / det - ux * ux


def _check_explicit(g: Grid, m: int) -> None:
    check_site(g, 0, m, 0, g.M - 2, 'Explicit step')
    sy = numpy.diff(g.y[:, m : m + 2], axis=0)
    if numpy.any(sy != 0):
        raise UnsupportedLatticeError(
            f'Rows {m} and {m + 1} have sy != 0 (max |sy| = '
            f'{float(numpy.max(numpy.abs(sy))):.3g}); the scheme is implicit there'
        )


def step_explicit(g: Grid, f: Field, m: int) -> numpy.ndarray:
    """
    Solve the scheme at ``(n, m)`` for ``u_{n,m+1}``, ``n = 0 .. N-3``::

        P = (u_{n+1,m} - u_{n,m}) / hx_n
        S = ((u_{n+2,m} - u_{n+1,m}) / hx_{n+1} - P) / hx_n
        u_{n,m+1} = u_{n,m} + sx_n P + hy_n (S + P^2)

    Sites of row ``m`` that are absent give absent results.

    :param g: The lattice, with ``sy = 0`` on rows ``m`` and ``m + 1``
    :param f: The field, populated on row ``m``
    :param m: ``m <= M - 2``
    """
    f.check(g)
    _check_explicit(g, m)
    u = f.u[:, m]
    out = numpy.empty(g.N - 2)
    for n in range(g.N - 2):
        d, d1 = diffs_at(g, n, m), diffs_at(g, n + 1, m)
        p = (u[n + 1] - u[n]) / d.hx
        second = ((u[n + 2] - u[n + 1]) / d1.hx - p) / d.hx
        out[n] = u[n] + d.sx * p + d.hy * (second + p * p)
    return out


def _check_across(g: Grid, n: int) -> None:
    check_site(g, n, 0, g.N - 3, 0, 'Step across')
    sy = numpy.diff(g.y[n : n + 3, : g.M - 1], axis=0)
    if numpy.any(sy != 0):
        raise UnsupportedLatticeError(
            f'Columns {n} to {n + 2} have sy != 0 (max |sy| = '
            f'{float(numpy.max(numpy.abs(sy))):.3g}); the scheme is implicit there'
        )


def step_across(g: Grid, f: Field, n: int) -> numpy.ndarray:
    """
    Solve the scheme at ``(n, m)`` for ``u_{n+2,m}``, ``m = 0 .. M-2``::

        P = (u_{n+1,m} - u_{n,m}) / hx_n
        Q = (u_{n,m+1} - u_{n,m} - sx_m P) / hy_m
        u_{n+2,m} = u_{n+1,m} + hx_{n+1} (P + hx_n (Q - P^2))

    The last row is out of reach. Absent inputs give absent results.

    :param g: The lattice, with ``sy = 0`` on columns ``n`` to ``n + 2``
    :param f: The field, populated on columns ``n`` and ``n + 1``
    :param n: ``n <= N - 3``
    """
    f.check(g)
    _check_across(g, n)
    u = f.u
    out = numpy.empty(g.M - 1)
    for m in range(g.M - 1):
        d, d1 = diffs_at(g, n, m), diffs_at(g, n + 1, m)
        p = (u[n + 1, m] - u[n, m]) / d.hx
        q = (u[n, m + 1] - u[n, m] - d.sx * p) / d.hy
        out[m] = u[n + 1, m] + d1.hx * (p + d.hx * (q - p * p))
    return out


@dc.dataclass(frozen=True)
class EvolutionConfig:
    '''
    How ``evolve`` marches.

    :param boundary_mode: Boundary treatment of the sites the scheme cannot
                          reach
    :param oracle: Exact solution ``(x, y) -> u``; required in oracle mode
    :param steps: Number of rows or columns to march, ``>= 1``
    :param marching: March rows from row 0 or columns from columns 0 and 1
    '''

    boundary_mode: BoundaryMode = BoundaryMode.ORACLE
    oracle: t.Optional[Oracle] = None
    steps: int = 1
    marching: Marching = Marching.ROWS

    def __post_init__(self):
        try:
            mode = BoundaryMode(self.boundary_mode)
        except ValueError:
            raise InvalidArgumentError(
                f'Unknown boundary mode {self.boundary_mode!r}'
            )
        try:
            marching = Marching(self.marching)
        except ValueError:
            raise InvalidArgumentError(f'Unknown marching {self.marching!r}')
        object.__setattr__(self, 'boundary_mode', mode)
        object.__setattr__(self, 'marching', marching)
        if self.steps < 1:
            raise InvalidArgumentError(f'steps must be >= 1, got {self.steps}')
        if self.boundary_mode == BoundaryMode.ORACLE and self.oracle is None:
            raise InvalidArgumentError('Oracle boundary mode needs an oracle')


def full_steps(g: Grid, marching: Marching) -> int:
    """
    Steps that march ``g`` to its far edge.
    """
    return g.M - 1 if Marching(marching) == Marching.ROWS else g.N - 2


def _evolve_columns(g: Grid, initial: Field, cfg: EvolutionConfig) -> Field:
    if cfg.steps > g.N - 2:
        raise OutOfBoundsError(
            f'{cfg.steps} steps do not fit on a lattice with {g.N} columns'
        )
    if not numpy.all(initial.populated[:2, :]):
        raise InvalidArgumentError('Columns 0 and 1 must be fully populated')

    u = numpy.full(g.shape, numpy.nan)
    u[:2, :] = initial.u[:2, :]
    last = g.M - 1
    for n in range(cfg.steps):
        u[n + 2, :last] = step_across(g, Field(u), n)
        if cfg.boundary_mode == BoundaryMode.ORACLE:
            assert cfg.oracle is not None
            x, y = float(g.x[n + 2, last]), float(g.y[n + 2, last])
            u[n + 2, last] = cfg.oracle(x, y)
        populated = int(numpy.sum(~numpy.isnan(u[n + 2, :])))
        logging.debug(f'column {n + 2}: {populated} sites')
    return Field(u)


def evolve(g: Grid, initial: Field, cfg: EvolutionConfig) -> Field:
    """
    March row 0 of ``initial`` for ``cfg.steps`` rows, or columns 0 and 1 for
    ``cfg.steps`` columns.
    In shrink mode the sites a step cannot reach stay absent, so every row
    loses two sites at the right and every other column one at the top.
    In oracle mode they get oracle values: the two rightmost sites of a row,
    the top site of a column.

    :param g: The lattice
    :param initial: Field whose seed row or columns are fully populated
    :param cfg: The evolution settings
    """
    initial.check(g)
    if cfg.marching == Marching.COLUMNS:
        return _evolve_columns(g, initial, cfg)
    if cfg.steps > g.M - 1:
        raise OutOfBoundsError(
            f'{cfg.steps} steps do not fit on a lattice with {g.M} rows'
        )
    if not numpy.all(initial.populated[:, 0]):
        raise InvalidArgumentError('The initial row must be fully populated')

    u = numpy.full(g.shape, numpy.nan)
    u[:, 0] = initial.u[:, 0]
    for m in range(cfg.steps):
        u[: g.N - 2, m + 1] = step_explicit(g, Field(u), m)
        if cfg.boundary_mode == BoundaryMode.ORACLE:
            assert cfg.oracle is not None
            for n in (g.N - 2, g.N - 1):
                u[n, m + 1] = cfg.oracle(float(g.x[n, m + 1]), float(g.y[n, m + 1]))
        populated = int(numpy.sum(~numpy.isnan(u[:, m + 1])))
        logging.debug(f'row {m + 1}: {populated} sites')
    return Field(u)


def max_residual(g: Grid, f: Field) -> float:
    """
    Largest ``|residual|`` over the stencils whose data are all present.
    """
    worst = None
    for n in range(g.N - 2):
        for m in range(g.M - 1):
            try:
                r = abs(residual(g, f, n, m))
            except (InvalidArgumentError, OutOfBoundsError):
                continue
            if numpy.isnan(r):
                continue
            worst = r if worst is None else max(worst, r)
    if worst is None:
        raise InvalidArgumentError('No stencil of the field is fully populated')
    return worst
