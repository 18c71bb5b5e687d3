"""
Prolongation of a point vector field ``xi d/dx + tau d/dy + phi d/du`` to the
lattice differences and discrete derivatives of the six-point stencil, and the
discrete wave equation a generator must satisfy to preserve the lattice.
"""

from __future__ import annotations

import dataclasses as dc
import typing as t

import numpy

from latticeburgers.calculus.operators import Field, dx, dy, jet
from latticeburgers.lattice.grid import Grid, check_site
from latticeburgers.symmetry.flows import Coefficient, Generator, generator

Offset = t.Tuple[int, int]
OFFSETS: t.Tuple[Offset, ...] = ((0, 0), (1, 0), (0, 1), (1, 1))


def _at(c: Coefficient, g: Grid, f: Field, n: int, m: int) -> float:
    return float(c(g.x[n, m], g.y[n, m], f.at(n, m)))


def wave_residual(xi: Coefficient, g: Grid, f: Field, n: int, m: int) -> float:
    """
    ``xi_{n,m+1} - xi_{n,m} - xi_{n+1,m+1} + xi_{n+1,m}``; zero exactly when
    ``xi`` splits into a function of ``n`` plus a function of ``m`` on the cell.

    :param xi: Coefficient function of ``(x, y, u)``
    :param g: The lattice
    :param f: The field
    :param n: ``n <= N - 2``
    :param m: ``m <= M - 2``
    """
    f.check(g)
    check_site(g, n, m, g.N - 2, g.M - 2, 'Wave residual')
    return (
        _at(xi, g, f, n, m + 1)
        - _at(xi, g, f, n, m)
        - _at(xi, g, f, n + 1, m + 1)
        + _at(xi, g, f, n + 1, m)
    )


@dc.dataclass(frozen=True)
class WaveResiduals:
    xi: float
    tau: float


def lattice_wave_residuals(
    g: Grid, id: t.Union[Generator, str], f: t.Optional[Field] = None
) -> WaveResiduals:
    """
    Largest ``|xi|`` and ``|tau|`` wave residual of a generator over every
    cell of the lattice.

    :param g: The lattice
    :param id: One of V1..V6
    :param f: Field, only read by generators whose coefficients depend on u;
              defaults to zero
    """
    v = generator(id)
    f = Field(numpy.zeros(g.shape)) if f is None else f
    cells = [(n, m) for n in range(g.N - 1) for m in range(g.M - 1)]
    return WaveResiduals(
        xi=max(abs(wave_residual(v.xi, g, f, n, m)) for n, m in cells),
        tau=max(abs(wave_residual(v.tau, g, f, n, m)) for n, m in cells),
    )


@dc.dataclass(frozen=True)
class ProlongationCoeffs:
    '''
    Coefficients of the prolonged vector field at one stencil.

    :param eta_x: ``Δn xi`` at ``(n+i, m+j)``, the variation of ``hx``
    :param eta_y: ``Δm tau``, the variation of ``hy``
    :param chi_x: ``Δm xi``, the variation of ``sx``
    :param chi_y: ``Δn tau``, the variation of ``sy``
    :param phi_x: variation of ``Dx u``
    :param phi_y: variation of ``Dy u``
    :param phi_xx: variation of ``[Dx]^2 u``
    :param phi_xy: variation of ``Dx Dy u``
    :param phi_yy: variation of ``[Dy]^2 u``
    '''

    eta_x: t.Dict[Offset, float]
    eta_y: t.Dict[Offset, float]
    chi_x: t.Dict[Offset, float]
    chi_y: t.Dict[Offset, float]
    phi_x: float
    phi_y: float
    phi_xx: float
    phi_xy: float
    phi_yy: float


def _sampled(c: Coefficient, g: Grid, f: Field) -> Field:
    return Field(numpy.asarray(c(g.x, g.y, f.u), dtype=float) + 0.0 * f.u)


def prolongation_coeffs(
    xi: Coefficient,
    tau: Coefficient,
    phi: Coefficient,
    g: Grid,
    f: Field,
    n: int,
    m: int,
) -> ProlongationCoeffs:
    """
    Prolong ``(xi, tau, phi)`` at the stencil anchored at ``(n, m)``.
    The coefficients are sampled as fields on the lattice and differentiated
    with the same operators as ``u``, so the result is the exact derivative
    of the transformed data at zero group parameter.

    :param xi: x coefficient of ``(x, y, u)``
    :param tau: y coefficient of ``(x, y, u)``
    :param phi: u coefficient of ``(x, y, u)``
    :param g: The lattice
    :param f: The field
    :param n: ``n <= N - 3``
    :param m: ``m <= M - 3``
    """
    j = jet(g, f, n, m)
    X, T, P = (_sampled(c, g, f) for c in (xi, tau, phi))

    eta_x, eta_y, chi_x, chi_y = {}, {}, {}, {}
    for i, k in OFFSETS:
        a, b = n + i, m + k
        eta_x[i, k] = X.at(a + 1, b) - X.at(a, b)
        eta_y[i, k] = T.at(a, b + 1) - T.at(a, b)
        chi_x[i, k] = X.at(a, b + 1) - X.at(a, b)
        chi_y[i, k] = T.at(a + 1, b) - T.at(a, b)

    def first(op, a: int, b: int) -> float:
        ux, uy = dx(g, f, a, b), dy(g, f, a, b)
        return op(g, P, a, b) - ux * op(g, X, a, b) - uy * op(g, T, a, b)

    # phi_x and phi_y on the three sites the second derivatives read
    sites = ((n, m), (n + 1, m), (n, m + 1))
    shape = g.shape
    phi_x = numpy.full(shape, numpy.nan)
    phi_y = numpy.full(shape, numpy.nan)
    for a, b in sites:
        phi_x[a, b] = first(dx, a, b)
        phi_y[a, b] = first(dy, a, b)
    Px, Py = Field(phi_x), Field(phi_y)

    xi_x, xi_y = dx(g, X, n, m), dy(g, X, n, m)
    tau_x, tau_y = dx(g, T, n, m), dy(g, T, n, m)
    return ProlongationCoeffs(
        eta_x=eta_x,
        eta_y=eta_y,
        chi_x=chi_x,
        chi_y=chi_y,
        phi_x=Px.at(n, m),
        phi_y=Py.at(n, m),
        phi_xx=dx(g, Px, n, m) - j.uxx * xi_x - j.uyx * tau_x,
        phi_xy=dx(g, Py, n, m) - j.uxy * xi_x - j.uyy * tau_x,
        phi_yy=dy(g, Py, n, m) - j.uxy * xi_y - j.uyy * tau_y,
    )
