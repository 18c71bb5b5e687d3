import dataclasses as dc
import typing as t

import numpy

import latticeburgers as s
from latticeburgers import logging
from latticeburgers.lattice.grid import Grid


@dc.dataclass(frozen=True)
class SchwarzReport:
    '''
    How far a lattice is from satisfying the discrete Clairaut-Schwarz-Young
    conditions: sx constant along n, hx constant along m, sy constant along m,
    hy constant along n.

    :param max_sx_violation: max |sx[n, m] - sx[n+1, m]|
    :param max_hx_violation: max |hx[n, m] - hx[n, m+1]|
    :param max_sy_violation: max |sy[n, m] - sy[n, m+1]|
    :param max_hy_violation: max |hy[n, m] - hy[n+1, m]|
    :param is_schwarzian: All four maxima within the tolerance
    '''

    max_sx_violation: float
    max_hx_violation: float
    max_sy_violation: float
    max_hy_violation: float
    is_schwarzian: bool

    @property
    def max_violation(self) -> float:
        return max(
            self.max_sx_violation,
            self.max_hx_violation,
            self.max_sy_violation,
            self.max_hy_violation,
        )


def _max(a: numpy.ndarray) -> float:
    return float(numpy.max(numpy.abs(a))) if a.size else 0.0


def schwarz_check(g: Grid, tol: t.Optional[float] = None) -> SchwarzReport:
    """
    Compare every difference with its neighbour along the direction in which
    a Schwarzian lattice keeps it constant. Each difference is taken wherever
    the lattice defines it, not only on full cells.

    :param g: The lattice
    :param tol: Absolute tolerance (defaults to ``CFG.tolerances.schwarz``)
    """
    tol = s.CFG.tolerances.schwarz if tol is None else tol
    x, y = g.x, g.y

    hx = numpy.diff(x, axis=0)
    sx = numpy.diff(x, axis=1)
    sy = numpy.diff(y, axis=0)
    hy = numpy.diff(y, axis=1)

    violations = dict(
        max_sx_violation=_max(numpy.diff(sx, axis=0)),
        max_hx_violation=_max(numpy.diff(hx, axis=1)),
        max_sy_violation=_max(numpy.diff(sy, axis=1)),
        max_hy_violation=_max(numpy.diff(hy, axis=0)),
    )
    report = SchwarzReport(
        **violations, is_schwarzian=all(v <= tol for v in violations.values())
    )
    logging.info(
        f'Schwarz check {g.N}x{g.M}: max violation {report.max_violation:.3g}',
        'schwarzian' if report.is_schwarzian else 'not schwarzian',
    )
    return report
