"""
Difference invariants of the six-point stencil under V1..V5.

With ``hy = hy_{n,m}`` and the suffixes ``10``/``01`` marking the differences
owned by ``(n+1, m)`` and ``(n, m+1)``::

    K1 = hy10 / hy        K2 = hy01 / hy        K3 = sy / hy      K4 = sy10 / hy
    K5 = (hx hy - sx sy) / hy^(3/2)
    K6 = (hy01 sx - hy sx01) / hy^(3/2)
    K7 = (hx (hy10 - hy) - sy (hx01 - hx)) / hy^(3/2)
    K8 = (hx sy10 - hx10 sy) / hy^(3/2)
    K9 = (hx + 2 sy ux) / hy^(1/2)
    K10 = (uy - ux^2) / uxx = 1 / I1

The scheme is ``I1 = 1``.
"""

from __future__ import annotations

import dataclasses as dc
import math
import typing as t

import numpy

import latticeburgers as s
from latticeburgers import logging
from latticeburgers.base.exceptions import (
    InvalidArgumentError,
    InvalidStencilError,
    InvariantUndefinedError,
)
from latticeburgers.calculus.operators import Field, JetValues, dx, jet, stencil_diffs
from latticeburgers.lattice.grid import Grid, check_site
from latticeburgers.symmetry.flows import GroupFlow, apply_flow

STENCIL = ((0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
NAMES = ('k1', 'k2', 'k3', 'k4', 'k5', 'k6', 'k7', 'k8', 'k9', 'k10', 'i1')


@dc.dataclass(frozen=True, eq=False)
class SchemeData:
    '''
    The 18 data of one six-point stencil, in the site order
    ``(n,m), (n+1,m), (n,m+1), (n+2,m), (n+1,m+1), (n,m+2)``.

    :param x: six x coordinates
    :param y: six y coordinates
    :param u: six values
    '''

    x: numpy.ndarray
    y: numpy.ndarray
    u: numpy.ndarray

    def __post_init__(self):
        for name in ('x', 'y', 'u'):
            a = numpy.array(getattr(self, name), dtype=float)
            if a.shape != (len(STENCIL),):
                raise InvalidArgumentError(
                    f'{name} needs {len(STENCIL)} values, got shape {a.shape}'
                )
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    def embed(self) -> t.Tuple[Grid, Field]:
        """
        Place the stencil on a 3x3 lattice; the three sites outside the
        stencil hold ``nan`` and are never read.
        """
        x, y, u = (numpy.full((3, 3), numpy.nan) for _ in range(3))
        for k, (i, j) in enumerate(STENCIL):
            x[i, j], y[i, j], u[i, j] = self.x[k], self.y[k], self.u[k]
        return Grid(x=x, y=y), Field(u)

    def jet(self) -> JetValues:
        return jet(*self.embed(), 0, 0)

    def residual(self) -> float:
        j = self.jet()
        return j.uy - j.uxx - j.ux**2

    def transform(self, flow: GroupFlow) -> SchemeData:
        return SchemeData(*apply_flow(flow, self.x, self.y, self.u))


def scheme_data(g: Grid, f: Field, n: int, m: int) -> SchemeData:
    """
    Extract the stencil anchored at ``(n, m)``.

    :param g: The lattice
    :param f: The field
    :param n: ``n <= N - 3``
    :param m: ``m <= M - 3``
    """
    f.check(g)
    check_site(g, n, m, g.N - 3, g.M - 3, 'Six-point stencil')
    sites = [(n + i, m + j) for i, j in STENCIL]
    return SchemeData(
        x=[g.x[p] for p in sites],
        y=[g.y[p] for p in sites],
        u=[f.at(*p) for p in sites],
    )


@dc.dataclass(frozen=True)
class InvariantSet:
    '''
    K1..K10 and I1 of one stencil; a component is ``None`` where its
    denominator vanishes.
    '''

    k1: float
    k2: float
    k3: float
    k4: float
    k5: float
    k6: float
    k7: float
    k8: float
    k9: float
    k10: t.Optional[float]
    i1: t.Optional[float]

    @property
    def undefined(self) -> t.Tuple[str, ...]:
        return tuple(k for k, v in self.values().items() if v is None)

    def values(self) -> t.Dict[str, t.Optional[float]]:
        return {k: getattr(self, k) for k in NAMES}

    def require(self) -> InvariantSet:
        if self.undefined:
            raise InvariantUndefinedError(
                f'Undefined invariants: {", ".join(self.undefined)}',
                components=self.undefined,
            )
        return self


def _ratio(numerator: float, denominator: float, scale: float):
    if abs(denominator) <= s.CFG.tolerances.cancellation * scale:
        return None
    return numerator / denominator


def invariants(data: SchemeData, allow_undefined: bool = False) -> InvariantSet:
    """
    Evaluate all invariants from the stencil's own differences.

    :param data: The stencil
    :param allow_undefined: Return ``None`` components instead of raising
    """
    g, f = data.embed()
    d, d01, d10 = stencil_diffs(g, 0, 0)
    if not d.hy > 0:
        raise InvalidStencilError(f'hy must be positive, got {d.hy!r}')

    j = jet(g, f, 0, 0)
    root = math.sqrt(d.hy)
    power = d.hy * root
    slope = j.uy - j.ux**2
    # Size of the terms uxx is built from
    curvature = (
        abs(d.hy) * (abs(dx(g, f, 1, 0)) + abs(j.ux))
        + abs(d.sy) * (abs(dx(g, f, 0, 1)) + abs(j.ux))
    ) / abs(d.det)

    result = InvariantSet(
        k1=d10.hy / d.hy,
        k2=d01.hy / d.hy,
        k3=d.sy / d.hy,
        k4=d10.sy / d.hy,
        k5=d.det / power,
        k6=(d01.hy * d.sx - d.hy * d01.sx) / power,
        k7=(d.hx * (d10.hy - d.hy) - d.sy * (d01.hx - d.hx)) / power,
        k8=(d.hx * d10.sy - d10.hx * d.sy) / power,
        k9=(d.hx + 2 * d.sy * j.ux) / root,
        k10=_ratio(slope, j.uxx, curvature),
        i1=_ratio(j.uxx, slope, abs(j.uy) + j.ux**2),
    )
    if allow_undefined:
        return result
    return result.require()


def _relative_change(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1.0)


def flow_invariance_test(data: SchemeData, flow: GroupFlow) -> float:
    """
    Largest change of any invariant when the exact flow moves all 18 data.
    Changes are relative for invariants larger than one and absolute below.

    :param data: The stencil
    :param flow: The flow
    """
    before = invariants(data).values()
    after = invariants(data.transform(flow)).values()
    change = max(_relative_change(before[k], after[k]) for k in NAMES)
    logging.debug(
        f'{flow.generator_id.value} epsilon={flow.epsilon}: max change {change:.3g}'
    )
    return change


def invariant_spread(g: Grid, f: Field) -> t.Dict[str, t.Tuple[float, float]]:
    """
    ``(min, max)`` of every invariant over all stencils of the lattice,
    skipping undefined values.

    :param g: The lattice
    :param f: The field
    """
    seen: t.Dict[str, t.List[float]] = {k: [] for k in NAMES}
    for n in range(g.N - 2):
        for m in range(g.M - 2):
            values = invariants(scheme_data(g, f, n, m), allow_undefined=True)
            for k, v in values.values().items():
                if v is not None:
                    seen[k].append(v)
    return {k: (min(v), max(v)) for k, v in seen.items() if v}


def non_constant(
    spread: t.Dict[str, t.Tuple[float, float]], tol: float = 1e-12
) -> t.List[str]:
    """
    Names of the invariants whose spread exceeds ``tol`` (relative above one).
    """
    return [k for k, (lo, hi) in spread.items() if _relative_change(lo, hi) > tol]
