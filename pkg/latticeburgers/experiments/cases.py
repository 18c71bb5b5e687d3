"""
The five lattice cases the chi comparison is run on, and a single run of one
case: sample the initial row, march, compare with the exact solution.

=====  ===========  ======  =====
case   lattice      a       c
=====  ===========  ======  =====
1      orthogonal   0.1     0
2      exponential  0.1     0.15
3      exponential  0.0513  0.1
4      exponential  0.0375  0.15
5      exponential  0.1     0.1
=====  ===========  ======  =====

Case 5 is only described as similar to case 2; ``c = 0.1`` is an
interpretation and every row of it is flagged as such.
"""

from __future__ import annotations

import dataclasses as dc
import math
import typing as t
from pathlib import Path

import latticeburgers as s
from latticeburgers import logging
from latticeburgers.base.config import BoundaryMode, Marching
from latticeburgers.base.exceptions import DomainError, InvalidArgumentError
from latticeburgers.calculus.operators import Field
from latticeburgers.estimator.chi import chi
from latticeburgers.lattice.geometry import Box, bounding_box, coverage
from latticeburgers.lattice.grid import (
    MIN_SITES,
    Grid,
    LatticeKind,
    build_lattice,
    build_orthogonal,
)
from latticeburgers.misc import tables
from latticeburgers.scheme.burgers import EvolutionConfig, evolve, full_steps
from latticeburgers.solutions.exact import solution

CASE_IDS = (1, 2, 3, 4, 5)
SOLUTION_IDS = ('f1', 'f2')
INTERPRETED = frozenset({5})

CASES: t.Dict[int, t.Tuple[LatticeKind, float, float]] = {
    1: (LatticeKind.orthogonal, 0.1, 0.0),
    2: (LatticeKind.exponential, 0.1, 0.15),
    3: (LatticeKind.exponential, 0.0513, 0.1),
    4: (LatticeKind.exponential, 0.0375, 0.15),
    5: (LatticeKind.exponential, 0.1, 0.1),
}

# Published chi values, for scoring reproductions
PUBLISHED_CHI: t.Dict[t.Tuple[str, int], float] = {
    ('f1', 1): 0.01267,
    ('f1', 2): 0.01651,
    ('f1', 3): 0.01147,
    ('f1', 4): 0.01408,
    ('f1', 5): 0.01437,
    ('f2', 1): 0.00249,
    ('f2', 2): 0.00610,
    ('f2', 3): 0.00642,
    ('f2', 4): 0.00913,
    ('f2', 5): 0.00430,
}


@dc.dataclass(frozen=True)
class ExperimentSpec:
    '''
    Everything one run needs.

    :param lattice: 'orthogonal' or 'exponential'
    :param a: Spacing in x (of row 0 on exponential lattices)
    :param b: Spacing in y
    :param c: Dilation per row of exponential lattices
    :param x0: x of site (0, 0)
    :param y0: y of site (0, 0)
    :param N: Number of sites in n
    :param M: Number of sites in m
    :param solution: 'f1', 'f2' or 'affine'
    :param boundary_mode: Boundary treatment of the march
    :param marching: Index the march advances
    :param output: Directory the lattice and field tables are written to
    '''

    lattice: LatticeKind
    a: float
    b: float = 0.1
    c: float = 0.0
    x0: float = 0.0
    y0: float = 0.1
    N: int = 8
    M: int = 8
    solution: str = 'f1'
    boundary_mode: BoundaryMode = BoundaryMode.ORACLE
    marching: Marching = Marching.COLUMNS
    output: t.Optional[str] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, 'lattice', LatticeKind(self.lattice))
            object.__setattr__(self, 'boundary_mode', BoundaryMode(self.boundary_mode))
            object.__setattr__(self, 'marching', Marching(self.marching))
        except ValueError as e:
            raise InvalidArgumentError(str(e))
        if self.N < MIN_SITES or self.M < MIN_SITES:
            raise InvalidArgumentError(
                f'A lattice needs at least {MIN_SITES}x{MIN_SITES} sites, '
                f'got {self.N}x{self.M}'
            )
        solution(self.solution)

    @property
    def case_id(self) -> t.Optional[int]:
        """
        The published case these parameters reproduce, if any.
        """
        if (self.N, self.M) != (8, 8) or not math.isclose(self.b, 0.1):
            return None
        for case_id, (kind, a, c) in CASES.items():
            if (
                kind == self.lattice
                and math.isclose(a, self.a)
                and math.isclose(c, self.c, abs_tol=1e-15)
            ):
                return case_id
        return None

    def grid(self) -> Grid:
        return build_lattice(
            self.lattice, self.a, self.b, self.x0, self.y0, self.N, self.M, c=self.c
        )


@dc.dataclass(frozen=True)
class Table2Row:
    '''
    The outcome of one run.

    :param case_id: Published case, ``None`` for custom parameters
    :param solution: The exact solution marched
    :param chi: The chi estimator
    :param reference: Published chi of the case, if any
    :param interpretation: The case parameters are inferred, not published
    :param marching: Index the march advanced
    :param coverage: Fraction of the orthogonal case's bounding box the
                     lattice covers
    '''

    case_id: t.Optional[int]
    solution: str
    chi: float
    lattice: str
    a: float
    b: float
    c: float
    x0: float
    y0: float
    num_sites: int
    excluded_sites: int
    reference: t.Optional[float] = None
    interpretation: bool = False
    marching: str = Marching.COLUMNS.value
    coverage: t.Optional[float] = None

    @property
    def ratio(self) -> t.Optional[float]:
        if self.reference is None:
            return None
        return self.chi / self.reference

    HEADER: t.ClassVar[t.Tuple[str, ...]] = (
        'case',
        'solution',
        'lattice',
        'a',
        'b',
        'c',
        'x0',
        'y0',
        'chi',
        'reference',
        'ratio',
        'sites',
        'excluded',
        'marching',
        'coverage',
        'interpretation',
    )

    def cells(self) -> t.Tuple[tables.Cell, ...]:
        return (
            'custom' if self.case_id is None else self.case_id,
            self.solution,
            self.lattice,
            self.a,
            self.b,
            self.c,
            self.x0,
            self.y0,
            self.chi,
            self.reference,
            self.ratio,
            self.num_sites,
            self.excluded_sites,
            self.marching,
            self.coverage,
            'yes' if self.interpretation else 'no',
        )


def case_spec(
    case_id: int,
    solution: str,
    origin: t.Optional[t.Tuple[float, float]] = None,
    boundary_mode: t.Optional[BoundaryMode] = None,
    output: t.Optional[str] = None,
    marching: t.Optional[Marching] = None,
) -> ExperimentSpec:
    """
    The parameters of a published case, with the unpublished settings taken from
    ``CFG.experiment``.

    :param case_id: 1..5
    :param solution: 'f1', 'f2' or 'affine'
    :param origin: ``(x0, y0)``
    :param boundary_mode: Boundary treatment of the march
    :param output: Directory for the tables
    :param marching: Index the march advances
    """
    if case_id not in CASES:
        raise InvalidArgumentError(f'Unknown case {case_id}, expected 1..5')
    e = s.CFG.experiment
    kind, a, c = CASES[case_id]
    x0, y0 = (e.x0, e.y0) if origin is None else origin
    return ExperimentSpec(
        lattice=kind,
        a=a,
        b=e.b,
        c=c,
        x0=x0,
        y0=y0,
        N=e.n_sites,
        M=e.m_sites,
        solution=solution,
        boundary_mode=e.boundary_mode if boundary_mode is None else boundary_mode,
        marching=e.marching if marching is None else marching,
        output=output,
    )


def run_case(spec: ExperimentSpec) -> Table2Row:
    """
    Sample the exact solution on the seed row or columns, march across the
    lattice and compare.

    :param spec: The run
    """
    g = spec.grid()
    exact = solution(spec.solution)
    if not all(exact.domain(float(x), float(y)) for x, y in zip(g.x.flat, g.y.flat)):
        raise DomainError(
            f'{spec.solution} is undefined on part of the lattice '
            f'(y from {g.y.min()} to {g.y.max()})'
        )

    initial = Field(exact.sample(g.x, g.y))
    oracle = exact if spec.boundary_mode == BoundaryMode.ORACLE else None
    cfg = EvolutionConfig(
        spec.boundary_mode,
        oracle=oracle,
        steps=full_steps(g, spec.marching),
        marching=spec.marching,
    )
    numeric = evolve(g, initial, cfg)
    report = chi(g, numeric, exact)

    case_id = spec.case_id
    if spec.output is not None:
        stem = f'case{case_id or "custom"}_{spec.solution}'
        tables.write_grid(Path(spec.output) / f'{stem}_lattice.txt', g)
        tables.write_field(Path(spec.output) / f'{stem}_field.txt', numeric)
        logging.debug(f'Wrote {stem} tables to {spec.output}')

    return Table2Row(
        case_id=case_id,
        solution=spec.solution,
        chi=report.chi,
        lattice=spec.lattice.value,
        a=spec.a,
        b=spec.b,
        c=spec.c,
        x0=spec.x0,
        y0=spec.y0,
        num_sites=report.num_sites,
        excluded_sites=report.excluded_sites,
        reference=PUBLISHED_CHI.get((spec.solution, case_id))
        if case_id is not None
        else None,
        interpretation=case_id in INTERPRETED,
        marching=spec.marching.value,
        coverage=coverage(g, reference_box(spec)),
    )


def reference_box(spec: ExperimentSpec) -> Box:
    """
    Bounding box of the orthogonal case at the origin and size of ``spec``.
    """
    _, a, _ = CASES[1]
    g = build_orthogonal(a=a, b=spec.b, x0=spec.x0, y0=spec.y0, N=spec.N, M=spec.M)
    return bounding_box(g)
