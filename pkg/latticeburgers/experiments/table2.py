import dataclasses as dc
import itertools
import math
import typing as t

from prettytable import PrettyTable
from tqdm import tqdm

import latticeburgers as s
from latticeburgers import logging
from latticeburgers.backends.base.compute import ComputeBackend
from latticeburgers.base.build import build_compute
from latticeburgers.base.config import BoundaryMode, Marching
from latticeburgers.base.exceptions import DomainError, InvalidArgumentError
from latticeburgers.experiments.cases import (
    CASE_IDS,
    SOLUTION_IDS,
    Table2Row,
    case_spec,
    run_case,
)
from latticeburgers.misc import tables

Origin = t.Tuple[float, float]

# Best sweep origin must reproduce every published value within this factor
FACTOR = 3.0

DEFAULT_ORIGINS: t.Tuple[Origin, ...] = tuple(
    itertools.product((0.0, 1.0, 2.0, 2.25, 2.5), (0.1, 1.0, 2.0, 2.25, 2.5))
)


def run_table2(
    origin: t.Optional[Origin] = None,
    boundary_mode: t.Optional[BoundaryMode] = None,
    compute: t.Optional[ComputeBackend] = None,
    output: t.Optional[str] = None,
    marching: t.Optional[Marching] = None,
) -> t.List[Table2Row]:
    """
    Run all five cases for both solutions, one task per run, and return the
    rows in case order whichever backend ran them.

    :param origin: ``(x0, y0)`` of every lattice
    :param boundary_mode: Boundary treatment of the march
    :param compute: Backend to run on; built from ``CFG.cluster.compute`` if
                    not given, and shut down afterwards
    :param output: Directory for the per-run tables
    :param marching: Index the march advances
    """
    specs = [
        case_spec(case_id, sol, origin, boundary_mode, output, marching)
        for sol in SOLUTION_IDS
        for case_id in CASE_IDS
    ]

    owned = compute is None
    backend = build_compute(s.CFG.cluster.compute) if compute is None else compute
    try:
        keys = [backend.submit(run_case, spec) for spec in specs]
        backend.wait_all()
        rows = backend.gather(keys)
    finally:
        if owned:
            backend.disconnect()
    return rows


def _chi(rows: t.Sequence[Table2Row], solution: str, case_id: int) -> float:
    for row in rows:
        if row.solution == solution and row.case_id == case_id:
            return row.chi
    raise InvalidArgumentError(f'No row for {solution} case {case_id}')


def orderings(rows: t.Sequence[Table2Row]) -> t.Dict[str, bool]:
    """
    The qualitative conclusions of the comparison, evaluated on ``rows``:
    the orthogonal lattice beats the exponential ones on f2, and a lattice
    closer to Schwarzian (smaller c at the same a) beats a farther one.
    """
    f2 = {i: _chi(rows, 'f2', i) for i in CASE_IDS}
    checks = {
        'f2: chi(1) < chi(5) < chi(2)': f2[1] < f2[5] < f2[2],
        'f2: orthogonal below every exponential case': all(
            f2[1] < f2[i] for i in CASE_IDS if i != 1
        ),
    }
    for sol in SOLUTION_IDS:
        closer, farther = _chi(rows, sol, 5), _chi(rows, sol, 2)
        checks[f'{sol}: c=0.1 below c=0.15 at a=0.1'] = closer < farther
    return checks


def write_rows(target: tables.Target, rows: t.Sequence[Table2Row]) -> None:
    tables.write_table(target, Table2Row.HEADER, (row.cells() for row in rows))


def summary(rows: t.Sequence[Table2Row]) -> str:
    table = PrettyTable()
    table.field_names = [
        'case',
        'solution',
        'lattice',
        'a',
        'c',
        'chi',
        'published',
        'ratio',
        'coverage',
    ]
    for row in rows:
        case = '?' if row.case_id is None else str(row.case_id)
        table.add_row(
            [
                case + ('*' if row.interpretation else ''),
                row.solution,
                row.lattice,
                row.a,
                row.c,
                f'{row.chi:.5f}',
                '-' if row.reference is None else f'{row.reference:.5f}',
                '-' if row.ratio is None else f'{row.ratio:.2f}',
                '-' if row.coverage is None else f'{row.coverage:.2f}',
            ]
        )
    lines = [str(table), '* lattice parameters interpreted']
    for name, ok in orderings(rows).items():
        lines.append(f'{"holds" if ok else "fails"}: {name}')
    return '\n'.join(lines)


def score(rows: t.Sequence[Table2Row]) -> float:
    """
    Worst ``max(ratio, 1 / ratio)`` over the rows with a published value.
    """
    worst = 1.0
    for row in rows:
        if row.ratio is None:
            continue
        worst = max(worst, row.ratio, 1 / row.ratio) if row.ratio > 0 else math.inf
    return worst


@dc.dataclass(frozen=True)
class SweepReport:
    '''
    Outcome of running every case at several origins.

    :param scores: Score of every origin that could be run
    :param best_origin: Origin with the lowest score
    :param best_score: Its score
    :param within_factor: Every row of the best origin is within ``FACTOR``
    :param skipped: Origins outside the domain of a solution
    '''

    scores: t.Dict[Origin, float]
    best_origin: Origin
    best_score: float
    within_factor: bool
    skipped: t.Tuple[Origin, ...] = ()


def sweep_origins(
    origins: t.Optional[t.Sequence[Origin]] = None,
    boundary_mode: t.Optional[BoundaryMode] = None,
    compute: t.Optional[ComputeBackend] = None,
    marching: t.Optional[Marching] = None,
) -> SweepReport:
    """
    Score every origin against the published values and log the best.

    :param origins: ``(x0, y0)`` pairs; defaults to ``DEFAULT_ORIGINS``
    :param boundary_mode: Boundary treatment of the march
    :param compute: Backend to run on
    :param marching: Index the march advances
    """
    origins = DEFAULT_ORIGINS if origins is None else tuple(origins)
    if not origins:
        raise InvalidArgumentError('No origins to sweep')

    scores: t.Dict[Origin, float] = {}
    skipped = []
    for origin in tqdm(origins, desc='origins'):
        try:
            rows = run_table2(origin, boundary_mode, compute, marching=marching)
        except DomainError as e:
            logging.warn(f'Skipping origin {origin}:', e)
            skipped.append(origin)
            continue
        scores[origin] = score(rows)

    if not scores:
        raise DomainError('No origin could be run')
    best = min(scores, key=lambda o: (scores[o], o))
    report = SweepReport(
        scores=scores,
        best_origin=best,
        best_score=scores[best],
        within_factor=scores[best] <= FACTOR,
        skipped=tuple(skipped),
    )
    logging.success(
        f'Best origin x0={best[0]} y0={best[1]}: worst ratio {report.best_score:.3f}',
        'within' if report.within_factor else 'outside',
        f'a factor {FACTOR}',
    )
    return report
