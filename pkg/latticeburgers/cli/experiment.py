import sys
import typing as t
from pathlib import Path

from typer import Option

import latticeburgers as s
from latticeburgers.base.config import BoundaryMode
from latticeburgers.calculus.operators import Field
from latticeburgers.estimator.chi import chi as chi_estimator
from latticeburgers.experiments import table2 as experiments
from latticeburgers.misc import tables
from latticeburgers.scheme.burgers import EvolutionConfig, evolve as march
from latticeburgers.scheme.burgers import full_steps, max_residual
from latticeburgers.solutions.exact import solution as get_solution

from . import command, options

SOLUTION = Option(None, '--solution', help='f1, f2 or affine')
OUT_DIR = Option(None, '--out', help='Directory for table2.txt and the per-case tables')
RUN_KEYS = ('boundary', 'marching')


@command(help='March the scheme from an exact initial row or pair of columns')
def evolve(
    lattice: t.Optional[str] = options.LATTICE,
    a: t.Optional[float] = options.A,
    b: t.Optional[float] = options.B,
    c: t.Optional[float] = options.C,
    x0: t.Optional[float] = options.X0,
    y0: t.Optional[float] = options.Y0,
    n: t.Optional[int] = options.N,
    m: t.Optional[int] = options.M,
    config: t.Optional[Path] = options.CONFIG,
    solution: t.Optional[str] = SOLUTION,
    boundary: t.Optional[str] = options.BOUNDARY,
    marching: t.Optional[str] = options.MARCHING,
    steps: t.Optional[int] = Option(
        None, '--steps', help='Rows or columns to march, all if unset'
    ),
    out: t.Optional[Path] = Option(None, '--out', help='File instead of stdout'),
):
    values = options.resolve(
        config,
        ('solution', 'steps', *RUN_KEYS),
        lattice=lattice,
        a=a,
        b=b,
        c=c,
        x0=x0,
        y0=y0,
        n=n,
        m=m,
        solution=solution,
        boundary=boundary,
        marching=marching,
        steps=steps,
    )
    g = options.lattice_args(values).grid()
    exact = get_solution(values.get('solution', 'f1'))
    mode = options.boundary_mode(values.get('boundary'))
    direction = options.marching(values.get('marching'))
    cfg = EvolutionConfig(
        boundary_mode=mode,
        oracle=exact if mode == BoundaryMode.ORACLE else None,
        steps=int(values.get('steps', full_steps(g, direction))),
        marching=direction,
    )
    f = march(g, Field(exact.sample(g.x, g.y)), cfg)
    tables.write_field(sys.stdout if out is None else out, f)
    print(f'max_residual={tables.format_value(max_residual(g, f))}')


@command(help='Compare a field table with an exact solution')
def chi(
    field: Path = Option(..., '--field', help='`n m u` table'),
    lattice: t.Optional[str] = options.LATTICE,
    a: t.Optional[float] = options.A,
    b: t.Optional[float] = options.B,
    c: t.Optional[float] = options.C,
    x0: t.Optional[float] = options.X0,
    y0: t.Optional[float] = options.Y0,
    n: t.Optional[int] = options.N,
    m: t.Optional[int] = options.M,
    config: t.Optional[Path] = options.CONFIG,
    grid: t.Optional[Path] = Option(
        None, '--grid', help='`n m x y` table instead of the lattice flags'
    ),
    solution: t.Optional[str] = SOLUTION,
):
    values = options.resolve(
        config,
        ('solution',),
        lattice=lattice,
        a=a,
        b=b,
        c=c,
        x0=x0,
        y0=y0,
        n=n,
        m=m,
        solution=solution,
    )
    if grid is None:
        g = options.lattice_args(values).grid()
    else:
        g = tables.read_grid(grid)
    f = tables.read_field(field, shape=g.shape)
    exact = get_solution(values.get('solution', 'f1'))
    print(chi_estimator(g, f, exact).line())


@command(help='Run the five lattice cases for f1 and f2')
def table2(
    x0: t.Optional[float] = options.X0,
    y0: t.Optional[float] = options.Y0,
    config: t.Optional[Path] = options.CONFIG,
    boundary: t.Optional[str] = options.BOUNDARY,
    marching: t.Optional[str] = options.MARCHING,
    out: t.Optional[Path] = OUT_DIR,
):
    values = options.resolve(
        config,
        RUN_KEYS,
        defaults=_origin(),
        x0=x0,
        y0=y0,
        boundary=boundary,
        marching=marching,
    )
    rows = experiments.run_table2(
        (float(values['x0']), float(values['y0'])),
        options.boundary_mode(values.get('boundary')),
        output=None if out is None else str(out),
        marching=options.marching(values.get('marching')),
    )
    experiments.write_rows(sys.stdout, rows)
    if out is not None:
        experiments.write_rows(out / 'table2.txt', rows)
    print(experiments.summary(rows))


@command(help='Run the five cases at several origins and report the best')
def sweep(
    x0: t.Optional[t.List[float]] = Option(None, '--x0', help='Repeatable'),
    y0: t.Optional[t.List[float]] = Option(None, '--y0', help='Repeatable'),
    config: t.Optional[Path] = options.CONFIG,
    boundary: t.Optional[str] = options.BOUNDARY,
    marching: t.Optional[str] = options.MARCHING,
):
    default = _origin()
    file = options.read_config(config, (*default, *RUN_KEYS), default)
    xs = list(x0 or ()) or ([file['x0']] if 'x0' in file else [])
    ys = list(y0 or ()) or ([file['y0']] if 'y0' in file else [])
    origins = None
    if xs or ys:
        xs = xs or [default['x0']]
        ys = ys or [default['y0']]
        origins = [(x, y) for x in xs for y in ys]

    report = experiments.sweep_origins(
        origins,
        options.boundary_mode(boundary or file.get('boundary')),
        marching=options.marching(marching or file.get('marching')),
    )
    tables.write_table(
        sys.stdout,
        ('x0', 'y0', 'score'),
        ((x, y, score) for (x, y), score in sorted(report.scores.items())),
    )
    best_x, best_y = report.best_origin
    print(
        f'best_x0={tables.format_value(best_x)} best_y0={tables.format_value(best_y)} '
        f'score={tables.format_value(report.best_score)} '
        f'within_factor={str(report.within_factor).lower()}'
    )


def _origin() -> t.Dict[str, float]:
    e = s.CFG.experiment
    return {'x0': e.x0, 'y0': e.y0}
