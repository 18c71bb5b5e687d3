import sys
import typing as t
from pathlib import Path

import numpy
from typer import Argument, Option

from latticeburgers.calculus.operators import Field
from latticeburgers.lattice.schwarz import schwarz_check
from latticeburgers.misc import tables
from latticeburgers.solutions.exact import solution as get_solution
from latticeburgers.symmetry.flows import commutator_flow_test
from latticeburgers.symmetry.invariants import NAMES, invariants, scheme_data

from . import command, options

FLOW_POINT = {'x': 1.0, 'y': 1.0, 'u': 0.0, 'delta': 1e-3}


@command(help='Write the sites of a lattice as an `n m x y` table')
def lattice(
    lattice: t.Optional[str] = options.LATTICE,
    a: t.Optional[float] = options.A,
    b: t.Optional[float] = options.B,
    c: t.Optional[float] = options.C,
    x0: t.Optional[float] = options.X0,
    y0: t.Optional[float] = options.Y0,
    n: t.Optional[int] = options.N,
    m: t.Optional[int] = options.M,
    config: t.Optional[Path] = options.CONFIG,
    out: t.Optional[Path] = Option(None, '--out', help='File instead of stdout'),
):
    values = options.resolve(
        config, lattice=lattice, a=a, b=b, c=c, x0=x0, y0=y0, n=n, m=m
    )
    g = options.lattice_args(values).grid()
    tables.write_grid(sys.stdout if out is None else out, g)


@command(help='Report how far a lattice is from the Schwarz conditions')
def check_schwarz(
    lattice: t.Optional[str] = options.LATTICE,
    a: t.Optional[float] = options.A,
    b: t.Optional[float] = options.B,
    c: t.Optional[float] = options.C,
    x0: t.Optional[float] = options.X0,
    y0: t.Optional[float] = options.Y0,
    n: t.Optional[int] = options.N,
    m: t.Optional[int] = options.M,
    config: t.Optional[Path] = options.CONFIG,
    tol: t.Optional[float] = Option(None, '--tol', help='Absolute tolerance'),
):
    values = options.resolve(
        config, lattice=lattice, a=a, b=b, c=c, x0=x0, y0=y0, n=n, m=m
    )
    report = schwarz_check(options.lattice_args(values).grid(), tol=tol)
    for name in (
        'max_sx_violation',
        'max_hx_violation',
        'max_sy_violation',
        'max_hy_violation',
    ):
        print(f'{name}={tables.format_value(getattr(report, name))}')
    print(f'is_schwarzian={str(report.is_schwarzian).lower()}')


@command(name='invariants', help='Write K1..K10 and I1 of every six-point stencil')
def invariants_table(
    lattice: t.Optional[str] = options.LATTICE,
    a: t.Optional[float] = options.A,
    b: t.Optional[float] = options.B,
    c: t.Optional[float] = options.C,
    x0: t.Optional[float] = options.X0,
    y0: t.Optional[float] = options.Y0,
    n: t.Optional[int] = options.N,
    m: t.Optional[int] = options.M,
    config: t.Optional[Path] = options.CONFIG,
    field: t.Optional[Path] = Option(None, '--field', help='`n m u` table'),
    solution: t.Optional[str] = Option(
        None, '--solution', help='Sample f1, f2 or affine when no field is given'
    ),
    out: t.Optional[Path] = Option(None, '--out', help='File instead of stdout'),
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
    g = options.lattice_args(values).grid()
    if field is not None:
        f = tables.read_field(field, shape=g.shape)
    else:
        exact = get_solution(values.get('solution', 'f1'))
        f = Field(exact.sample(g.x, g.y))

    rows = []
    for i in range(g.N - 2):
        for j in range(g.M - 2):
            found = invariants(scheme_data(g, f, i, j), allow_undefined=True)
            rows.append((i, j, *found.values().values()))
    tables.write_table(sys.stdout if out is None else out, ('n', 'm', *NAMES), rows)


@command(help='Compare the commutator of two flows with the bracket table')
def flow_test(
    a: str = Argument(..., help='First generator, V1..V5'),
    b: str = Argument(..., help='Second generator, V1..V5'),
    x: t.Optional[float] = Option(None, '--x', help='x of the point, 1 if unset'),
    y: t.Optional[float] = Option(None, '--y', help='y of the point, 1 if unset'),
    u: t.Optional[float] = Option(None, '--u', help='u of the point, 0 if unset'),
    delta: t.Optional[float] = Option(
        None, '--delta', help='Flow parameter, 1e-3 if unset'
    ),
    config: t.Optional[Path] = options.CONFIG,
):
    values = options.resolve(config, defaults=FLOW_POINT, x=x, y=y, u=u, delta=delta)
    point = (float(values['x']), float(values['y']), float(values['u']))
    report = commutator_flow_test(a, b, point, float(values['delta']))
    fmt = tables.format_value
    print('observed=' + ','.join(fmt(v) for v in numpy.asarray(report.observed)))
    print('expected=' + ','.join(fmt(v) for v in numpy.asarray(report.expected)))
    print(f'error={fmt(report.error)}')
