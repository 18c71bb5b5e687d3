"""
Flags shared by the subcommands. Values come from the defaults, then a
``key=value`` file given by ``--config``, then the flags themselves.
"""

import dataclasses as dc
import typing as t
from pathlib import Path

from typer import Option

import latticeburgers as s
from latticeburgers.base import config_dicts
from latticeburgers.base.config import BoundaryMode, Marching
from latticeburgers.base.exceptions import InvalidArgumentError
from latticeburgers.lattice.grid import Grid, LatticeKind, build_lattice

LATTICE = Option(None, '--lattice', help='orthogonal or exponential')
A = Option(None, '--a', help='Spacing in x')
B = Option(None, '--b', help='Spacing in y')
C = Option(None, '--c', help='Dilation per row of the exponential lattice')
X0 = Option(None, '--x0', help='x of site (0, 0)')
Y0 = Option(None, '--y0', help='y of site (0, 0)')
N = Option(None, '--n', help='Number of sites in n')
M = Option(None, '--m', help='Number of sites in m')
CONFIG = Option(None, '--config', help='key=value file; flags win over it')
BOUNDARY = Option(None, '--boundary', help='shrink or oracle')
MARCHING = Option(None, '--marching', help='rows or columns')


@dc.dataclass(frozen=True)
class LatticeArgs:
    lattice: LatticeKind
    a: float
    b: float
    c: float
    x0: float
    y0: float
    n: int
    m: int

    def grid(self) -> Grid:
        return build_lattice(
            self.lattice, self.a, self.b, self.x0, self.y0, self.n, self.m, c=self.c
        )


def _defaults() -> t.Dict[str, t.Any]:
    e = s.CFG.experiment
    return {
        'lattice': LatticeKind.orthogonal,
        'a': 0.1,
        'b': e.b,
        'c': 0.0,
        'x0': e.x0,
        'y0': e.y0,
        'n': e.n_sites,
        'm': e.m_sites,
    }


def read_config(
    config: t.Optional[Path],
    allowed: t.Collection[str],
    like: t.Optional[t.Mapping[str, t.Any]] = None,
) -> t.Dict[str, t.Any]:
    """
    The pairs of a ``--config`` file, each converted to the type of its entry
    in ``like``; keys without an entry stay strings.

    :param config: The ``key=value`` file, if any
    :param allowed: Keys the file may set
    :param like: Values whose types the file's values take
    """
    if config is None:
        return {}
    like = like or {}
    try:
        pairs = config_dicts.read_key_values(config)
    except (OSError, ValueError) as e:
        raise InvalidArgumentError(str(e))
    values = {}
    for key, value in pairs.items():
        if key not in allowed:
            raise InvalidArgumentError(f'{config}: unknown key {key!r}')
        try:
            values[key] = config_dicts.coerce(value, like.get(key))
        except ValueError as e:
            raise InvalidArgumentError(f'{config}: {key}: {e}')
    return values


def resolve(
    config: t.Optional[Path],
    extra: t.Sequence[str] = (),
    defaults: t.Optional[t.Dict[str, t.Any]] = None,
    **flags,
) -> t.Dict[str, t.Any]:
    """
    Merge defaults, the ``--config`` file and the flags that were given.

    :param config: The ``key=value`` file, if any
    :param extra: Keys the file may also set for this subcommand, returned as
                  strings when present
    :param defaults: Values for the keys the subcommand takes; the lattice
                     parameters if not given
    :param flags: Flag values, ``None`` when not given
    """
    values = _defaults() if defaults is None else dict(defaults)
    values.update(read_config(config, {*values, *extra}, values))
    values.update({k: v for k, v in flags.items() if v is not None})
    return values


def lattice_args(values: t.Dict[str, t.Any]) -> LatticeArgs:
    try:
        kind = LatticeKind(values['lattice'])
    except ValueError:
        raise InvalidArgumentError(f'Unknown lattice kind {values["lattice"]!r}')
    return LatticeArgs(
        lattice=kind,
        a=float(values['a']),
        b=float(values['b']),
        c=float(values['c']),
        x0=float(values['x0']),
        y0=float(values['y0']),
        n=int(values['n']),
        m=int(values['m']),
    )


def boundary_mode(value: t.Optional[str]) -> BoundaryMode:
    if value is None:
        return s.CFG.experiment.boundary_mode
    try:
        return BoundaryMode(value)
    except ValueError:
        raise InvalidArgumentError(f'Unknown boundary mode {value!r}')


def marching(value: t.Optional[str]) -> Marching:
    if value is None:
        return s.CFG.experiment.marching
    try:
        return Marching(value)
    except ValueError:
        raise InvalidArgumentError(f'Unknown marching {value!r}')
