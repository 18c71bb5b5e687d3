# ruff: noqa: E402
from .base import config, configs, logger

ICON = '▦'
CFG = configs.CFG
ROOT = configs.ROOT

logging = logger.Logging

__version__ = '0.1.0'

from .calculus.operators import Field, JetValues, dx, dy, jet
from .estimator.chi import ChiReport, chi
from .lattice.grid import (
    Grid,
    LatticeDiffs,
    build_exponential,
    build_lattice,
    build_orthogonal,
    diffs_at,
)
from .lattice.schwarz import SchwarzReport, schwarz_check
from .scheme.burgers import (
    EvolutionConfig,
    evolve,
    residual,
    step_across,
    step_explicit,
)
from .solutions.exact import ExactSolution, cole_hopf, f1, f2, solution
from .symmetry.flows import GroupFlow, apply_flow
from .symmetry.invariants import InvariantSet, SchemeData, invariants

__all__ = (
    'CFG',
    'ICON',
    'ROOT',
    'config',
    'logging',
    'ChiReport',
    'EvolutionConfig',
    'ExactSolution',
    'Field',
    'Grid',
    'GroupFlow',
    'InvariantSet',
    'JetValues',
    'LatticeDiffs',
    'SchemeData',
    'SchwarzReport',
    'apply_flow',
    'build_exponential',
    'build_lattice',
    'build_orthogonal',
    'chi',
    'cole_hopf',
    'diffs_at',
    'dx',
    'dy',
    'evolve',
    'f1',
    'f2',
    'invariants',
    'jet',
    'residual',
    'schwarz_check',
    'solution',
    'step_across',
    'step_explicit',
)
