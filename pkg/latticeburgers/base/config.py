"""
The classes in this file define the configuration variables for latticeburgers,
which means that this file gets imported before almost anything else, and
cannot contain any other imports from this project.
"""

import dataclasses as dc
import json
import typing as t
from enum import Enum

_CONFIG_IMMUTABLE = True


@dc.dataclass
class BaseConfigJSONable:
    _lock: t.ClassVar[bool] = False

    def force_set(self, name, value):
        """
        Forcefully setattr of BaseConfigJSONable instance
        """
        super().__setattr__(name, value)

    def __setattr__(self, name, value):
        if not _CONFIG_IMMUTABLE or self._lock is False:
            super().__setattr__(name, value)
            return

        raise AttributeError(
            f'Process attempted to set "{name}" attribute of immutable configuration '
            f'object {self}.'
        )


@dc.dataclass
class Tolerances(BaseConfigJSONable):
    """
    Numerical tolerances used across the library

    :param degeneracy: Relative threshold on the cell determinant
                       hx*hy - sx*sy, scaled by |hx*hy| + |sx*sy|
    :param commutation: Relative tolerance for |uxy - uyx| on Schwarzian lattices
    :param invariance: Relative tolerance for invariants under group flows
    :param schwarz: Absolute tolerance of the Schwarz lattice check
    :param step_residual: Absolute bound on the residual after an explicit step
    :param cancellation: Relative level at which a denominator of an invariant
                         counts as zero against the size of its own terms
    """

    degeneracy: float = 1e-12
    commutation: float = 1e-10
    invariance: float = 1e-9
    schwarz: float = 1e-12
    step_residual: float = 1e-12
    cancellation: float = 1e-10


class BoundaryMode(str, Enum):
    """
    How the explicit march fills the sites its stencil cannot reach
    """

    # Unreachable sites stay absent, so every step reaches fewer of them
    SHRINK = 'shrink'

    # Unreachable sites get the exact solution
    ORACLE = 'oracle'


class Marching(str, Enum):
    """
    Which index the explicit march advances
    """

    # Solve for u_{n,m+1} from row m; amplifies by up to 1 + 4 hy/hx^2 per row
    ROWS = 'rows'

    # Solve for u_{n+2,m} from columns n and n+1, seeded with the first two
    COLUMNS = 'columns'


@dc.dataclass
class Experiment(BaseConfigJSONable):
    """
    Defaults of the lattice experiments

    :param x0: x coordinate of the lattice origin (``a0`` on exponential lattices)
    :param y0: y coordinate of the lattice origin (``b0`` on exponential lattices)
    :param n_sites: Number of sites in the n direction
    :param m_sites: Number of sites in the m direction
    :param b: Spacing in the y direction
    :param boundary_mode: Boundary treatment of the explicit march
    :param marching: Index the experiment runs march along
    :param digits: Significant digits of every float written to a table
    """

    x0: float = 2.25
    y0: float = 2.25
    n_sites: int = 8
    m_sites: int = 8
    b: float = 0.1
    boundary_mode: BoundaryMode = BoundaryMode.ORACLE
    marching: Marching = Marching.COLUMNS
    digits: int = 17


@dc.dataclass
class Cluster(BaseConfigJSONable):
    """
    Describes where independent experiment cases run

    :param compute: The URI for compute i.e 'local', 'dask+tcp://localhost:8786'
                    "local": Run every case as a simple function call
                    "dask+thread": Run cases on a local threaded dask cluster
                    "dask+tcp://<host>:<port>": Run cases on a remote dask cluster
    """

    compute: str = 'local'


class LogLevel(str, Enum):
    """
    Enumerate log severity level
    """

    DEBUG = 'DEBUG'
    INFO = 'INFO'
    SUCCESS = "SUCCESS"
    WARN = 'WARN'
    ERROR = 'ERROR'


@dc.dataclass
class Config(BaseConfigJSONable):
    """
    The data class containing all configurable latticeburgers values

    :param tolerances: Numerical tolerances
    :param experiment: Defaults of the lattice experiments
    :param cluster: Settings for running independent cases
    :param log_level: The severity level of the logs
    :param dot_env: Optional ``.env`` file loaded before anything else
    """

    tolerances: Tolerances = dc.field(default_factory=Tolerances)
    experiment: Experiment = dc.field(default_factory=Experiment)
    cluster: Cluster = dc.field(default_factory=Cluster)

    log_level: LogLevel = LogLevel.INFO

    dot_env: t.Optional[str] = None

    def __post_init__(self):
        if self.dot_env:
            import dotenv

            dotenv.load_dotenv(self.dot_env)
        self._lock = True

    def dict(self):
        return dc.asdict(self)

    def match(self, cfg: t.Dict):
        """
        Match the target cfg dict with the tolerances and experiment of `self`.
        """
        _dict = self.dict()
        self_cfg = {k: _dict[k] for k in ('tolerances', 'experiment')}
        cfg = {k: cfg.get(k) for k in ('tolerances', 'experiment')}

        self_hash = hash(json.dumps(self_cfg, sort_keys=True))
        cfg_hash = hash(json.dumps(cfg, sort_keys=True))
        return self_hash == cfg_hash

    def force_set(self, name, value):
        """
        Brings immutable behaviour to `CFG` instance.

        CAUTION: Only use it in tests or the CLI, as this can bring
        unexpected behaviour.
        """
        parent = self
        names = name.split('.')
        if len(names) > 1:
            name = names[-1]
            for n in names[:-1]:
                parent = getattr(parent, n)
            parent.force_set(name, value)
        else:
            return super().force_set(name, value)
