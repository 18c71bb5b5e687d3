import dataclasses as dc
import os
import typing as t
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path

import yaml

from . import config_dicts
from .config import Config

File = t.Union[Path, str]

# The top-level directory of the project
ROOT = Path(__file__).parents[2]

# The default prefix used for config environment variables
PREFIX = 'LATTICEBURGERS_'

# The YAML file read on top of the defaults, relative to the working directory
CONFIG_FILE = os.path.join('.latticeburgers', 'config.yaml')


@dataclass(frozen=True)
class ConfigSettings:
    """
    A class that reads a config dataclass from a YAML file and environment
    variables.

    :param cls: The dataclass to read.
    :param config_file: The YAML file to read, if it exists.
    :param prefix: The prefix to use for environment variables.
    :param environ: The environment variables to read from.
    :param base_config: Values to start from instead of the class defaults.
    """

    cls: t.Type
    config_file: File
    prefix: str
    environ: t.Optional[t.Dict] = None
    base_config: t.Optional[t.Union[Config, t.Dict]] = None

    @cached_property
    def config(self) -> t.Any:
        """Read the config dataclass"""

        if isinstance(self.base_config, dict):
            parent = self.base_config
        elif isinstance(self.base_config, Config):
            parent = self.base_config.dict()
        else:
            parent = self.cls().dict()

        env = dict(os.environ if self.environ is None else self.environ)
        env = config_dicts.environ_to_config_dict(self.prefix, parent, env)

        if os.path.exists(self.config_file):
            with open(self.config_file) as f:
                kwargs = yaml.safe_load(f) or {}
        else:
            kwargs = {}

        kwargs = config_dicts.combine_configs((parent, kwargs, env))
        return _dataclass_from_dict(self.cls, kwargs)


def _dataclass_from_dict(cls, d):
    if dc.is_dataclass(cls) and isinstance(d, dict):
        fieldtypes = {f.name: f.type for f in dc.fields(cls)}
        return cls(**{f: _dataclass_from_dict(fieldtypes[f], d[f]) for f in d})
    if isinstance(cls, type) and issubclass(cls, Enum) and not isinstance(d, cls):
        return cls(d)
    return d


def build_config(cfg: t.Optional[Config] = None) -> Config:
    """
    Build the config object from the environment variables and config files.
    """
    settings = ConfigSettings(Config, CONFIG_FILE, PREFIX, base_config=cfg)
    return settings.config


CFG = build_config()
