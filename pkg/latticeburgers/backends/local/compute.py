import typing as t
import uuid

from latticeburgers import logging
from latticeburgers.backends.base.compute import ComputeBackend


class LocalComputeBackend(ComputeBackend):
    """
    Runs every case in-process at submission time.
    """

    def __init__(self):
        self.__outputs: t.Dict[str, t.Any] = {}

    @property
    def type(self) -> str:
        return 'local'

    @property
    def name(self) -> str:
        return 'local'

    def submit(self, function: t.Callable, *args, **kwargs) -> str:
        key = str(uuid.uuid4())
        logging.debug(f'Running {getattr(function, "__name__", function)} as {key}')
        self.__outputs[key] = function(*args, **kwargs)
        return key

    @property
    def tasks(self) -> t.Dict[str, t.Any]:
        return self.__outputs

    def wait_all(self) -> None:
        pass

    def result(self, identifier: str) -> t.Any:
        return self.__outputs[identifier]

    def disconnect(self) -> None:
        pass

    def shutdown(self) -> None:
        self.__outputs.clear()
