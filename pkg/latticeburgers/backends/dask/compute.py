import typing as t

from dask import distributed

from latticeburgers import logging
from latticeburgers.backends.base.compute import ComputeBackend


class DaskComputeBackend(ComputeBackend):
    """
    Runs cases on a Dask cluster.

    :param address: The address of the Dask scheduler.
    :param local: Set to True to create a local threaded Dask cluster.
    :param **kwargs: Additional keyword arguments to be passed to the client.
    """

    def __init__(
        self,
        address: t.Optional[str] = None,
        local: bool = False,
        **kwargs,
    ):
        self.address = address
        self._futures: t.Dict[str, distributed.Future] = {}

        if local:
            # Threads share the in-process configuration.
            self.client = distributed.Client(processes=False)
        else:
            assert address, 'Address cannot be ``None`` for non local dask client'
            self.client = distributed.Client(address=address, **kwargs)

    @property
    def type(self) -> str:
        return 'distributed'

    @property
    def name(self) -> str:
        return f'dask://{self.address}'

    def submit(self, function: t.Callable, *args, **kwargs) -> str:
        # pure=False: identical cases are still run as separate tasks
        future = self.client.submit(function, *args, pure=False, **kwargs)
        self._futures[future.key] = future
        logging.debug(f'Submitted {future.key}')
        return future.key

    @property
    def tasks(self) -> t.Dict[str, distributed.Future]:
        return self._futures

    def wait_all(self) -> None:
        distributed.wait(list(self._futures.values()))

    def result(self, identifier: str) -> t.Any:
        return self.client.gather(self._futures[identifier])

    def disconnect(self) -> None:
        self.client.close()

    def shutdown(self) -> None:
        self.client.shutdown()
