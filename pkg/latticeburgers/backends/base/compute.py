import typing as t
from abc import ABC, abstractmethod


class ComputeBackend(ABC):
    """
    Runs independent experiment cases and hands back their results by key.
    """

    @property
    @abstractmethod
    def type(self) -> str:
        """
        Return the type of compute engine
        """
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        """
        Return the name of current compute engine
        """
        pass

    @abstractmethod
    def submit(self, function: t.Callable, *args, **kwargs) -> str:
        """
        Schedule ``function(*args, **kwargs)`` and return a key for its result.

        :param function: The function to be executed.
        """
        pass

    @property
    @abstractmethod
    def tasks(self) -> t.Dict[str, t.Any]:
        """
        Submitted tasks by key
        """
        pass

    @abstractmethod
    def wait_all(self) -> None:
        """
        Waits for all pending tasks to complete.
        """
        pass

    @abstractmethod
    def result(self, identifier: str) -> t.Any:
        """
        Retrieves the result of a previously submitted task, blocking until
        it is available. Exceptions raised by the task are raised here.

        :param identifier: The key returned by ``submit``.
        """
        pass

    def gather(self, identifiers: t.Sequence[str]) -> t.List[t.Any]:
        """
        Results in the order of ``identifiers``.
        """
        return [self.result(i) for i in identifiers]

    @abstractmethod
    def disconnect(self) -> None:
        """
        Disconnect the client.
        """
        pass

    @abstractmethod
    def shutdown(self) -> None:
        """
        Shuts down the compute cluster.
        """
        pass
