import pytest

from latticeburgers.backends.local.compute import LocalComputeBackend
from latticeburgers.base.build import build_compute
from latticeburgers.base.exceptions import InvalidArgumentError


def _add(x, y=0):
    return x + y


def test_local_backend():
    backend = LocalComputeBackend()
    assert (backend.type, backend.name) == ('local', 'local')
    keys = [backend.submit(_add, i, y=10) for i in range(3)]
    backend.wait_all()
    assert len(set(keys)) == 3
    assert backend.gather(keys[::-1]) == [12, 11, 10]
    assert backend.result(keys[0]) == 10
    backend.shutdown()
    assert backend.tasks == {}


def test_local_backend_raises_at_submission():
    backend = LocalComputeBackend()
    with pytest.raises(ZeroDivisionError):
        backend.submit(lambda: 1 / 0)


@pytest.mark.parametrize('uri', ('local', None))
def test_build_local(uri):
    assert isinstance(build_compute(uri), LocalComputeBackend)


@pytest.mark.parametrize('uri', ('ray://localhost:10001', 'dask', 'threads'))
def test_build_invalid(uri):
    with pytest.raises(InvalidArgumentError):
        build_compute(uri)
