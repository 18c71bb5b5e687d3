import os
import random

import numpy as np
import pytest

from latticeburgers.backends.dask.compute import DaskComputeBackend

'''
Fixtures shared by the tests in `test/integration/`.

A Dask client connects to the scheduler in ``LATTICEBURGERS_DASK_URI`` and
falls back to a local threaded cluster when it is not set.
'''

# Set the seeds
random.seed(42)
np.random.seed(42)


@pytest.fixture(scope='package')
def dask_client():
    address = os.environ.get('LATTICEBURGERS_DASK_URI')
    if address:
        client = DaskComputeBackend(address=address, local=False)
    else:
        client = DaskComputeBackend('local', local=True)

    yield client

    client.disconnect()
