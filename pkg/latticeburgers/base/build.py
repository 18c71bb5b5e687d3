import typing as t

from latticeburgers import logging
from latticeburgers.backends.base.compute import ComputeBackend
from latticeburgers.backends.local.compute import LocalComputeBackend
from latticeburgers.base.exceptions import InvalidArgumentError


def build_compute(compute: t.Optional[str]) -> ComputeBackend:
    """
    Build the compute backend named by a URI.

    :param compute: 'local', 'dask+thread' or 'dask+tcp://<host>:<port>'
    """
    logging.debug('Connecting to compute client:', compute)

    if compute == 'local' or compute is None:
        return LocalComputeBackend()

    if compute == 'dask+thread':
        from latticeburgers.backends.dask.compute import DaskComputeBackend

        return DaskComputeBackend('local', local=True)

    if compute.split('://')[0] == 'dask+tcp':
        from latticeburgers.backends.dask.compute import DaskComputeBackend

        uri = compute.split('+')[-1]
        return DaskComputeBackend(uri)

    raise InvalidArgumentError(
        f'Compute {compute} is not a valid compute configuration.'
    )
