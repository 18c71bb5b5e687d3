import dataclasses as dc
import math

import numpy

from latticeburgers import logging
from latticeburgers.base.exceptions import (
    EmptyComparisonError,
    UndefinedEstimatorError,
)
from latticeburgers.calculus.operators import Field
from latticeburgers.lattice.grid import Grid
from latticeburgers.solutions.exact import ExactSolution


@dc.dataclass(frozen=True)
class ChiReport:
    '''
    Relative discrete L2 distance between a computed field and an exact
    solution.

    :param chi: sqrt(sum (u - f)^2 / sum f^2)
    :param num_sites: Sites compared
    :param excluded_sites: Sites skipped because ``u`` is absent or the
                           solution is undefined there
    '''

    chi: float
    num_sites: int
    excluded_sites: int

    def line(self) -> str:
        return (
            f'chi={format(self.chi, ".17g")} '
            f'sites={self.num_sites} excluded={self.excluded_sites}'
        )


def chi(g: Grid, numeric: Field, exact: ExactSolution) -> ChiReport:
    """
    Compare ``numeric`` with ``exact`` on every site where both exist.

    :param g: The lattice
    :param numeric: The computed field
    :param exact: The exact solution
    """
    numeric.check(g)
    defined = numpy.vectorize(exact.domain, otypes=[bool])(g.x, g.y)
    compared = numeric.populated & defined
    included = int(numpy.count_nonzero(compared))
    if not included:
        raise EmptyComparisonError('No site has both a value and an exact solution')

    f = exact.sample(g.x[compared], g.y[compared])
    error = float(numpy.sum((numeric.u[compared] - f) ** 2))
    norm = float(numpy.sum(f * f))
    if norm == 0:
        raise UndefinedEstimatorError(
            f'The exact solution {exact.id} vanishes at every compared site'
        )

    report = ChiReport(
        chi=math.sqrt(error / norm),
        num_sites=included,
        excluded_sites=g.N * g.M - included,
    )
    logging.info(f'{exact.id} on {g.N}x{g.M}:', report.line())
    return report
