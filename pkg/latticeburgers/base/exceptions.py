import typing as t

from latticeburgers import logging


class BaseException(Exception):
    '''
    BaseException which logs its message at debug level when raised
    '''

    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg
        logging.debug(f'{self.__class__.__name__}: {self.msg}')

    def __str__(self):
        return self.msg


class InvalidArgumentError(BaseException, ValueError):
    '''
    InvalidArgumentError
    '''


class OutOfBoundsError(BaseException, IndexError):
    '''
    A site index outside the range an operation can evaluate
    '''


class DegenerateLatticeError(BaseException):
    '''
    A cell with |hx*hy - sx*sy| at or below the degeneracy tolerance
    '''


class DegenerateStencilError(BaseException):
    '''
    A six-point stencil whose cross-derivative denominator vanishes
    '''


class FlowSingularityError(BaseException):
    '''
    A group parameter outside the domain of a flow
    '''


class InvariantUndefinedError(BaseException):
    '''
    One or more invariants have a vanishing denominator

    :param components: Names of the undefined invariants
    '''

    def __init__(self, msg, components: t.Sequence[str] = ()):
        self.components = tuple(components)
        super().__init__(msg)


class InvalidStencilError(BaseException):
    '''
    A stencil the invariants cannot be evaluated on (h^y <= 0)
    '''


class UnsupportedLatticeError(BaseException):
    '''
    A lattice the explicit march cannot handle (sigma^y != 0)
    '''


class DomainError(BaseException, ValueError):
    '''
    A point outside the domain of an exact solution
    '''


class UndefinedEstimatorError(BaseException):
    '''
    UndefinedEstimatorError
    '''


class EmptyComparisonError(BaseException):
    '''
    EmptyComparisonError
    '''


ERRORS: t.Tuple[t.Type[BaseException], ...] = (
    InvalidArgumentError,
    OutOfBoundsError,
    DegenerateLatticeError,
    DegenerateStencilError,
    FlowSingularityError,
    InvariantUndefinedError,
    InvalidStencilError,
    UnsupportedLatticeError,
    DomainError,
    UndefinedEstimatorError,
    EmptyComparisonError,
)
