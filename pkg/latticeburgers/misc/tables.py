"""
Plain-text tables: a header line, then one space-separated row per record.
Floats carry ``CFG.experiment.digits`` significant digits, so writing the same
data twice gives the same bytes.
"""

import io
import math
import typing as t
from pathlib import Path

import numpy

import latticeburgers as s
from latticeburgers.base.exceptions import InvalidArgumentError
from latticeburgers.calculus.operators import Field
from latticeburgers.lattice.grid import Grid

Cell = t.Union[int, float, str, None]
Target = t.Union[str, Path, t.TextIO]


def format_value(value: Cell, digits: t.Optional[int] = None) -> str:
    """
    >>> format_value(0.1, 17)
    '0.10000000000000001'
    >>> format_value(None)
    'nan'
    """
    digits = s.CFG.experiment.digits if digits is None else digits
    if value is None:
        return 'nan'
    if isinstance(value, (bool, str)):
        return str(value)
    if isinstance(value, (int, numpy.integer)):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return 'nan'
    return format(value, f'.{digits}g')


def render(header: t.Sequence[str], rows: t.Iterable[t.Sequence[Cell]]) -> str:
    lines = [' '.join(header)]
    lines.extend(' '.join(format_value(v) for v in row) for row in rows)
    return '\n'.join(lines) + '\n'


def write_table(
    target: Target, header: t.Sequence[str], rows: t.Iterable[t.Sequence[Cell]]
) -> None:
    text = render(header, rows)
    if isinstance(target, (str, Path)):
        Path(target).parent.mkdir(parents=True, exist_ok=True)
        Path(target).write_text(text)
    else:
        target.write(text)


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def read_table(
    source: Target,
) -> t.Tuple[t.Optional[t.List[str]], t.List[t.List[str]]]:
    """
    Split a table into its header (``None`` if absent) and rows of tokens.
    Blank lines and ``#`` comments are skipped.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    lines = [
        line.split()
        for line in io.StringIO(text)
        if line.strip() and not line.lstrip().startswith('#')
    ]
    if lines and not all(_is_number(tok) for tok in lines[0]):
        return lines[0], lines[1:]
    return None, lines


def _indexed(
    source: Target, columns: t.Sequence[str]
) -> t.Tuple[t.Tuple[int, int], t.Dict[str, numpy.ndarray]]:
    header, rows = read_table(source)
    if header is not None and list(header[: len(columns)]) != list(columns):
        raise InvalidArgumentError(
            f'Expected columns {" ".join(columns)}, got {" ".join(header)}'
        )
    if not rows:
        raise InvalidArgumentError('The table has no rows')

    parsed = []
    for i, row in enumerate(rows):
        if len(row) < len(columns):
            raise InvalidArgumentError(f'Row {i + 1} has {len(row)} columns: {row}')
        try:
            n, m = int(row[0]), int(row[1])
            values = [float(v) for v in row[2 : len(columns)]]
        except ValueError:
            raise InvalidArgumentError(f'Row {i + 1} is not numeric: {row}')
        if n < 0 or m < 0:
            raise InvalidArgumentError(f'Row {i + 1} has a negative index: {row}')
        parsed.append((n, m, values))

    shape = (max(p[0] for p in parsed) + 1, max(p[1] for p in parsed) + 1)
    out = {c: numpy.full(shape, numpy.nan) for c in columns[2:]}
    for n, m, values in parsed:
        for c, v in zip(columns[2:], values):
            out[c][n, m] = v
    return shape, out


def grid_rows(g: Grid) -> t.Iterator[t.Tuple[int, int, float, float]]:
    for n, m in g.sites():
        yield n, m, float(g.x[n, m]), float(g.y[n, m])


def field_rows(f: Field) -> t.Iterator[t.Tuple[int, int, float]]:
    N, M = f.shape
    for n in range(N):
        for m in range(M):
            yield n, m, float(f.u[n, m])


def write_grid(target: Target, g: Grid) -> None:
    write_table(target, ('n', 'm', 'x', 'y'), grid_rows(g))


def write_field(target: Target, f: Field) -> None:
    write_table(target, ('n', 'm', 'u'), field_rows(f))


def read_grid(source: Target) -> Grid:
    _, columns = _indexed(source, ('n', 'm', 'x', 'y'))
    if numpy.isnan(columns['x']).any() or numpy.isnan(columns['y']).any():
        raise InvalidArgumentError('A lattice table must list every site')
    return Grid(x=columns['x'], y=columns['y'])


def read_field(source: Target, shape: t.Optional[t.Tuple[int, int]] = None) -> Field:
    """
    Read an ``n m u`` table; sites not listed are absent.

    :param source: Path or stream
    :param shape: Shape of the lattice, when the table does not reach its corner
    """
    found, columns = _indexed(source, ('n', 'm', 'u'))
    u = columns['u']
    if shape is not None:
        if found[0] > shape[0] or found[1] > shape[1]:
            raise InvalidArgumentError(
                f'Field table of shape {found} does not fit lattice {shape}'
            )
        padded = numpy.full(shape, numpy.nan)
        padded[: found[0], : found[1]] = u
        u = padded
    return Field(u)
