import typing as t

import numpy

from latticeburgers.lattice.grid import Grid

Box = t.Tuple[float, float, float, float]


def bounding_box(g: Grid) -> Box:
    """
    ``(xmin, xmax, ymin, ymax)`` over all sites.
    """
    return (
        float(g.x.min()),
        float(g.x.max()),
        float(g.y.min()),
        float(g.y.max()),
    )


def inside(g: Grid, box: Box, tol: float = 1e-12) -> bool:
    """
    Whether every site of ``g`` lies in ``box``, up to ``tol``.
    """
    xmin, xmax, ymin, ymax = box
    return bool(
        numpy.all(g.x >= xmin - tol)
        and numpy.all(g.x <= xmax + tol)
        and numpy.all(g.y >= ymin - tol)
        and numpy.all(g.y <= ymax + tol)
    )


def outline(g: Grid) -> numpy.ndarray:
    """
    Boundary sites in counter-clockwise index order, as a ``(K, 2)`` array.
    """
    N, M = g.shape
    ns = (
        [(n, 0) for n in range(N)]
        + [(N - 1, m) for m in range(1, M)]
        + [(n, M - 1) for n in range(N - 2, -1, -1)]
        + [(0, m) for m in range(M - 2, 0, -1)]
    )
    return numpy.array([(g.x[n, m], g.y[n, m]) for n, m in ns])


def polygon_area(points: numpy.ndarray) -> float:
    if len(points) < 3:
        return 0.0
    x, y = points[:, 0], points[:, 1]
    twice = numpy.dot(x, numpy.roll(y, -1)) - numpy.dot(y, numpy.roll(x, -1))
    return 0.5 * abs(float(twice))


def _clip(points: t.List[numpy.ndarray], inside_fn, intersect) -> t.List[numpy.ndarray]:
    out: t.List[numpy.ndarray] = []
    for i, current in enumerate(points):
        previous = points[i - 1]
        if inside_fn(current):
            if not inside_fn(previous):
                out.append(intersect(previous, current))
            out.append(current)
        elif inside_fn(previous):
            out.append(intersect(previous, current))
    return out


def _edge(axis: int, bound: float, keep_below: bool):
    def inside_fn(p):
        return p[axis] <= bound if keep_below else p[axis] >= bound

    def intersect(p, q):
        w = (bound - p[axis]) / (q[axis] - p[axis])
        return p + w * (q - p)

    return inside_fn, intersect


def coverage(g: Grid, box: Box) -> float:
    """
    Fraction of ``box`` covered by the region the lattice outline encloses,
    by Sutherland-Hodgman clipping of the outline against the box.

    :param g: The lattice
    :param box: ``(xmin, xmax, ymin, ymax)``
    """
    xmin, xmax, ymin, ymax = box
    area = (xmax - xmin) * (ymax - ymin)
    if area <= 0:
        return 0.0
    points = list(outline(g))
    for axis, bound, keep_below in (
        (0, xmin, False),
        (0, xmax, True),
        (1, ymin, False),
        (1, ymax, True),
    ):
        if not points:
            break
        points = _clip(points, *_edge(axis, bound, keep_below))
    return min(1.0, polygon_area(numpy.array(points)) / area) if points else 0.0
