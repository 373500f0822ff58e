"""
Module building the parallel redrawing matrix M_S of a geometry: one row per incidence (p, h),
columns y_h for every hyperplane then x_{p,1..d} for every point. The row of (p, h) holds 1 in
column y_h and n(h) in the columns of p; pinning p appends the d unit rows of its columns.
"""
from fractions import Fraction
from typing import List
from typing import Optional

from redraw_core.exact_matrix import RingMatrix
from redraw_core.exact_polynomial import normal_ring
from redraw_core.exceptions import MatrixError
from redraw_core.geometry import IncidenceGeometry
from redraw_core.geometry import NormalAssignment
from redraw_core.geometry import check_normals
from redraw_core.pydantic_utils import CustomFrozen


class RedrawMatrix(CustomFrozen):
    """
    M_S of a geometry, symbolic when built without normals, possibly pinned at one point
    """
    matrix: RingMatrix
    geometry: IncidenceGeometry
    pinned_point: Optional[str] = None

    @property
    def is_square(self) -> bool:
        return self.matrix.nrows == self.matrix.ncols


def column_labels(g: IncidenceGeometry) -> List[str]:
    """
    y_{h} for every hyperplane, then x_{p,k} for every point and k in 1..d
    """
    return [f'y_{{{h}}}' for h in g.hyperplanes] + [f'x_{{{p},{k}}}' for p in g.points
                                                      for k in range(1, g.d + 1)]


def point_columns(g: IncidenceGeometry, p: str) -> List[int]:
    """
    Column positions of x_{p,1..d}
    """
    if p not in (positions := g.point_positions()):
        raise MatrixError(f'unknown point {p}')
    start = len(g.hyperplanes) + g.d * positions[p]
    return list(range(start, start + g.d))


def build_matrix(g: IncidenceGeometry, normals: Optional[NormalAssignment] = None) -> RedrawMatrix:
    """
    Unpinned M_S, with variables n_{h,k} in place of the normal entries when normals is None
    """
    ring = normal_ring(g.hyperplanes, g.d) if normals is None else None
    if normals is not None:
        check_normals(g, normals)
    hyperplanes = g.hyperplane_positions()
    width = len(g.hyperplanes) + g.d * len(g.points)
    zero, one = (ring.zero, ring.one) if ring else (Fraction(0), Fraction(1))
    rows = []
    for p, h in g.incidences:
        row = [zero] * width
        row[hyperplanes[h]] = one
        for k, column in enumerate(point_columns(g, p), start=1):
            row[column] = ring.variable(hyperplanes[h], k) if ring else Fraction(normals.vector(h)[k - 1])
        rows.append(tuple(row))
    matrix = RingMatrix(rows=tuple(rows), row_labels=tuple(f'({p},{h})' for p, h in g.incidences),
                        column_labels=tuple(column_labels(g)), ring=ring)
    return RedrawMatrix(matrix=matrix, geometry=g)


def pin(m: RedrawMatrix, p: str) -> RedrawMatrix:
    """
    Append the d rows fixing the coordinates of p
    """
    if m.pinned_point is not None:
        raise MatrixError(f'matrix already pinned at {m.pinned_point}')
    columns = point_columns(m.geometry, p)
    zero, one = (m.matrix.ring.zero, m.matrix.ring.one) if m.matrix.ring else (Fraction(0), Fraction(1))
    rows = [[one if j == column else zero for j in range(m.matrix.ncols)] for column in columns]
    labels = [f'pin({p},{k})' for k in range(1, m.geometry.d + 1)]
    return m.model_copy(update={'matrix': m.matrix.append_rows(rows, labels), 'pinned_point': p})


def pinned_matrix(g: IncidenceGeometry, p: Optional[str] = None,
                  normals: Optional[NormalAssignment] = None) -> RedrawMatrix:
    """
    M_S pinned at p (the first point by default)
    """
    if not g.points:
        raise MatrixError('a geometry without points cannot be pinned')
    return pin(build_matrix(g, normals), p if p is not None else g.points[0])
