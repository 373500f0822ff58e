"""
Module implementing incidence geometries (points, hyperplanes, incidences in dimension d), normal
assignments, point configurations and realizations, together with their json documents
"""
import hashlib
import math
from fractions import Fraction
from pathlib import Path
from typing import Dict
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
from pydantic import StrictInt
from pydantic import ValidationError
from pydantic import model_validator

from redraw_core.exact_random import apply_matrix
from redraw_core.exact_random import random_field_vector
from redraw_core.exact_random import random_rational_vector
from redraw_core.exceptions import GeometryError
from redraw_core.exceptions import NormalError
from redraw_core.exceptions import RealizationError
from redraw_core.list_utils import duplicates
from redraw_core.list_utils import group_by_value
from redraw_core.list_utils import index_map
from redraw_core.pydantic_utils import CustomFrozen
from redraw_core.pydantic_utils import Frozen
from redraw_core.pydantic_utils import Rational
from redraw_core.pydantic_utils import format_rational
from redraw_core.read_write import dumps_json
from redraw_core.read_write import load_text_file
from redraw_core.read_write import loads_json

Incidence = Tuple[str, str]
Vector = Tuple[Fraction, ...]


class IncidenceGeometry(Frozen):
    """
    Incidence geometry (P, H, I) in dimension d. The order of points, hyperplanes and incidences is
    the input order and drives every downstream matrix layout.

    Attributes are:
        - d: ambient dimension, at least 1
        - points: distinct point labels
        - hyperplanes: distinct hyperplane labels
        - incidences: distinct (point, hyperplane) pairs referencing existing labels
    """
    d: int
    points: Tuple[str, ...]
    hyperplanes: Tuple[str, ...]
    incidences: Tuple[Incidence, ...]

    @model_validator(mode='after')
    def check_consistency(self) -> 'IncidenceGeometry':
        """
        Distinct labels, known references and no repeated incidence
        """
        if self.d < 1:
            raise ValueError(f'dimension must be at least 1, got d={self.d}')
        if repeated := duplicates(self.points):
            raise ValueError(f'duplicate point labels {repeated}')
        if repeated := duplicates(self.hyperplanes):
            raise ValueError(f'duplicate hyperplane labels {repeated}')
        if repeated := duplicates(self.incidences):
            raise ValueError(f'duplicate incidences {repeated}')
        points, hyperplanes = set(self.points), set(self.hyperplanes)
        for p, h in self.incidences:
            if p not in points:
                raise ValueError(f'incidence ({p}, {h}) references unknown point {p}')
            if h not in hyperplanes:
                raise ValueError(f'incidence ({p}, {h}) references unknown hyperplane {h}')
        return self

    def point_positions(self) -> Dict[str, int]:
        return index_map(self.points)

    def hyperplane_positions(self) -> Dict[str, int]:
        return index_map(self.hyperplanes)

    def points_on(self) -> Dict[str, List[str]]:
        """
        Incident points of each hyperplane, in incidence order (empty list for isolated hyperplanes)
        """
        grouped = group_by_value([h for _, h in self.incidences])
        return {h: [self.incidences[i][0] for i in grouped.get(h, [])] for h in self.hyperplanes}

    def fingerprint(self) -> str:
        """
        Hash of the serialized combinatorial data
        """
        return hashlib.sha256(serialize_geometry(self).encode('utf-8')).hexdigest()[:16]


class NormalAssignment(CustomFrozen):
    """
    Normal vector n(h) of each hyperplane, exact rationals
    """
    entries: Dict[str, Tuple[Rational, ...]]

    def vector(self, h: str) -> Vector:
        if h not in self.entries:
            raise NormalError(f'no normal given for hyperplane {h}')
        return self.entries[h]


class PointConfiguration(CustomFrozen):
    """
    Coordinates x(p) of each point, exact rationals
    """
    coords: Dict[str, Tuple[Rational, ...]]


class Realization(CustomFrozen):
    """
    Point coordinates and hyperplane offsets; together with normals n(h)·x(p) + ι(h) = 0 holds on
    every incidence
    """
    coords: PointConfiguration
    offsets: Dict[str, Rational]


class GeometryDocument(CustomFrozen):
    """
    Json document layout of a geometry, with optional normals and coordinates
    """
    d: StrictInt
    points: List[str]
    hyperplanes: List[str]
    incidences: List[Tuple[str, str]]
    normals: Optional[Dict[str, List[Rational]]] = None
    coordinates: Optional[Dict[str, List[Rational]]] = None


class NormalsDocument(CustomFrozen):
    """
    Json document layout of a standalone normal assignment
    """
    normals: Dict[str, List[Rational]]


class GeometryBundle(CustomFrozen):
    """
    A parsed geometry document: the geometry and, when present, its normals and coordinates
    """
    geometry: IncidenceGeometry
    normals: Optional[NormalAssignment] = None
    coordinates: Optional[PointConfiguration] = None


def _as_geometry_error(error: ValidationError) -> GeometryError:
    """
    First pydantic validation problem as a one line GeometryError
    """
    first = error.errors()[0]
    location = '.'.join(str(part) for part in first.get('loc', ())) or 'document'
    return GeometryError(f'{location}: {first.get("msg", "invalid value")}')


def make_geometry(d: int, points: Sequence[str], hyperplanes: Sequence[str],
                  incidences: Iterable[Sequence[str]]) -> IncidenceGeometry:
    """
    Validated IncidenceGeometry, GeometryError on any inconsistency
    """
    try:
        return IncidenceGeometry(d=d, points=tuple(points), hyperplanes=tuple(hyperplanes),
                                 incidences=tuple(tuple(incidence) for incidence in incidences))
    except ValidationError as error:
        raise _as_geometry_error(error) from error


def parse_document(text: str) -> GeometryBundle:
    """
    Parse a geometry json document, keeping the input order of every list
    """
    try:
        data = loads_json(text)
    except ValueError as error:
        raise GeometryError(f'syntax error in geometry document: {error}') from error
    if not isinstance(data, dict):
        raise GeometryError('a geometry document must be a json object')
    try:
        document = GeometryDocument.model_validate(data)
    except ValidationError as error:
        raise _as_geometry_error(error) from error
    geometry = make_geometry(document.d, document.points, document.hyperplanes, document.incidences)
    normals = coordinates = None
    if document.normals is not None:
        normals = NormalAssignment(entries={h: tuple(v) for h, v in document.normals.items()})
        check_normals(geometry, normals)
    if document.coordinates is not None:
        coordinates = PointConfiguration(coords={p: tuple(v) for p, v in document.coordinates.items()})
        check_coordinates(geometry, coordinates)
    return GeometryBundle(geometry=geometry, normals=normals, coordinates=coordinates)


def parse_geometry(text: str) -> IncidenceGeometry:
    """
    Parse the combinatorial part of a geometry json document
    """
    return parse_document(text).geometry


def parse_normals(text: str, g: IncidenceGeometry) -> NormalAssignment:
    """
    Parse a normal assignment for g, either a {"normals": ...} document or a full geometry
    document carrying normals
    """
    try:
        data = loads_json(text)
    except ValueError as error:
        raise NormalError(f'syntax error in normals document: {error}') from error
    if isinstance(data, dict) and 'points' in data:
        if (normals := parse_document(text).normals) is None:
            raise NormalError('the document carries no normals')
    else:
        try:
            document = NormalsDocument.model_validate(data)
        except ValidationError as error:
            raise NormalError(str(_as_geometry_error(error))) from error
        normals = NormalAssignment(entries={h: tuple(v) for h, v in document.normals.items()})
    check_normals(g, normals)
    return normals


def load_document(path: Path) -> GeometryBundle:
    """
    Parse the geometry document stored at path
    """
    return parse_document(load_text_file(path))


def serialize_geometry(g: IncidenceGeometry, normals: Optional[NormalAssignment] = None,
                       coordinates: Optional[PointConfiguration] = None) -> str:
    """
    Json document of g, with normals and coordinates written back when given
    """
    data: dict = {'d': g.d, 'points': list(g.points), 'hyperplanes': list(g.hyperplanes),
                  'incidences': [list(incidence) for incidence in g.incidences]}
    if normals is not None:
        data['normals'] = {h: [format_rational(v) for v in normals.vector(h)] for h in g.hyperplanes}
    if coordinates is not None:
        data['coordinates'] = {p: [format_rational(v) for v in coordinates.coords[p]] for p in g.points}
    return dumps_json(data)


def check_normals(g: IncidenceGeometry, normals: NormalAssignment) -> None:
    """
    Raise a NormalError unless normals has exactly one nonzero d-vector per hyperplane of g
    """
    if unknown := [h for h in normals.entries if h not in g.hyperplane_positions()]:
        raise NormalError(f'normals given for unknown hyperplanes {unknown}')
    for h in g.hyperplanes:
        vector = normals.vector(h)
        if len(vector) != g.d:
            raise NormalError(f'normal of {h} has {len(vector)} entries, expected {g.d}')
        if not any(vector):
            raise NormalError(f'normal of {h} is zero')


def check_coordinates(g: IncidenceGeometry, coordinates: PointConfiguration) -> None:
    """
    Raise a GeometryError unless coordinates has exactly one d-vector per point of g
    """
    if unknown := [p for p in coordinates.coords if p not in g.point_positions()]:
        raise GeometryError(f'coordinates given for unknown points {unknown}')
    for p in g.points:
        if p not in coordinates.coords:
            raise GeometryError(f'no coordinates given for point {p}')
        if len(coordinates.coords[p]) != g.d:
            raise GeometryError(f'coordinates of {p} have {len(coordinates.coords[p])} entries, '
                                f'expected {g.d}')


def _check_subset(g: IncidenceGeometry, subset: Iterable[Incidence]) -> List[Incidence]:
    known = set(g.incidences)
    subset = [tuple(incidence) for incidence in subset]
    if missing := [incidence for incidence in subset if incidence not in known]:
        raise GeometryError(f'incidences {missing} do not belong to the geometry')
    return subset


def induced_counts(g: IncidenceGeometry, subset: Iterable[Incidence]) -> Tuple[int, int, int]:
    """
    (|I''|, |P(I'')|, |H(I'')|) for a subset I'' of the incidences of g
    """
    subset = set(_check_subset(g, subset))
    return len(subset), len({p for p, _ in subset}), len({h for _, h in subset})


def sub_geometry(g: IncidenceGeometry, subset: Iterable[Incidence]) -> IncidenceGeometry:
    """
    Geometry (P(I''), H(I''), I'') induced by an incidence subset, orders inherited from g
    """
    kept = set(_check_subset(g, subset))
    incidences = [incidence for incidence in g.incidences if incidence in kept]
    return make_geometry(g.d, [p for p in g.points if any(p == q for q, _ in incidences)],
                         [h for h in g.hyperplanes if any(h == k for _, k in incidences)], incidences)


def primitive_integer_vector(vector: Sequence[Fraction]) -> Tuple[int, ...]:
    """
    Positive multiple of vector with coprime integer entries, first nonzero entry made positive
    """
    scale = math.lcm(*(Fraction(v).denominator for v in vector))
    integers = [int(Fraction(v) * scale) for v in vector]
    content = math.gcd(*integers)
    if not content:
        raise RealizationError('cannot normalize the zero vector')
    sign = -1 if next(i for i in integers if i) < 0 else 1
    return tuple(sign * i // content for i in integers)


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def _line_through(h: str, points: Sequence[str], coordinates: PointConfiguration
                  ) -> Tuple[Tuple[Fraction, ...], Fraction]:
    """
    Primitive integer normal and offset of the line through the first two distinct positions of
    points, every other position checked against it
    """
    positions = list(dict.fromkeys(coordinates.coords[p] for p in points))
    if len(positions) < 2:
        raise RealizationError(f'hyperplane {h} has fewer than 2 distinct incident points')
    (ax, ay), (bx, by) = positions[0], positions[1]
    normal = tuple(Fraction(i) for i in primitive_integer_vector((ay - by, bx - ax)))
    offset = -_dot(normal, positions[0])
    if off_line := [p for p in points if _dot(normal, coordinates.coords[p]) + offset != 0]:
        raise RealizationError(f'points {off_line} of hyperplane {h} are not collinear with the others')
    return normal, offset


def normals_from_points(g: IncidenceGeometry, coordinates: PointConfiguration
                        ) -> Tuple[NormalAssignment, Realization]:
    """
    Planar normals and offsets through given point coordinates. Each hyperplane gets the primitive
    integer normal of the line through its first two distinct incident points, and every other
    incident point must lie on that line.
    """
    if g.d != 2:
        raise RealizationError(f'normals from points are only defined in the plane, got d={g.d}')
    check_coordinates(g, coordinates)
    normals, offsets = {}, {}
    for h, points in g.points_on().items():
        normals[h], offsets[h] = _line_through(h, points, coordinates)
    return NormalAssignment(entries=normals), Realization(coords=coordinates, offsets=offsets)


def check_incident_points(g: IncidenceGeometry, coordinates: PointConfiguration,
                          normals: Optional[NormalAssignment] = None) -> None:
    """
    Raise a RealizationError unless the incident points of every hyperplane can lie on it. With
    normals, they must share the value n(h)·x(p); without, planar incident points must be collinear.
    Hyperplanes with fewer than two distinct incident points are unconstrained.
    """
    check_coordinates(g, coordinates)
    if normals is not None:
        check_normals(g, normals)
    for h, points in g.points_on().items():
        if normals is not None:
            if len({_dot(normals.vector(h), coordinates.coords[p]) for p in points}) > 1:
                raise RealizationError(f'points {list(points)} of hyperplane {h} are not on a common '
                                       'hyperplane with its normal')
        elif g.d == 2 and len({coordinates.coords[p] for p in points}) >= 2:
            _line_through(h, points, coordinates)


def incidence_residual(g: IncidenceGeometry, normals: NormalAssignment, realization: Realization,
                       incidence: Incidence) -> Fraction:
    """
    n(h)·x(p) + ι(h) for one incidence (p, h)
    """
    p, h = incidence
    return _dot(normals.vector(h), realization.coords.coords[p]) + realization.offsets[h]


def check_realization(g: IncidenceGeometry, normals: NormalAssignment, realization: Realization) -> None:
    """
    Raise a RealizationError on the first incidence violating n(h)·x(p) + ι(h) = 0
    """
    check_coordinates(g, realization.coords)
    for incidence in g.incidences:
        if residual := incidence_residual(g, normals, realization, incidence):
            raise RealizationError(f'incidence {incidence} is violated by {format_rational(residual)}')


def random_normal_assignment(g: IncidenceGeometry, rng: np.random.Generator, bound: int) -> NormalAssignment:
    """
    Independent nonzero rational normals with numerators and denominators bounded by bound
    """
    return NormalAssignment(entries={h: random_rational_vector(rng, g.d, bound) for h in g.hyperplanes})


def field_normal_assignment(g: IncidenceGeometry, rng: np.random.Generator, prime: int) -> NormalAssignment:
    """
    Independent nonzero normals with entries drawn uniformly in [0, prime)
    """
    return NormalAssignment(entries={h: random_field_vector(rng, g.d, prime) for h in g.hyperplanes})


def transform_normals(normals: NormalAssignment, matrix: Tuple[Tuple[int, ...], ...]) -> NormalAssignment:
    """
    Normals n(h) replaced by matrix · n(h)
    """
    return NormalAssignment(entries={h: apply_matrix(matrix, v) for h, v in normals.entries.items()})
