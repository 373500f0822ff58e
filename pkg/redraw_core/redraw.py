"""
Module analysing concrete normal assignments: the space of parallel redrawings of a geometry, the
classification of realizations, and the rank and maximal minor census of overconstrained geometries
"""
from enum import Enum
from enum import unique
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional
from typing import Sequence
from typing import Tuple

import progressbar

from redraw_core.bracket import Bracket
from redraw_core.bracket import block_reduce
from redraw_core.bracket import evaluate_bracket
from redraw_core.exact_matrix import RingMatrix
from redraw_core.exact_matrix import det_rational
from redraw_core.exact_matrix import kernel_basis
from redraw_core.exact_matrix import rank
from redraw_core.exact_random import make_rng
from redraw_core.exact_random import seeds
from redraw_core.exceptions import MatrixError
from redraw_core.exceptions import NotOverconstrainedError
from redraw_core.exceptions import RealizationError
from redraw_core.geometry import IncidenceGeometry
from redraw_core.geometry import NormalAssignment
from redraw_core.geometry import PointConfiguration
from redraw_core.geometry import Realization
from redraw_core.geometry import check_realization
from redraw_core.geometry import random_normal_assignment
from redraw_core.logger import logger_get
from redraw_core.matroid import basis_size
from redraw_core.matroid import generic_rank
from redraw_core.pydantic_utils import CustomFrozen
from redraw_core.pydantic_utils import Frozen
from redraw_core.redraw_matrix import pinned_matrix
from redraw_core.settings import SETTINGS

log = logger_get(__name__)


@unique
class RealizationKind(str, Enum):
    """
    Trivial: all points coincide. Proper: points pairwise distinct and no two hyperplanes coincide.
    """
    TRIVIAL = 'trivial'
    IMPROPER = 'improper'
    PROPER = 'proper'


class RedrawingReport(CustomFrozen):
    """
    Kernel of the pinned numeric matrix, one realization per basis vector
    """
    pinned_point: str
    kernel_dimension: int
    redrawings: Tuple[Realization, ...]
    classifications: Tuple[RealizationKind, ...]


class MinorCensus(Frozen):
    """
    Number of nonzero maximal minors of a pinned overconstrained matrix, at the given normals and at
    each seeded random normal assignment
    """
    total: int
    nonzero_at_normals: int
    nonzero_at_random: Tuple[int, ...]
    trials: int
    seed: int


class OverconstrainedReport(Frozen):
    """
    Rank analysis of an overconstrained geometry at given normals.

    Attributes are:
        - pinned_point: the pinned point
        - pinned_rank: exact rank of the pinned numeric matrix
        - full_column_rank: |H| + d|P|
        - feasible: pinned_rank < full_column_rank, i.e. a nontrivial redrawing exists
        - generic_rank: measured rank of the unpinned matrix at random normals
        - expected_generic_rank: |H| + d|P| - d
        - minors: the maximal minor census, when requested
    """
    pinned_point: str
    pinned_rank: int
    full_column_rank: int
    feasible: bool
    generic_rank: int
    expected_generic_rank: int
    minors: Optional[MinorCensus] = None


class DegenerateFactor(Frozen):
    """
    Diagonal bracket vanishing at the normals: its two hyperplanes are parallel and, sharing the
    peeled point, coincide in any redrawing where that point is defined
    """
    bracket: Bracket
    hyperplanes: Tuple[str, str]
    shared_point: str


def realization_from_vector(g: IncidenceGeometry, vector: Sequence[Fraction]) -> Realization:
    """
    Realization read from a kernel vector of M_S: offsets from the hyperplane block, coordinates
    from the point block
    """
    size = len(g.hyperplanes)
    offsets = {h: vector[i] for i, h in enumerate(g.hyperplanes)}
    coords = {p: tuple(vector[size + g.d * i: size + g.d * (i + 1)]) for i, p in enumerate(g.points)}
    return Realization(coords=PointConfiguration(coords=coords), offsets=offsets)


def _proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return all(u[a] * v[b] == u[b] * v[a] for a in range(len(u)) for b in range(a + 1, len(u)))


def classify_realization(g: IncidenceGeometry, normals: NormalAssignment, r: Realization) -> RealizationKind:
    """
    Trivial, improper or proper. Two hyperplanes coincide when their (normal, offset) pairs are
    proportional; parallel hyperplanes with distinct offsets do not.
    """
    check_realization(g, normals, r)
    positions = [r.coords.coords[p] for p in g.points]
    if len(set(positions)) <= 1:
        return RealizationKind.TRIVIAL
    if len(set(positions)) < len(positions):
        return RealizationKind.IMPROPER
    pairs = [tuple(normals.vector(h)) + (r.offsets[h],) for h in g.hyperplanes]
    if any(_proportional(u, v) for u, v in combinations(pairs, 2)):
        return RealizationKind.IMPROPER
    return RealizationKind.PROPER


def redrawing_space(g: IncidenceGeometry, normals: NormalAssignment, p: Optional[str] = None) -> RedrawingReport:
    """
    Parallel redrawings with the pinned point (first point by default) at the origin
    """
    point = p if p is not None else g.points[0]
    basis = kernel_basis(pinned_matrix(g, point, normals).matrix)
    redrawings = tuple(realization_from_vector(g, vector) for vector in basis)
    classifications = tuple(classify_realization(g, normals, r) for r in redrawings)
    log.debug(f'pinned kernel of dimension {len(basis)}: {[kind.value for kind in classifications]}')
    return RedrawingReport(pinned_point=point, kernel_dimension=len(basis), redrawings=redrawings,
                           classifications=classifications)


def repin_realization(g: IncidenceGeometry, normals: NormalAssignment, r: Realization, q: str) -> Realization:
    """
    The same redrawing translated so that q sits at the origin: x(w) - x(q), ι(h) + n(h)·x(q)
    """
    check_realization(g, normals, r)
    if q not in r.coords.coords:
        raise RealizationError(f'unknown point {q}')
    origin = r.coords.coords[q]
    coords = {w: tuple(a - b for a, b in zip(x, origin)) for w, x in r.coords.coords.items()}
    offsets = {h: r.offsets[h] + sum((Fraction(n) * x for n, x in zip(normals.vector(h), origin)), Fraction(0))
               for h in g.hyperplanes}
    return Realization(coords=PointConfiguration(coords=coords), offsets=offsets)


def count_nonzero_minors(matrix: RingMatrix, max_minors: int = SETTINGS.census.max_minors) -> Tuple[int, int]:
    """
    (nonzero, total) maximal minors of a numeric matrix with at least as many rows as columns
    """
    surplus = matrix.nrows - matrix.ncols
    if surplus < 0:
        raise MatrixError(f'{matrix.nrows}x{matrix.ncols} matrix has no maximal row minors')
    if (total := comb(matrix.nrows, matrix.ncols)) > max_minors:
        raise MatrixError(f'{total} maximal minors exceed the census limit of {max_minors}')
    nonzero = 0
    for omitted in progressbar.progressbar(combinations(range(matrix.nrows), surplus), max_value=total,
                                           redirect_stdout=False):
        if det_rational(matrix.select_rows([i for i in range(matrix.nrows) if i not in omitted])):
            nonzero += 1
    return nonzero, total


def overconstrained_report(g: IncidenceGeometry, normals: NormalAssignment, p: Optional[str] = None,
                           with_minors: bool = False, seed: int = SETTINGS.cli.seed,
                           trials: int = SETTINGS.census.trials,
                           bound: int = SETTINGS.checks.random_bound) -> OverconstrainedReport:
    """
    Pinned rank and feasibility of an overconstrained geometry at the given normals, optionally with
    the census of nonzero maximal minors at those normals and at seeded random normals
    """
    if len(g.incidences) <= basis_size(g):
        raise NotOverconstrainedError(f'|I| = {len(g.incidences)} does not exceed |H| + d|P| - d = {basis_size(g)}')
    point = p if p is not None else g.points[0]
    matrix = pinned_matrix(g, point, normals).matrix
    pinned_rank = rank(matrix)
    minors = None
    if with_minors:
        at_normals, total = count_nonzero_minors(matrix)
        at_random = tuple(count_nonzero_minors(pinned_matrix(g, point, random_normal_assignment(
            g, make_rng(trial_seed), bound)).matrix)[0] for trial_seed in seeds(seed, trials))
        log.info(f'nonzero maximal minors: {at_normals}/{total} at the normals, {list(at_random)} at random')
        minors = MinorCensus(total=total, nonzero_at_normals=at_normals, nonzero_at_random=at_random,
                             trials=trials, seed=seed)
    return OverconstrainedReport(pinned_point=point, pinned_rank=pinned_rank, full_column_rank=matrix.ncols,
                                 feasible=pinned_rank < matrix.ncols, generic_rank=generic_rank(g, seed),
                                 expected_generic_rank=basis_size(g), minors=minors)


def degenerate_factors(g: IncidenceGeometry, normals: NormalAssignment, p: Optional[str] = None
                       ) -> Tuple[DegenerateFactor, ...]:
    """
    Diagonal brackets of the planar block reduction that vanish at the given normals
    """
    reduction = block_reduce(g, p)
    factors = []
    for bracket, point in zip(reduction.diagonal_brackets, reduction.peeled_points):
        if not evaluate_bracket(bracket, normals):
            factors.append(DegenerateFactor(bracket=bracket, hyperplanes=bracket.labels, shared_point=point))
    return tuple(factors)
