"""
Module computing the pure condition of a basis geometry: the canonical form of the determinant of
its pinned symbolic redrawing matrix, together with the executable checks of its invariances
(choice of the pinned point, unimodular change of coordinates).
"""
from collections import Counter
from fractions import Fraction
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from sympy.polys.rings import PolyElement

from redraw_core.exact_matrix import det_polynomial
from redraw_core.exact_matrix import det_rational
from redraw_core.exact_matrix import rank
from redraw_core.exact_polynomial import NormalRing
from redraw_core.exact_polynomial import coordinate_degrees
from redraw_core.exact_polynomial import evaluate_polynomial
from redraw_core.exact_polynomial import format_polynomial
from redraw_core.exact_polynomial import hyperplane_degrees
from redraw_core.exact_polynomial import normal_ring
from redraw_core.exact_polynomial import poly_canonicalize
from redraw_core.exact_polynomial import polynomial_ratio
from redraw_core.exact_polynomial import total_degree
from redraw_core.exact_random import make_rng
from redraw_core.exact_random import random_unimodular
from redraw_core.exact_random import seeds
from redraw_core.exceptions import MatrixError
from redraw_core.exceptions import NotABasisError
from redraw_core.geometry import IncidenceGeometry
from redraw_core.geometry import NormalAssignment
from redraw_core.geometry import check_normals
from redraw_core.geometry import random_normal_assignment
from redraw_core.geometry import transform_normals
from redraw_core.logger import logger_get
from redraw_core.matroid import is_independent
from redraw_core.pydantic_utils import CustomFrozen
from redraw_core.pydantic_utils import Frozen
from redraw_core.pydantic_utils import Rational
from redraw_core.redraw_matrix import build_matrix
from redraw_core.redraw_matrix import pinned_matrix
from redraw_core.settings import SETTINGS

log = logger_get(__name__)


class PureCondition(CustomFrozen):
    """
    Canonical pure condition of a geometry.

    Attributes are:
        - polynomial: primitive integer polynomial in the n_{h,k}, positive leading coefficient
        - ring: the polynomial ring of the geometry
        - fingerprint: hash of the geometry it was computed from
        - d: ambient dimension
        - pinned_point: point pinned to compute it
        - scalar: the raw pinned determinant is scalar times polynomial
    """
    polynomial: Any
    ring: NormalRing
    fingerprint: str
    d: int
    pinned_point: str
    scalar: Rational

    def text(self) -> str:
        return format_polynomial(self.polynomial, self.ring)

    @property
    def degree(self) -> int:
        return total_degree(self.polynomial)


class PinInvarianceReport(CustomFrozen):
    """
    Outcome of pinning every point in turn: canonical forms per point and the ratios
    det(M^p) / det(M^first)
    """
    identical: bool
    canonical: str
    canonical_by_point: Dict[str, str]
    ratios: Dict[str, Rational]


class SlInvarianceReport(Frozen):
    """
    Outcome of the random unimodular trials: trials whose pinned determinants or kernel dimensions
    differ between S and AS
    """
    trials: int
    seed: int
    all_equal: bool
    determinant_mismatches: Tuple[int, ...]
    kernel_mismatches: Tuple[int, ...]


def require_basis(g: IncidenceGeometry) -> None:
    """
    Raise NotABasisError, with the matroid report attached, unless g is a basis
    """
    report = is_independent(g)
    if not report.basis:
        reason = 'dependent' if not report.independent else (
            f'independent but |I| = {len(g.incidences)} differs from |H| + d|P| - d')
        raise NotABasisError(f'the geometry is not a basis of the {g.d}-plane matroid ({reason}), '
                             'its pinned matrix is not square', report)


def pinned_determinant(g: IncidenceGeometry, p: Optional[str] = None) -> PolyElement:
    """
    Raw determinant of the symbolic matrix pinned at p (first point by default)
    """
    matrix = pinned_matrix(g, p).matrix
    log.debug(f'{matrix.nrows}x{matrix.ncols} symbolic determinant pinned at {p or g.points[0]}')
    return det_polynomial(matrix)


def pure_condition(g: IncidenceGeometry, pin: Optional[str] = None) -> PureCondition:
    """
    Canonical pure condition of a basis geometry, pinned at pin (first point by default)
    """
    require_basis(g)
    point = pin if pin is not None else g.points[0]
    raw = pinned_determinant(g, point)
    if not raw:
        raise MatrixError('the pinned determinant of a basis vanishes identically')
    polynomial, scalar = poly_canonicalize(raw)
    log.info(f'pure condition of degree {total_degree(polynomial)} with {len(polynomial)} terms')
    return PureCondition(polynomial=polynomial, ring=normal_ring(g.hyperplanes, g.d), fingerprint=g.fingerprint(),
                         d=g.d, pinned_point=point, scalar=scalar)


def normal_values(nring: NormalRing, normals: NormalAssignment) -> List[Fraction]:
    """
    Values of the generators n_{h,k} of nring, in generator order
    """
    return [Fraction(normals.vector(h)[k]) for h in nring.hyperplanes for k in range(nring.d)]


def evaluate(pc: PureCondition, normals: NormalAssignment) -> Fraction:
    """
    Exact value of the pure condition at the given normals
    """
    return evaluate_polynomial(pc.polynomial, normal_values(pc.ring, normals))


def degree_check(pc: PureCondition, g: IncidenceGeometry) -> bool:
    """
    Every monomial takes one entry from each unpinned point column: total degree d(|P| - 1), degree
    |P| - 1 in each coordinate, and degree at most |I(h)| - 1 in the normal of each hyperplane h
    (one incidence row of h covers the y_h column)
    """
    expected = g.d * (len(g.points) - 1)
    per_coordinate = coordinate_degrees(pc.polynomial, pc.ring)
    incidences = Counter(h for _, h in g.incidences)
    excess = {h: degree for h, degree in hyperplane_degrees(pc.polynomial, pc.ring).items()
              if degree > incidences[h] - 1}
    if pc.degree != expected or per_coordinate != {(len(g.points) - 1,) * g.d} or excess:
        log.warning(f'pure condition has degree {pc.degree} (expected {expected}), coordinate degrees '
                    f'{sorted(per_coordinate)}, hyperplanes above their incidence count {excess}')
        return False
    return True


def pinned_determinants(g: IncidenceGeometry) -> Dict[str, PolyElement]:
    """
    Raw pinned determinant for every point of a basis geometry
    """
    require_basis(g)
    return {p: pinned_determinant(g, p) for p in g.points}


def pin_invariance_check(g: IncidenceGeometry) -> PinInvarianceReport:
    """
    Pin every point in turn and compare canonical forms
    """
    determinants = pinned_determinants(g)
    nring = normal_ring(g.hyperplanes, g.d)
    canonical = {p: format_polynomial(poly_canonicalize(raw)[0], nring) for p, raw in determinants.items()}
    reference = determinants[g.points[0]]
    ratios = {p: polynomial_ratio(raw, reference) for p, raw in determinants.items()}
    identical = len(set(canonical.values())) == 1 and all(ratio is not None for ratio in ratios.values())
    return PinInvarianceReport(identical=identical, canonical=canonical[g.points[0]],
                               canonical_by_point=canonical,
                               ratios={p: ratio for p, ratio in ratios.items() if ratio is not None})


def pinned_value(g: IncidenceGeometry, normals: NormalAssignment, p: Optional[str] = None) -> Fraction:
    """
    Exact determinant of the numeric matrix pinned at p
    """
    return det_rational(pinned_matrix(g, p, normals).matrix)


def kernel_dimension(g: IncidenceGeometry, normals: NormalAssignment, p: Optional[str] = None) -> int:
    """
    Dimension of the kernel of M_S, pinned at p when given
    """
    matrix = (pinned_matrix(g, p, normals) if p is not None else build_matrix(g, normals)).matrix
    return matrix.ncols - rank(matrix)


def sl_invariance_check(g: IncidenceGeometry, trials: int = SETTINGS.checks.trials,
                        seed: int = SETTINGS.cli.seed,
                        bound: int = SETTINGS.checks.random_bound) -> SlInvarianceReport:
    """
    For random rational normals S and random unimodular A, compare det(M^p_S) with det(M^p_AS) and
    the kernel dimensions of the unpinned M_S and M_AS
    """
    require_basis(g)
    determinant_mismatches, kernel_mismatches = [], []
    for trial, trial_seed in enumerate(seeds(seed, trials)):
        normals = random_normal_assignment(g, make_rng(trial_seed), bound)
        moved = transform_normals(normals, random_unimodular(g.d, trial_seed))
        if pinned_value(g, normals) != pinned_value(g, moved):
            determinant_mismatches.append(trial)
        if kernel_dimension(g, normals) != kernel_dimension(g, moved):
            kernel_mismatches.append(trial)
    if determinant_mismatches or kernel_mismatches:
        log.warning(f'unimodular invariance broken on trials {determinant_mismatches + kernel_mismatches}')
    return SlInvarianceReport(trials=trials, seed=seed,
                              all_equal=not determinant_mismatches and not kernel_mismatches,
                              determinant_mismatches=tuple(determinant_mismatches),
                              kernel_mismatches=tuple(kernel_mismatches))


def translation_vectors(g: IncidenceGeometry, normals: NormalAssignment) -> List[Tuple[Fraction, ...]]:
    """
    The d translations of a realization as vectors of the kernel of the unpinned M_S: X_q = e_k for
    every point q and y_h = -n(h)_k
    """
    check_normals(g, normals)
    vectors = []
    for k in range(g.d):
        offsets = [-Fraction(normals.vector(h)[k]) for h in g.hyperplanes]
        coordinates = [Fraction(int(j == k)) for _ in g.points for j in range(g.d)]
        vectors.append(tuple(offsets + coordinates))
    return vectors
