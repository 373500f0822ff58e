"""
Module implementing the d-plane matroid on incidences: a subset I'' is independent when every
nonempty I''' ⊆ I'' satisfies |I'''| <= |H(I''')| + d|P(I''')| - d.

Two oracles are available. The deterministic one searches a violating subset combinatorially, the
randomized one computes the rank of M_S at uniformly random normals modulo a large prime.
"""
from collections import Counter
from enum import Enum
from enum import unique
from itertools import compress
from typing import Iterable
from typing import List
from typing import Optional
from typing import Tuple

from redraw_core.exact_matrix import rank
from redraw_core.exact_random import make_rng
from redraw_core.geometry import IncidenceGeometry
from redraw_core.geometry import Incidence
from redraw_core.geometry import field_normal_assignment
from redraw_core.geometry import induced_counts
from redraw_core.logger import logger_get
from redraw_core.pydantic_utils import Frozen
from redraw_core.redraw_matrix import build_matrix
from redraw_core.settings import SETTINGS

log = logger_get(__name__)


@unique
class MatroidMethod(str, Enum):
    """
    Oracle used to decide independence
    """
    DETERMINISTIC = 'deterministic'
    RANDOMIZED = 'randomized'


class MatroidReport(Frozen):
    """
    Independence report of the full incidence set of a geometry.

    Attributes are:
        - independent: whether I is independent in the d-plane matroid
        - basis: independent and |I| = |H| + d|P| - d
        - violating_subset: when dependent, a subset breaking the counting condition
        - generic_rank: rank of M_S at random normals (maximum over the repetitions)
        - method: the oracle that decided independence
    """
    independent: bool
    basis: bool
    violating_subset: Optional[Tuple[Incidence, ...]] = None
    generic_rank: int
    method: MatroidMethod


def count_excess(g: IncidenceGeometry, subset: Iterable[Incidence]) -> int:
    """
    |I''| - (|H(I'')| + d|P(I'')| - d): positive exactly on subsets violating the counting condition
    """
    size, points, hyperplanes = induced_counts(g, subset)
    return size - hyperplanes - g.d * points + g.d


def basis_size(g: IncidenceGeometry) -> int:
    """
    |H| + d|P| - d, the size of every basis
    """
    return len(g.hyperplanes) + g.d * len(g.points) - g.d


def proper_count_condition(g: IncidenceGeometry) -> bool:
    """
    Counting predicate of proper realizations at generic normals, on the full incidence set only:
    |I| <= |H(I)| + d|P(I)| - (d + 1) whenever |I| >= 2
    """
    size, points, hyperplanes = induced_counts(g, g.incidences)
    return size < 2 or size <= hyperplanes + g.d * points - (g.d + 1)


def _two_core(g: IncidenceGeometry) -> List[Incidence]:
    """
    Largest incidence subset where every point and hyperplane has at least two incidences. Every
    inclusion minimal violating subset lives there.
    """
    incidences = list(g.incidences)
    while True:
        point_degree = Counter(p for p, _ in incidences)
        hyperplane_degree = Counter(h for _, h in incidences)
        kept = [(p, h) for p, h in incidences if point_degree[p] >= 2 and hyperplane_degree[h] >= 2]
        if len(kept) == len(incidences):
            return kept
        incidences = kept


def _closed_candidates(g: IncidenceGeometry, core: List[Incidence]) -> Iterable[List[Incidence]]:
    """
    For every subset of the smaller side (points or hyperplanes) of the core, the incidence set
    maximizing the excess among those using exactly that side subset
    """
    points = list(dict.fromkeys(p for p, _ in core))
    hyperplanes = list(dict.fromkeys(h for _, h in core))
    by_points = len(points) <= len(hyperplanes)
    side = points if by_points else hyperplanes
    for mask in range(1, 2 ** len(side)):
        chosen = {label for bit, label in enumerate(side) if mask >> bit & 1}
        if by_points:
            inside = [(p, h) for p, h in core if p in chosen]
            counts = Counter(h for _, h in inside)
            yield [(p, h) for p, h in inside if counts[h] >= 2]
        else:
            inside = [(p, h) for p, h in core if h in chosen]
            counts = Counter(p for p, _ in inside)
            yield [(p, h) for p, h in inside if counts[p] > g.d]


def closed_set_violation(g: IncidenceGeometry) -> Tuple[int, Tuple[Incidence, ...]]:
    """
    Maximum excess over closed incidence sets and a subset reaching it (empty subset and excess 0
    when no candidate exists)
    """
    best: Tuple[int, Tuple[Incidence, ...]] = (0, ())
    for candidate in _closed_candidates(g, _two_core(g)):
        if candidate and (excess := count_excess(g, candidate)) > best[0]:
            best = (excess, tuple(candidate))
    return best


def brute_force_violation(g: IncidenceGeometry) -> Tuple[int, Tuple[Incidence, ...]]:
    """
    Maximum excess over all 2^|I| nonempty incidence subsets, exponential: small geometries only
    """
    best: Tuple[int, Tuple[Incidence, ...]] = (0, ())
    for mask in range(1, 2 ** len(g.incidences)):
        subset = tuple(compress(g.incidences, (mask >> bit & 1 for bit in range(len(g.incidences)))))
        if (excess := count_excess(g, subset)) > best[0]:
            best = (excess, subset)
    return best


def _field_rank(g: IncidenceGeometry, rows: Optional[List[int]], seed: int, prime: int) -> int:
    """
    Rank of the rows of M_S at normals drawn uniformly modulo prime
    """
    normals = field_normal_assignment(g, make_rng(seed), prime)
    matrix = build_matrix(g, normals).matrix
    return rank(matrix if rows is None else matrix.select_rows(rows), modulus=prime)


def generic_rank(g: IncidenceGeometry, seed: int = SETTINGS.cli.seed,
                 repetitions: int = SETTINGS.matroid.repetitions,
                 prime: int = SETTINGS.exact.prime) -> int:
    """
    Rank of M_S at random normals over GF(prime), maximum over the repetitions
    """
    if not g.incidences:
        return 0
    return max(_field_rank(g, None, seed + repetition, prime) for repetition in range(max(repetitions, 1)))


def generic_corank(g: IncidenceGeometry, seed: int = SETTINGS.cli.seed,
                   repetitions: int = SETTINGS.matroid.repetitions,
                   prime: int = SETTINGS.exact.prime) -> int:
    """
    Number of columns of M_S minus its generic rank
    """
    return len(g.hyperplanes) + g.d * len(g.points) - generic_rank(g, seed, repetitions, prime)


def find_circuit(g: IncidenceGeometry, seed: int = SETTINGS.cli.seed,
                 prime: int = SETTINGS.exact.prime) -> Optional[Tuple[Incidence, ...]]:
    """
    Inclusion minimal dependent incidence subset found by greedy deletion at fixed random normals,
    None when the rows of M_S are independent
    """
    kept = list(range(len(g.incidences)))
    if _field_rank(g, kept, seed, prime) == len(kept):
        return None
    for row in list(kept):
        trial = [other for other in kept if other != row]
        if _field_rank(g, trial, seed, prime) < len(trial):
            kept = trial
    return tuple(g.incidences[row] for row in kept)


def is_independent(g: IncidenceGeometry, seed: int = SETTINGS.cli.seed,
                   method: Optional[MatroidMethod] = None,
                   deterministic_threshold: int = SETTINGS.matroid.deterministic_threshold,
                   brute_force_threshold: int = SETTINGS.matroid.brute_force_threshold,
                   repetitions: int = SETTINGS.matroid.repetitions,
                   prime: int = SETTINGS.exact.prime) -> MatroidReport:
    """
    Independence of the full incidence set of g. Without an explicit method, the deterministic
    search runs up to deterministic_threshold incidences and the randomized rank beyond.
    """
    size = len(g.incidences)
    if method is None:
        method = MatroidMethod.DETERMINISTIC if size <= deterministic_threshold else MatroidMethod.RANDOMIZED
    rank_value = generic_rank(g, seed, repetitions, prime)
    if method == MatroidMethod.DETERMINISTIC:
        search = brute_force_violation if size <= brute_force_threshold else closed_set_violation
        excess, violating = search(g)
        independent = excess <= 0
    else:
        independent = rank_value == size
        violating = () if independent else find_circuit(g, seed, prime)
        if not independent and count_excess(g, violating) <= 0:
            log.warning(f'circuit {violating} does not break the counting condition, searching closed sets')
            violating = closed_set_violation(g)[1]
    log.debug(f'{method.value} oracle: |I|={size} independent={independent} generic rank={rank_value}')
    return MatroidReport(independent=independent, basis=independent and size == basis_size(g),
                         violating_subset=None if independent else violating,
                         generic_rank=rank_value, method=method)


def is_basis(g: IncidenceGeometry, **kwargs) -> bool:
    """
    Whether I is a basis of the d-plane matroid: independent and of size |H| + d|P| - d
    """
    return len(g.incidences) == basis_size(g) and is_independent(g, **kwargs).independent
