"""
Module implementing bracket polynomials over the normals of a geometry: a bracket [h_1 ... h_d] is
the determinant of the d×d matrix whose columns are n(h_1), ..., n(h_d).

Bracket monomials are stored as sorted tuples of strictly increasing hyperplane position tuples.
Conversions go both ways: expand substitutes the minors, bracketize recovers a bracket polynomial
from an invariant polynomial by subduction on leading terms.
"""
import re
from collections import defaultdict
from fractions import Fraction
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from sympy.polys.rings import PolyElement

from redraw_core.exact_matrix import RingMatrix
from redraw_core.exact_matrix import cofactor_det
from redraw_core.exact_polynomial import NormalRing
from redraw_core.exact_polynomial import leading_term
from redraw_core.exact_polynomial import normal_ring
from redraw_core.exact_polynomial import poly_canonicalize
from redraw_core.exceptions import MatrixError
from redraw_core.exceptions import RedrawError
from redraw_core.exceptions import SubductionError
from redraw_core.geometry import IncidenceGeometry
from redraw_core.geometry import NormalAssignment
from redraw_core.list_utils import index_map
from redraw_core.logger import logger_get
from redraw_core.pure_condition import require_basis
from redraw_core.pydantic_utils import CustomFrozen
from redraw_core.pydantic_utils import Frozen
from redraw_core.redraw_matrix import pinned_matrix
from redraw_core.redraw_matrix import point_columns

log = logger_get(__name__)
BracketRow = Tuple[int, ...]
BracketMonomial = Tuple[BracketRow, ...]
TOKEN = re.compile(r'\s*(?:(?P<bracket>\[[^\]]*\])|(?P<int>\d+)|(?P<op>[+\-*^()]))')


class Bracket(Frozen):
    """
    Sorted bracket of d distinct hyperplane labels
    """
    labels: Tuple[str, ...]

    def text(self) -> str:
        return f'[{" ".join(self.labels)}]'


class BracketPolynomial(CustomFrozen):
    """
    Integer combination of bracket monomials over the hyperplanes of a geometry.

    Attributes are:
        - hyperplanes: hyperplane labels, positions inside brackets refer to this order
        - d: ambient dimension (arity of every bracket)
        - terms: nonzero integer coefficient of each bracket monomial
    """
    hyperplanes: Tuple[str, ...]
    d: int
    terms: Dict[BracketMonomial, int]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def brackets(self, monomial: BracketMonomial) -> List[Bracket]:
        return [Bracket(labels=tuple(self.hyperplanes[i] for i in row)) for row in monomial]

    def text(self) -> str:
        return format_bracket_polynomial(self)


def _with_terms(hyperplanes: Sequence[str], d: int, terms: Dict[BracketMonomial, int]) -> BracketPolynomial:
    return BracketPolynomial(hyperplanes=tuple(hyperplanes), d=d,
                             terms={monomial: c for monomial, c in terms.items() if c})


def _sort_with_sign(positions: Sequence[int]) -> Tuple[BracketRow, int]:
    """
    Sorted positions and the sign of the sorting permutation
    """
    inversions = sum(1 for a in range(len(positions)) for b in range(a + 1, len(positions))
                     if positions[a] > positions[b])
    return tuple(sorted(positions)), -1 if inversions % 2 else 1


def normalize_bracket(labels: Sequence[str], hyperplanes: Sequence[str]) -> Optional[Tuple[Bracket, int]]:
    """
    Sorted bracket and permutation sign of a labelled bracket, None (the zero bracket) when a label
    repeats
    """
    positions = index_map(hyperplanes)
    if unknown := [label for label in labels if label not in positions]:
        raise RedrawError(f'unknown hyperplanes {unknown} in bracket')
    if len(set(labels)) < len(labels):
        return None
    row, sign = _sort_with_sign([positions[label] for label in labels])
    return Bracket(labels=tuple(hyperplanes[i] for i in row)), sign


def _multiply(left: Dict[BracketMonomial, int], right: Dict[BracketMonomial, int]) -> Dict[BracketMonomial, int]:
    product: Dict[BracketMonomial, int] = defaultdict(int)
    for a, ca in left.items():
        for b, cb in right.items():
            product[tuple(sorted(a + b))] += ca * cb
    return {monomial: c for monomial, c in product.items() if c}


def _add(left: Dict[BracketMonomial, int], right: Dict[BracketMonomial, int], factor: int = 1
         ) -> Dict[BracketMonomial, int]:
    total: Dict[BracketMonomial, int] = defaultdict(int, left)
    for monomial, c in right.items():
        total[monomial] += factor * c
    return {monomial: c for monomial, c in total.items() if c}


def _minor(row: BracketRow, nring: NormalRing) -> PolyElement:
    """
    The bracket of the hyperplanes at positions row, as a polynomial
    """
    columns = [[nring.variable(position, k) for position in row] for k in range(1, nring.d + 1)]
    return cofactor_det(columns, nring.zero, nring.one)


def expand(bp: BracketPolynomial) -> PolyElement:
    """
    Polynomial in the normal entries obtained by substituting every bracket by its minor
    """
    nring = normal_ring(bp.hyperplanes, bp.d)
    minors: Dict[BracketRow, PolyElement] = {}
    total = nring.zero
    for monomial, coefficient in bp.terms.items():
        term = nring.constant(coefficient)
        for row in monomial:
            if row not in minors:
                minors[row] = _minor(row, nring)
            term *= minors[row]
        total += term
    return total


def bracketize(p: PolyElement, nring: NormalRing, max_steps: int = 100000) -> BracketPolynomial:
    """
    Bracket polynomial expanding exactly to p, by subduction: the leading monomial of a product of
    sorted brackets is the product of their diagonals, so the leading monomial of the remainder is
    split column by column into sorted hyperplane lists read as the rows of a standard tableau.
    The result is in standard monomials. Raises SubductionError when p is not invariant.
    """
    if nring.d != 2:
        log.warning(f'bracketization in dimension {nring.d} is experimental')
    remainder = p
    terms: Dict[BracketMonomial, int] = {}
    minors: Dict[BracketRow, PolyElement] = {}
    for _ in range(max_steps):
        if not remainder:
            return _with_terms(nring.hyperplanes, nring.d, terms)
        monomial, coefficient = leading_term(remainder)
        tableau = _tableau(monomial, nring)
        product = nring.constant(coefficient)
        for row in tableau:
            if row not in minors:
                minors[row] = _minor(row, nring)
            product *= minors[row]
        terms[tableau] = terms.get(tableau, 0) + coefficient
        remainder -= product
    raise SubductionError(f'subduction did not terminate within {max_steps} steps')


def _tableau(monomial: Tuple[int, ...], nring: NormalRing) -> BracketMonomial:
    """
    Standard tableau whose diagonal product is monomial
    """
    columns = []
    for k in range(nring.d):
        column = []
        for position in range(len(nring.hyperplanes)):
            column.extend([position] * monomial[nring.variable_index(position, k + 1)])
        columns.append(column)
    if len({len(column) for column in columns}) > 1:
        raise SubductionError('leading monomial has unbalanced coordinate degrees: not invariant')
    rows = tuple(zip(*columns))
    if any(row[t] >= row[t + 1] for row in rows for t in range(nring.d - 1)):
        raise SubductionError('leading monomial matches no product of brackets: not invariant')
    return rows


def straighten(bp: BracketPolynomial) -> BracketPolynomial:
    """
    Rewrite bp in standard monomials. In the plane, a monomial holding [i j][k l] with i < k < l < j
    becomes [i l][k j] - [i k][l j] until every monomial is standard; in higher dimension the
    polynomial is expanded and bracketized again.
    """
    if bp.d != 2:
        return bracketize(expand(bp), normal_ring(bp.hyperplanes, bp.d))
    pending = dict(bp.terms)
    standard: Dict[BracketMonomial, int] = defaultdict(int)
    while pending:
        monomial, coefficient = pending.popitem()
        if (t := _first_violation(monomial)) is None:
            standard[monomial] += coefficient
            continue
        (i, j), (k, l) = monomial[t], monomial[t + 1]
        rest = monomial[:t] + monomial[t + 2:]
        for rewritten, sign in ((((i, l), (k, j)), 1), (((i, k), (l, j)), -1)):
            target = tuple(sorted(rest + rewritten))
            pending[target] = pending.get(target, 0) + sign * coefficient
            if not pending[target]:
                del pending[target]
    return _with_terms(bp.hyperplanes, bp.d, standard)


def _first_violation(monomial: BracketMonomial) -> Optional[int]:
    """
    First position t where consecutive sorted brackets break the column order
    """
    return next((t for t in range(len(monomial) - 1) if monomial[t][1] > monomial[t + 1][1]), None)


def bracket_canonicalize(bp: BracketPolynomial) -> Tuple[BracketPolynomial, Fraction]:
    """
    (bp', c) with expand(bp) = c·expand(bp'), expand(bp') primitive with positive leading
    coefficient and bp' in standard monomials
    """
    nring = normal_ring(bp.hyperplanes, bp.d)
    canonical, scalar = poly_canonicalize(expand(bp))
    return bracketize(canonical, nring), scalar


def evaluate_bracket(bracket: Bracket, normals: NormalAssignment) -> Fraction:
    """
    Exact value of a single bracket at the given normals
    """
    vectors = [normals.vector(h) for h in bracket.labels]
    columns = [[Fraction(vector[k]) for vector in vectors] for k in range(len(vectors))]
    return cofactor_det(columns, Fraction(0), Fraction(1))


def evaluate_brackets(bp: BracketPolynomial, normals: NormalAssignment) -> Fraction:
    """
    Exact value of bp at the given normals
    """
    values: Dict[BracketRow, Fraction] = {}
    total = Fraction(0)
    for monomial, coefficient in bp.terms.items():
        term = Fraction(coefficient)
        for row, bracket in zip(monomial, bp.brackets(monomial)):
            if row not in values:
                values[row] = evaluate_bracket(bracket, normals)
            term *= values[row]
        total += term
    return total


def format_bracket_polynomial(bp: BracketPolynomial) -> str:
    """
    Text of bp: monomials in increasing order, repeated brackets written with '^k'
    """
    if bp.is_zero:
        return '0'
    chunks = []
    for position, monomial in enumerate(sorted(bp.terms)):
        coefficient = bp.terms[monomial]
        factors = []
        for row in dict.fromkeys(monomial):
            power = monomial.count(row)
            text = f'[{" ".join(bp.hyperplanes[i] for i in row)}]'
            factors.append(text + (f'^{power}' if power > 1 else ''))
        magnitude = abs(coefficient)
        body = ''.join(factors)
        if magnitude != 1 or not factors:
            body = f'{magnitude}*{body}' if factors else str(magnitude)
        sign = '-' if coefficient < 0 else '+'
        chunks.append((f'-{body}' if coefficient < 0 else body) if position == 0 else f'{sign} {body}')
    return ' '.join(chunks)


def parse_bracket_polynomial(text: str, hyperplanes: Sequence[str], d: int) -> BracketPolynomial:
    """
    Parse sums and products of brackets such as '[h1 h5][h2 h4]([h2 h3] - 2*[h0 h5]^2)'. Labels
    inside a bracket are separated by spaces or commas; juxtaposition means product.
    """
    tokens = []
    position, stripped = 0, text.strip()
    while position < len(stripped):
        if not (match := TOKEN.match(stripped, position)):
            raise RedrawError(f'unexpected text in bracket expression at {stripped[position:position + 12]!r}')
        tokens.append((match.lastgroup, match.group(match.lastgroup)))
        position = match.end()
    parser = _BracketParser(tokens, tuple(hyperplanes), d)
    terms = parser.expression()
    if parser.index != len(tokens):
        raise RedrawError(f'unexpected {tokens[parser.index][1]!r} in bracket expression')
    return _with_terms(hyperplanes, d, terms)


class _BracketParser:
    """
    Recursive descent over expression := term (('+'|'-') term)*, term := ['+'|'-'] power ('*'? power)*,
    power := atom ('^' int)?, atom := int | bracket | '(' expression ')'
    """

    def __init__(self, tokens: List[Tuple[str, str]], hyperplanes: Tuple[str, ...], d: int):
        self.tokens = tokens
        self.hyperplanes = hyperplanes
        self.d = d
        self.index = 0

    def _peek(self) -> Optional[Tuple[str, str]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def expression(self) -> Dict[BracketMonomial, int]:
        total = self.term()
        while (token := self._peek()) in (('op', '+'), ('op', '-')):
            self.index += 1
            total = _add(total, self.term(), -1 if token[1] == '-' else 1)
        return total

    def term(self) -> Dict[BracketMonomial, int]:
        sign = 1
        while (token := self._peek()) in (('op', '+'), ('op', '-')):
            sign = -sign if token[1] == '-' else sign
            self.index += 1
        product = self.power()
        while (token := self._peek()) is not None and token not in (('op', '+'), ('op', '-'), ('op', ')')):
            if token == ('op', '*'):
                self.index += 1
            product = _multiply(product, self.power())
        return {monomial: sign * c for monomial, c in product.items()}

    def power(self) -> Dict[BracketMonomial, int]:
        base = self.atom()
        if self._peek() == ('op', '^'):
            self.index += 1
            exponent = self._peek()
            if exponent is None or exponent[0] != 'int':
                raise RedrawError('exponent expected after ^')
            self.index += 1
            result: Dict[BracketMonomial, int] = {(): 1}
            for _ in range(int(exponent[1])):
                result = _multiply(result, base)
            return result
        return base

    def atom(self) -> Dict[BracketMonomial, int]:
        if (token := self._peek()) is None:
            raise RedrawError('unexpected end of bracket expression')
        self.index += 1
        kind, value = token
        if kind == 'int':
            return {(): int(value)} if int(value) else {}
        if kind == 'bracket':
            labels = [label for label in re.split(r'[\s,]+', value[1:-1].strip()) if label]
            if len(labels) != self.d:
                raise RedrawError(f'bracket {value} should hold {self.d} labels')
            if (normalized := normalize_bracket(labels, self.hyperplanes)) is None:
                return {}
            bracket, sign = normalized
            positions = index_map(self.hyperplanes)
            return {(tuple(positions[label] for label in bracket.labels),): sign}
        if token == ('op', '('):
            inner = self.expression()
            if self._peek() != ('op', ')'):
                raise RedrawError('missing closing parenthesis in bracket expression')
            self.index += 1
            return inner
        raise RedrawError(f'unexpected {value!r} in bracket expression')


class BlockReduction(CustomFrozen):
    """
    Peeled form of a pinned planar matrix: det(pinned) = ±(product of diagonal brackets)·det(residual)

    Attributes are:
        - pinned_point: the pinned point
        - diagonal_brackets: one bracket per peeled 2×2 block, in peeling order
        - peeled_points: the point whose two columns carried each block
        - residual: the remaining square symbolic block
    """
    pinned_point: str
    diagonal_brackets: Tuple[Bracket, ...]
    peeled_points: Tuple[str, ...]
    residual: RingMatrix

    def bracket_product(self, hyperplanes: Sequence[str]) -> BracketPolynomial:
        """
        The product of the diagonal brackets as a bracket polynomial
        """
        positions = index_map(hyperplanes)
        monomial = tuple(sorted(tuple(positions[label] for label in b.labels) for b in self.diagonal_brackets))
        return _with_terms(hyperplanes, 2, {monomial: 1})


def block_reduce(g: IncidenceGeometry, p: Optional[str] = None) -> BlockReduction:
    """
    Planar reduction of the symbolic matrix pinned at p (first point by default). For every
    hyperplane in input order, its first incidence row is subtracted from its other incidence rows;
    the pivot rows with the hyperplane columns and the pin rows with the pinned columns are then
    dropped, leaving a (2|P| - 2) square block. Points whose two columns meet exactly two rows are
    peeled off as 2×2 blocks, each the bracket of the two hyperplanes of those rows.
    """
    if g.d != 2:
        raise MatrixError(f'block reduction is only defined in the plane, got d={g.d}')
    require_basis(g)
    point = p if p is not None else g.points[0]
    matrix = pinned_matrix(g, point).matrix
    rows = matrix.entries()
    hyperplane_rows = {h: [i for i, (_, k) in enumerate(g.incidences) if k == h] for h in g.hyperplanes}
    pivots = set()
    for h in g.hyperplanes:
        if not (incident := hyperplane_rows[h]):
            continue
        pivot, others = incident[0], incident[1:]
        pivots.add(pivot)
        for i in others:
            rows[i] = [entry - pivot_entry for entry, pivot_entry in zip(rows[i], rows[pivot])]
    kept_rows = [i for i in range(len(g.incidences)) if i not in pivots]
    pinned_columns = set(point_columns(g, point))
    kept_columns = [j for j in range(len(g.hyperplanes), matrix.ncols) if j not in pinned_columns]
    if len(kept_rows) != len(kept_columns):
        raise MatrixError(f'reduced block is {len(kept_rows)}x{len(kept_columns)}, not square')
    block = [[rows[i][j] for j in kept_columns] for i in kept_rows]
    row_labels = [matrix.row_labels[i] for i in kept_rows]
    column_labels = [matrix.column_labels[j] for j in kept_columns]
    row_hyperplanes = [g.incidences[i][1] for i in kept_rows]
    column_points = [g.points[(j - len(g.hyperplanes)) // 2] for j in kept_columns]
    brackets, peeled = [], []
    while (found := _peelable_point(block, column_points)) is not None:
        label, (r1, r2), (c1, c2) = found
        if (normalized := normalize_bracket((row_hyperplanes[r1], row_hyperplanes[r2]), g.hyperplanes)) is None:
            raise MatrixError(f'point {label} sits on two rows of hyperplane {row_hyperplanes[r1]}')
        brackets.append(normalized[0])
        peeled.append(label)
        keep_r = [i for i in range(len(block)) if i not in (r1, r2)]
        keep_c = [j for j in range(len(column_points)) if j not in (c1, c2)]
        block = [[block[i][j] for j in keep_c] for i in keep_r]
        row_labels, row_hyperplanes = [row_labels[i] for i in keep_r], [row_hyperplanes[i] for i in keep_r]
        column_labels, column_points = [column_labels[j] for j in keep_c], [column_points[j] for j in keep_c]
    log.debug(f'peeled {[b.text() for b in brackets]}, residual {len(block)}x{len(block)}')
    residual = RingMatrix(rows=tuple(tuple(row) for row in block), row_labels=tuple(row_labels),
                          column_labels=tuple(column_labels), ring=matrix.ring)
    return BlockReduction(pinned_point=point, diagonal_brackets=tuple(brackets), peeled_points=tuple(peeled),
                          residual=residual)


def _peelable_point(block: List[List[PolyElement]], column_points: List[str]
                    ) -> Optional[Tuple[str, Tuple[int, int], Tuple[int, int]]]:
    """
    First point whose two remaining columns are supported on exactly two rows
    """
    for label in dict.fromkeys(column_points):
        columns = [j for j, owner in enumerate(column_points) if owner == label]
        support = sorted({i for i, row in enumerate(block) for j in columns if row[j]})
        if len(columns) == 2 and len(support) == 2:
            return label, (support[0], support[1]), (columns[0], columns[1])
    return None
