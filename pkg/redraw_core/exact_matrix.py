"""
Module implementing exact matrices over Z[n_{h,k}] (symbolic) or over Q (numeric): polynomial
determinants, rational kernels and ranks, possibly modulo a prime
"""
import math
from fractions import Fraction
from itertools import combinations
from typing import Any
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from sympy import isprime
from sympy.polys.domains import GF
from sympy.polys.domains import QQ
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement

from redraw_core.exact_polynomial import NormalRing
from redraw_core.exceptions import MatrixError
from redraw_core.logger import logger_get
from redraw_core.pydantic_utils import CustomFrozen

log = logger_get(__name__)
COFACTOR_SIZE = 4


class RingMatrix(CustomFrozen):
    """
    Dense matrix with labelled rows and columns. Entries are Fractions when ring is None, elements
    of ring.ring otherwise.
    """
    rows: Tuple[Tuple[Any, ...], ...]
    row_labels: Tuple[str, ...]
    column_labels: Tuple[str, ...]
    ring: Optional[NormalRing] = None

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.column_labels)

    @property
    def is_symbolic(self) -> bool:
        return self.ring is not None

    def zero(self) -> Any:
        """
        Zero of the entry ring
        """
        return self.ring.zero if self.ring else Fraction(0)

    def entries(self) -> List[List[Any]]:
        """
        Mutable copy of the entries
        """
        return [list(row) for row in self.rows]

    def select_rows(self, positions: Sequence[int]) -> 'RingMatrix':
        """
        Sub matrix made of the rows at positions, in the given order
        """
        return self.model_copy(update={'rows': tuple(self.rows[i] for i in positions),
                                       'row_labels': tuple(self.row_labels[i] for i in positions)})

    def append_rows(self, rows: Sequence[Sequence[Any]], labels: Sequence[str]) -> 'RingMatrix':
        """
        New matrix with rows appended at the bottom
        """
        if any(len(row) != self.ncols for row in rows):
            raise MatrixError('appended rows must have as many entries as there are columns')
        return self.model_copy(update={'rows': self.rows + tuple(tuple(row) for row in rows),
                                       'row_labels': self.row_labels + tuple(labels)})


def det_polynomial(matrix: RingMatrix) -> PolyElement:
    """
    Exact determinant of a square symbolic matrix.

    The matrix is first peeled: rows or columns with a single nonzero entry are expanded, columns of
    integer constants holding a ±1 are cleared by unimodular row operations and then expanded, and
    pairs of columns supported on the same two rows are expanded as a 2×2 block (generalized Laplace).
    The residual goes through fraction free Bareiss elimination, or cofactor expansion when small.
    """
    if matrix.ring is None:
        raise MatrixError('det_polynomial expects a symbolic matrix, use det_rational')
    if matrix.nrows != matrix.ncols:
        raise MatrixError(f'cannot take the determinant of a {matrix.nrows}x{matrix.ncols} matrix')
    nring = matrix.ring
    factor, residual = _peel(matrix.entries(), nring)
    if not factor:
        return nring.zero
    if len(residual) < COFACTOR_SIZE:
        return factor * cofactor_det(residual, nring.zero, nring.one)
    log.debug(f'bareiss elimination on a {len(residual)}x{len(residual)} residual')
    return factor * _bareiss(residual, nring.zero, nring.one)


def _peel(rows: List[List[PolyElement]], nring: NormalRing) -> Tuple[PolyElement, List[List[PolyElement]]]:
    """
    Repeatedly strip structurally trivial rows and columns, returning (factor, residual) with
    det(rows) = factor·det(residual). A zero factor means a vanishing determinant.
    """
    factor = nring.one
    while rows:
        size = len(rows)
        column_support = [[i for i in range(size) if rows[i][j]] for j in range(size)]
        if any(not support for support in column_support) or any(not any(row) for row in rows):
            return nring.zero, []
        if (lone := _lone_entry(rows, column_support)) is not None:
            i, j = lone
            factor *= rows[i][j] if (i + j) % 2 == 0 else -rows[i][j]
            rows = _strike(rows, (i,), (j,))
            continue
        if _clear_unit_column(rows, column_support):
            continue
        if (block := _two_row_block(rows, column_support)) is None:
            break
        (i1, i2), (j1, j2) = block
        minor = rows[i1][j1] * rows[i2][j2] - rows[i1][j2] * rows[i2][j1]
        if not minor:
            return nring.zero, []
        factor *= minor if (i1 + i2 + j1 + j2) % 2 == 0 else -minor
        rows = _strike(rows, (i1, i2), (j1, j2))
    return factor, rows


def _lone_entry(rows: List[List[Any]], column_support: List[List[int]]) -> Optional[Tuple[int, int]]:
    """
    Position of the only nonzero entry of some column or row, if any
    """
    for j, support in enumerate(column_support):
        if len(support) == 1:
            return support[0], j
    for i, row in enumerate(rows):
        nonzero = [j for j, entry in enumerate(row) if entry]
        if len(nonzero) == 1:
            return i, nonzero[0]
    return None


def _clear_unit_column(rows: List[List[PolyElement]], column_support: List[List[int]]) -> bool:
    """
    Find a column of integer constants with a ±1 entry and clear the rest of it with row operations
    (leaving the determinant unchanged). Returns whether a column was cleared.
    """
    for j, support in enumerate(column_support):
        if not all(rows[i][j].is_ground for i in support):
            continue
        pivot = next((i for i in support if abs(_constant(rows[i][j])) == 1), None)
        if pivot is None:
            continue
        unit = _constant(rows[pivot][j])
        for i in support:
            if i != pivot:
                ratio = _constant(rows[i][j]) * unit
                rows[i] = [entry - ratio * pivot_entry for entry, pivot_entry in zip(rows[i], rows[pivot])]
        return True
    return False


def _two_row_block(rows: List[List[Any]], column_support: List[List[int]]
                   ) -> Optional[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """
    Two columns whose nonzero entries all lie on the same pair of rows
    """
    pairs = [(j, tuple(support)) for j, support in enumerate(column_support) if len(support) == 2]
    for (j1, support), (j2, other) in combinations(pairs, 2):
        if support == other:
            return support, (j1, j2)
    return None


def _constant(entry: PolyElement) -> int:
    return int(entry.get(entry.ring.zero_monom, 0))


def _strike(rows: List[List[Any]], row_positions: Sequence[int], column_positions: Sequence[int]
            ) -> List[List[Any]]:
    return [[entry for j, entry in enumerate(row) if j not in column_positions]
            for i, row in enumerate(rows) if i not in row_positions]


def cofactor_det(rows: Sequence[Sequence[Any]], zero: Any, one: Any) -> Any:
    """
    Determinant by Laplace expansion along the first row. Exponential: small matrices and test
    oracles only. Works for any commutative ring whose zero is falsy.
    """
    size = len(rows)
    if size == 0:
        return one
    if size == 1:
        return rows[0][0]
    total = zero
    for j, entry in enumerate(rows[0]):
        if entry:
            minor = cofactor_det([[row[k] for k in range(size) if k != j] for row in rows[1:]], zero, one)
            total = total + entry * minor if j % 2 == 0 else total - entry * minor
    return total


def _bareiss(rows: List[List[PolyElement]], zero: PolyElement, one: PolyElement) -> PolyElement:
    """
    Fraction free Bareiss elimination with exact divisions. The pivot of each step is the nonzero
    candidate with the fewest terms; each row swap flips the sign.
    """
    size = len(rows)
    rows = [list(row) for row in rows]
    previous = one
    sign = 1
    for k in range(size - 1):
        candidates = [i for i in range(k, size) if rows[i][k]]
        if not candidates:
            return zero
        best = min(candidates, key=lambda i: len(rows[i][k]))
        if best != k:
            rows[k], rows[best] = rows[best], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (pivot * rows[i][j] - rows[i][k] * rows[k][j]).exquo(previous)
            rows[i][k] = zero
        previous = pivot
    return rows[-1][-1] if sign > 0 else -rows[-1][-1]


def _domain_matrix(matrix: RingMatrix, modulus: Optional[int] = None) -> DomainMatrix:
    """
    Numeric matrix as a sympy DomainMatrix over QQ, or over GF(modulus)
    """
    if matrix.ring is not None:
        raise MatrixError('numeric operation requested on a symbolic matrix')
    if modulus is None:
        domain = QQ
        rows = [[QQ(entry.numerator, entry.denominator) for entry in row] for row in matrix.rows]
    else:
        domain = GF(modulus)
        rows = [[domain(_reduce(entry, modulus)) for entry in row] for row in matrix.rows]
    return DomainMatrix(rows, (matrix.nrows, matrix.ncols), domain)


def _reduce(entry: Fraction, modulus: int) -> int:
    if entry.denominator % modulus == 0:
        raise MatrixError(f'{entry} has no image modulo {modulus}')
    return entry.numerator * pow(entry.denominator, -1, modulus) % modulus


def _check_modulus(modulus: Optional[int]) -> None:
    if modulus is not None and (modulus < 2 or not isprime(modulus)):
        raise MatrixError(f'modulus {modulus} is not a prime')


def det_rational(matrix: RingMatrix) -> Fraction:
    """
    Exact determinant of a square numeric matrix
    """
    if matrix.nrows != matrix.ncols:
        raise MatrixError(f'cannot take the determinant of a {matrix.nrows}x{matrix.ncols} matrix')
    if matrix.ring is not None:
        raise MatrixError('det_rational expects a numeric matrix, use det_polynomial')
    if matrix.nrows == 0:
        return Fraction(1)
    scales = [math.lcm(*(Fraction(entry).denominator for entry in row)) for row in matrix.rows]
    integer_rows = [[ZZ(int(Fraction(entry) * scale)) for entry in row] for row, scale in zip(matrix.rows, scales)]
    value = DomainMatrix(integer_rows, (matrix.nrows, matrix.ncols), ZZ).det()
    return Fraction(int(value), math.prod(scales))


def _pivots(matrix: RingMatrix, modulus: Optional[int] = None) -> Tuple[DomainMatrix, Tuple[int, ...]]:
    reduced, pivots = _domain_matrix(matrix, modulus).rref()
    return reduced, tuple(pivots)


def rank(matrix: RingMatrix, modulus: Optional[int] = None) -> int:
    """
    Exact rank over Q, or over GF(modulus) when a prime modulus is given
    """
    _check_modulus(modulus)
    if matrix.nrows == 0 or matrix.ncols == 0:
        return 0
    return len(_pivots(matrix, modulus)[1])


def kernel_basis(matrix: RingMatrix) -> List[Tuple[Fraction, ...]]:
    """
    Basis of the right kernel over Q, read from the reduced row echelon form: one vector per free
    column (in increasing column order), equal to 1 on that column and 0 on the other free columns.
    """
    if matrix.ncols == 0:
        return []
    if matrix.nrows == 0:
        return [tuple(Fraction(int(i == j)) for i in range(matrix.ncols)) for j in range(matrix.ncols)]
    reduced, pivots = _pivots(matrix)
    entries = reduced.to_list()
    free = [j for j in range(matrix.ncols) if j not in pivots]
    basis = []
    for column in free:
        vector = [Fraction(0)] * matrix.ncols
        vector[column] = Fraction(1)
        for row, pivot in enumerate(pivots):
            value = entries[row][column]
            vector[pivot] = -Fraction(int(value.numerator), int(value.denominator))
        basis.append(tuple(vector))
    return basis


def multiply_vector(matrix: RingMatrix, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """
    Product of a numeric matrix with a column vector
    """
    if len(vector) != matrix.ncols:
        raise MatrixError(f'vector of size {len(vector)} does not match {matrix.ncols} columns')
    return tuple(sum((entry * value for entry, value in zip(row, vector)), Fraction(0))
                 for row in matrix.rows)
