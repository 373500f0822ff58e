"""
Module testing exact symbolic and numeric matrices
"""
from fractions import Fraction

from redraw_core import SafeTestCase
from redraw_core.exact_matrix import cofactor_det
from redraw_core.exact_matrix import det_polynomial
from redraw_core.exact_matrix import det_rational
from redraw_core.exact_matrix import kernel_basis
from redraw_core.exact_matrix import multiply_vector
from redraw_core.exact_matrix import rank
from redraw_core.exact_matrix import RingMatrix
from redraw_core.exact_polynomial import normal_ring
from redraw_core.exact_random import make_rng
from redraw_core.exact_random import seeds
from redraw_core.exceptions import MatrixError


def numeric(rows):
    """
    Numeric RingMatrix with default labels
    """
    rows = tuple(tuple(Fraction(entry) for entry in row) for row in rows)
    return RingMatrix(rows=rows, row_labels=tuple(f'r{i}' for i in range(len(rows))),
                      column_labels=tuple(f'c{j}' for j in range(len(rows[0]) if rows else 0)))


def random_entry(rng, nring):
    """
    Zero, a small constant, or a small multiple of a variable plus a constant
    """
    kind = int(rng.integers(0, 4))
    if kind == 0:
        return nring.zero
    if kind == 1:
        return nring.constant(int(rng.integers(-2, 3)))
    variable = nring.ring.gens[int(rng.integers(0, len(nring.ring.gens)))]
    return int(rng.integers(1, 3)) * variable + int(rng.integers(-1, 2))


class ExactMatrixTest(SafeTestCase):
    """
    Class testing exact symbolic and numeric matrices
    """

    def test_det_rational(self):
        """
        Exact determinant of rational matrices
        """
        self.assertEqual(det_rational(numeric([[Fraction(1, 2), 1], [3, 4]])), Fraction(-1))
        self.assertEqual(det_rational(numeric([[1, 2], [2, 4]])), 0)
        with self.assertRaises(MatrixError):
            det_rational(numeric([[1, 2, 3], [4, 5, 6]]))

    def test_rank_and_kernel(self):
        """
        Rank over Q and over a prime field, kernel vectors mapped to zero
        """
        matrix = numeric([[1, 1, 0], [2, 2, 0]])
        self.assertEqual(rank(matrix), 1)
        basis = kernel_basis(matrix)
        self.assertEqual(len(basis), 2)
        for vector in basis:
            self.assertEqual(multiply_vector(matrix, vector), (0, 0))
        self.assertEqual(rank(numeric([[1, 1], [1, 4]]), modulus=3), 1)
        self.assertEqual(rank(numeric([[1, 1], [1, 4]])), 2)
        with self.assertRaises(MatrixError):
            rank(matrix, modulus=4)

    def test_symbolic_determinant(self):
        """
        The pinned matrix of a single incidence has determinant one, a bracket matrix its minor
        """
        nring = normal_ring(('h0', 'h1'), 2)
        f0, g0 = nring.variable(0, 1), nring.variable(0, 2)
        f1, g1 = nring.variable(1, 1), nring.variable(1, 2)
        zero, one = nring.zero, nring.one
        pinned = RingMatrix(rows=((one, f0, g0), (zero, one, zero), (zero, zero, one)),
                            row_labels=('(p0,h0)', 'pin(p0,1)', 'pin(p0,2)'),
                            column_labels=('y_{h0}', 'x_{p0,1}', 'x_{p0,2}'), ring=nring)
        self.assertEqual(det_polynomial(pinned), one)
        block = RingMatrix(rows=((f0, g0), (f1, g1)), row_labels=('a', 'b'), column_labels=('x', 'y'),
                           ring=nring)
        self.assertEqual(det_polynomial(block), f0 * g1 - g0 * f1)

    def test_symbolic_matches_cofactor(self):
        """
        Elimination and Laplace expansion agree on a dense symbolic 4x4 matrix
        """
        nring = normal_ring(('h0', 'h1', 'h2', 'h3'), 2)
        variables = [nring.variable(i, k) for i in range(4) for k in (1, 2)]
        rows = tuple(tuple(variables[(i + j) % 8] + (nring.one if i == j else nring.zero) for j in range(4))
                     for i in range(4))
        matrix = RingMatrix(rows=rows, row_labels=tuple('abcd'), column_labels=tuple('wxyz'), ring=nring)
        self.assertEqual(det_polynomial(matrix), cofactor_det(rows, nring.zero, nring.one))

    def test_row_operations(self):
        """
        Row selection and appending keep labels aligned
        """
        matrix = numeric([[1, 0], [0, 1], [1, 1]])
        selected = matrix.select_rows([2, 0])
        self.assertEqual(selected.row_labels, ('r2', 'r0'))
        self.assertEqual(selected.rows[0], (1, 1))
        appended = selected.append_rows([[Fraction(5), Fraction(6)]], ['extra'])
        self.assertEqual(appended.nrows, 3)
        with self.assertRaises(MatrixError):
            selected.append_rows([[Fraction(1)]], ['short'])

    def test_random_symbolic_determinants(self):
        """
        Peeling and elimination agree with Laplace expansion on seeded sparse matrices up to 6x6
        """
        nring = normal_ring(tuple(f'h{i}' for i in range(6)), 2)
        for size in range(1, 7):
            for trial_seed in seeds(size, 4):
                rng = make_rng(trial_seed)
                rows = tuple(tuple(random_entry(rng, nring) for _ in range(size)) for _ in range(size))
                matrix = RingMatrix(rows=rows, row_labels=tuple(f'r{i}' for i in range(size)),
                                    column_labels=tuple(f'c{j}' for j in range(size)), ring=nring)
                self.assertEqual(det_polynomial(matrix), cofactor_det(rows, nring.zero, nring.one),
                                 f'{size}x{size}, seed {trial_seed}')

    def test_field_rank_below_rational_rank(self):
        """
        Reducing modulo a prime never raises the rank
        """
        for trial_seed in seeds(3, 30):
            rng = make_rng(trial_seed)
            nrows, ncols = int(rng.integers(1, 7)), int(rng.integers(1, 8))
            matrix = numeric(rng.integers(-4, 5, size=(nrows, ncols)).tolist())
            for prime in (2, 3, 5, 7):
                self.assertLessEqual(rank(matrix, modulus=prime), rank(matrix))
