"""
Module testing the pure conditions of the seven point example and of the Pappus sub geometry
against their hand derived bracket forms
"""
from pathlib import Path

from redraw_core import SafeTestCase
from redraw_core import logger_get
from redraw_core.bracket import block_reduce
from redraw_core.bracket import bracketize
from redraw_core.bracket import evaluate_brackets
from redraw_core.bracket import expand
from redraw_core.bracket import parse_bracket_polynomial
from redraw_core.bracket import straighten
from redraw_core.exact_matrix import det_polynomial
from redraw_core.exact_polynomial import coordinate_degrees
from redraw_core.exact_polynomial import hyperplane_degrees
from redraw_core.exact_polynomial import polynomial_ratio
from redraw_core.geometry import load_document
from redraw_core.geometry import normals_from_points
from redraw_core.pure_condition import degree_check
from redraw_core.pure_condition import evaluate
from redraw_core.pure_condition import pinned_determinant
from redraw_core.pure_condition import pure_condition

DATA = Path(__file__).resolve().parents[1] / 'data'
log = logger_get(__name__)

SEVEN_POINTS = '[h1 h5][h2 h4][h0 h3]([h2 h3][h0 h5][h1 h4] - [h2 h5][h0 h4][h1 h3])'
PAPPUS_SUB = ('[h1 h3][h2 h5][h4 h6]([h1 h7][h0 h6]([h0 h3][h2 h4][h5 h7] + [h0 h4][h2 h7][h3 h5])'
              ' - [h1 h6][h0 h5][h0 h4][h2 h7][h3 h7])')
PAPPUS_SUB_OTHER_SIGN = PAPPUS_SUB.replace(' - [h1 h6]', ' + [h1 h6]')


def block_factorization(g, reduction):
    """
    Pinned determinant and the product of the diagonal brackets with the residual determinant
    """
    product = expand(reduction.bracket_product(g.hyperplanes)) * det_polynomial(reduction.residual)
    return pinned_determinant(g, reduction.pinned_point), product


class SevenPointGoldenTest(SafeTestCase):
    """
    Class testing the pure condition of the seven point planar example
    """

    @classmethod
    def setUpClass(cls):
        """
        The pure condition is computed once for the whole class
        """
        super().setUpClass()
        cls.bundle = load_document(DATA / 'nf7.json')
        cls.pc = pure_condition(cls.bundle.geometry)

    def test_degree(self):
        """
        Degree 2(|P| - 1) = 12: six in each coordinate, two in the normal of each line
        """
        self.assertEqual(self.pc.degree, 12)
        self.assertEqual(coordinate_degrees(self.pc.polynomial, self.pc.ring), {(6, 6)})
        self.assertEqual(set(hyperplane_degrees(self.pc.polynomial, self.pc.ring).values()), {2})
        self.assertTrue(degree_check(self.pc, self.bundle.geometry))

    def test_bracket_formula(self):
        """
        The hand derived bracket product expands to the pure condition up to a rational scalar
        """
        golden = parse_bracket_polynomial(SEVEN_POINTS, self.bundle.geometry.hyperplanes, 2)
        ratio = polynomial_ratio(expand(golden), self.pc.polynomial)
        log.info(f'seven point golden scalar: {ratio}')
        self.assertIsNotNone(ratio)
        self.assertNotEqual(ratio, 0)

    def test_bracketize(self):
        """
        Subduction of the pure condition round trips and matches the straightened golden form
        """
        bp = bracketize(self.pc.polynomial, self.pc.ring)
        self.assertEqual(expand(bp), self.pc.polynomial)
        golden = straighten(parse_bracket_polynomial(SEVEN_POINTS, self.bundle.geometry.hyperplanes, 2))
        self.assertIsNotNone(polynomial_ratio(expand(golden), expand(bp)))

    def test_vanishes_at_realization(self):
        """
        The medial triangle normals admit a proper realization: the pure condition vanishes there
        """
        normals, _ = normals_from_points(self.bundle.geometry, self.bundle.coordinates)
        self.assertEqual(evaluate(self.pc, normals), 0)
        golden = parse_bracket_polynomial(SEVEN_POINTS, self.bundle.geometry.hyperplanes, 2)
        self.assertEqual(evaluate_brackets(golden, normals), 0)

    def test_block_reduction(self):
        """
        Pinning p0 peels the brackets [h1 h5] and [h2 h4] and leaves an 8x8 block
        """
        reduction = block_reduce(self.bundle.geometry, 'p0')
        self.assertEqual({b.text() for b in reduction.diagonal_brackets}, {'[h1 h5]', '[h2 h4]'})
        self.assertEqual((reduction.residual.nrows, reduction.residual.ncols), (8, 8))
        raw, product = block_factorization(self.bundle.geometry, reduction)
        self.assertIn(raw, (product, -product))


class PappusSubGoldenTest(SafeTestCase):
    """
    Class testing the pure condition of the Pappus sub geometry
    """

    @classmethod
    def setUpClass(cls):
        """
        The pure condition is computed once for the whole class
        """
        super().setUpClass()
        cls.bundle = load_document(DATA / 'pappus_sub.json')
        cls.pc = pure_condition(cls.bundle.geometry)

    def test_degree(self):
        """
        Degree 2(|P| - 1) = 16: eight in each coordinate, two in the normal of each line
        """
        self.assertEqual(self.pc.degree, 16)
        self.assertEqual(coordinate_degrees(self.pc.polynomial, self.pc.ring), {(8, 8)})
        self.assertEqual(set(hyperplane_degrees(self.pc.polynomial, self.pc.ring).values()), {2})
        self.assertTrue(degree_check(self.pc, self.bundle.geometry))

    def test_bracket_formula(self):
        """
        The bracket product expands to the pure condition up to a rational scalar
        """
        golden = parse_bracket_polynomial(PAPPUS_SUB, self.bundle.geometry.hyperplanes, 2)
        ratio = polynomial_ratio(expand(golden), self.pc.polynomial)
        log.info(f'pappus sub golden scalar: {ratio}')
        self.assertIsNotNone(ratio)

    def test_sign_of_last_term(self):
        """
        Only one sign of the last term vanishes on an exact Pappus realization
        """
        normals, _ = normals_from_points(self.bundle.geometry, self.bundle.coordinates)
        hyperplanes = self.bundle.geometry.hyperplanes
        self.assertEqual(evaluate(self.pc, normals), 0)
        self.assertEqual(evaluate_brackets(parse_bracket_polynomial(PAPPUS_SUB, hyperplanes, 2), normals), 0)
        self.assertNotEqual(evaluate_brackets(parse_bracket_polynomial(PAPPUS_SUB_OTHER_SIGN, hyperplanes, 2),
                                              normals), 0)

    def test_bracketize(self):
        """
        Subduction of the pure condition round trips exactly
        """
        bp = bracketize(self.pc.polynomial, self.pc.ring)
        self.assertEqual(expand(bp), self.pc.polynomial)

    def test_block_reduction(self):
        """
        Pinning p0 peels [h1 h3], [h2 h5] and [h4 h6] and leaves a 10x10 block
        """
        reduction = block_reduce(self.bundle.geometry, 'p0')
        self.assertEqual([b.text() for b in reduction.diagonal_brackets], ['[h1 h3]', '[h2 h5]', '[h4 h6]'])
        self.assertEqual(reduction.peeled_points, ('p6', 'p7', 'p8'))
        self.assertEqual((reduction.residual.nrows, reduction.residual.ncols), (10, 10))
        raw, product = block_factorization(self.bundle.geometry, reduction)
        self.assertIn(raw, (product, -product))
