"""
Module testing parallel redrawings at normals where pure conditions vanish
"""
from fractions import Fraction
from pathlib import Path

from redraw_core import SafeTestCase
from redraw_core.geometry import load_document
from redraw_core.geometry import normals_from_points
from redraw_core.geometry import parse_normals
from redraw_core.pure_condition import evaluate
from redraw_core.pure_condition import pure_condition
from redraw_core.read_write import load_text_file
from redraw_core.redraw import classify_realization
from redraw_core.redraw import degenerate_factors
from redraw_core.redraw import RealizationKind
from redraw_core.redraw import redrawing_space

DATA = Path(__file__).resolve().parents[1] / 'data'


class RealizationTest(SafeTestCase):
    """
    Class testing parallel redrawings at normals where pure conditions vanish
    """

    def setUp(self):
        """
        Seven point example and its exact medial triangle coordinates
        """
        super().setUp()
        self.bundle = load_document(DATA / 'nf7.json')
        self.g = self.bundle.geometry
        self.medial = parse_normals(load_text_file(DATA / 'medial.json'), self.g)

    def test_medial_triangle(self):
        """
        The redrawing at the medial normals is proper and is the medial triangle up to scale
        """
        self.assertEqual(evaluate(pure_condition(self.g), self.medial), 0)
        report = redrawing_space(self.g, self.medial, 'p6')
        self.assertEqual(report.kernel_dimension, 1)
        self.assertEqual(report.classifications, (RealizationKind.PROPER,))
        coords = report.redrawings[0].coords.coords
        scale = Fraction(2) / coords['p2'][0]
        for p, expected in self.bundle.coordinates.coords.items():
            self.assertEqual(tuple(scale * x for x in coords[p]), expected, p)

    def test_generic_normals(self):
        """
        At normals (1, i + 1) the pure condition is nonzero and only the trivial redrawing remains
        """
        generic = parse_normals(load_text_file(DATA / 'generic.json'), self.g)
        self.assertNotEqual(evaluate(pure_condition(self.g), generic), 0)
        self.assertEqual(redrawing_space(self.g, generic, 'p0').kernel_dimension, 0)

    def test_coordinates_realization(self):
        """
        The realization read from the coordinates is proper
        """
        normals, realization = normals_from_points(self.g, self.bundle.coordinates)
        self.assertEqual(classify_realization(self.g, normals, realization), RealizationKind.PROPER)

    def test_parallel_bracket(self):
        """
        With [h1 h5] = 0 the two lines through p4 coincide in every nontrivial redrawing
        """
        parallel = parse_normals(load_text_file(DATA / 'parallel_h1_h5.json'), self.g)
        self.assertEqual(evaluate(pure_condition(self.g), parallel), 0)
        factors = degenerate_factors(self.g, parallel)
        self.assertEqual([factor.hyperplanes for factor in factors], [('h1', 'h5')])
        self.assertEqual(factors[0].shared_point, 'p4')
        report = redrawing_space(self.g, parallel)
        self.assertGreaterEqual(report.kernel_dimension, 1)
        self.assertTrue(all(kind == RealizationKind.IMPROPER for kind in report.classifications))

    def test_degenerate_pappus(self):
        """
        The Pappus sub geometry drawn with coincident points and lines is improper
        """
        bundle = load_document(DATA / 'pappus_degenerate.json')
        normals, realization = normals_from_points(bundle.geometry, bundle.coordinates)
        self.assertEqual(normals.vector('h1'), normals.vector('h3'))
        self.assertEqual(classify_realization(bundle.geometry, normals, realization), RealizationKind.IMPROPER)
        self.assertEqual(evaluate(pure_condition(bundle.geometry), normals), 0)
