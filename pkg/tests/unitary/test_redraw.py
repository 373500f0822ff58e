"""
Module testing redrawing spaces, realization classes and minor counts
"""
from fractions import Fraction
from pathlib import Path

from redraw_core import SafeTestCase
from redraw_core.exact_matrix import RingMatrix
from redraw_core.exceptions import MatrixError
from redraw_core.exceptions import NotOverconstrainedError
from redraw_core.exceptions import RealizationError
from redraw_core.geometry import check_realization
from redraw_core.geometry import load_document
from redraw_core.geometry import NormalAssignment
from redraw_core.geometry import normals_from_points
from redraw_core.geometry import PointConfiguration
from redraw_core.geometry import Realization
from redraw_core.redraw import classify_realization
from redraw_core.redraw import count_nonzero_minors
from redraw_core.redraw import degenerate_factors
from redraw_core.redraw import overconstrained_report
from redraw_core.redraw import RealizationKind
from redraw_core.redraw import realization_from_vector
from redraw_core.redraw import redrawing_space
from redraw_core.redraw import repin_realization

DATA = Path(__file__).resolve().parents[1] / 'data'
DG4_PARALLEL = NormalAssignment(entries={'h0': (1, 1), 'h1': (1, 0), 'h2': (0, 1), 'h3': (2, 2)})


def numeric(rows):
    """
    Numeric RingMatrix with default labels
    """
    rows = tuple(tuple(Fraction(entry) for entry in row) for row in rows)
    return RingMatrix(rows=rows, row_labels=tuple(f'r{i}' for i in range(len(rows))),
                      column_labels=tuple(f'c{j}' for j in range(len(rows[0]))))


class RedrawTest(SafeTestCase):
    """
    Class testing redrawing spaces, realization classes and minor counts
    """

    def test_vector_layout(self):
        """
        Offsets come first, then the coordinates of each point
        """
        g = load_document(DATA / 'dg4.json').geometry
        vector = [Fraction(i) for i in range(8)]
        r = realization_from_vector(g, vector)
        self.assertEqual(r.offsets, {'h0': 0, 'h1': 1, 'h2': 2, 'h3': 3})
        self.assertEqual(r.coords.coords['p1'], (6, 7))

    def test_parallel_common_lines(self):
        """
        Parallel normals on the two common lines let them coincide: one improper redrawing
        """
        g = load_document(DATA / 'dg4.json').geometry
        report = redrawing_space(g, DG4_PARALLEL)
        self.assertEqual(report.kernel_dimension, 1)
        self.assertEqual(report.pinned_point, 'p0')
        self.assertEqual(report.classifications, (RealizationKind.IMPROPER,))
        redrawing = report.redrawings[0]
        self.assertEqual(redrawing.coords.coords['p0'], (0, 0))
        x, y = redrawing.coords.coords['p1']
        self.assertEqual(x + y, 0)
        self.assertNotEqual(x, 0)

    def test_trivial_realization(self):
        """
        All points at one place
        """
        bundle = load_document(DATA / 'g1.json')
        r = Realization(coords=PointConfiguration(coords={'p0': (Fraction(2), Fraction(5))}),
                        offsets={'h0': Fraction(-2)})
        self.assertEqual(classify_realization(bundle.geometry, bundle.normals, r), RealizationKind.TRIVIAL)
        wrong = r.model_copy(update={'offsets': {'h0': Fraction(0)}})
        with self.assertRaises(RealizationError):
            classify_realization(bundle.geometry, bundle.normals, wrong)

    def test_repin(self):
        """
        Translating a realization keeps it valid and moves the chosen point to the origin
        """
        bundle = load_document(DATA / 'nf7.json')
        normals, realization = normals_from_points(bundle.geometry, bundle.coordinates)
        moved = repin_realization(bundle.geometry, normals, realization, 'p2')
        self.assertEqual(moved.coords.coords['p2'], (0, 0))
        self.assertEqual(moved.coords.coords['p6'], (-2, 0))
        check_realization(bundle.geometry, normals, moved)
        self.assertEqual(classify_realization(bundle.geometry, normals, moved), RealizationKind.PROPER)
        with self.assertRaises(RealizationError):
            repin_realization(bundle.geometry, normals, realization, 'p9')

    def test_minor_count(self):
        """
        Nonzero maximal minors among the row choices
        """
        self.assertEqual(count_nonzero_minors(numeric([[1, 0], [0, 1], [1, 1]])), (3, 3))
        self.assertEqual(count_nonzero_minors(numeric([[1, 0], [2, 0], [0, 1]])), (2, 3))
        with self.assertRaises(MatrixError):
            count_nonzero_minors(numeric([[1, 0, 0]]))
        with self.assertRaises(MatrixError):
            count_nonzero_minors(numeric([[1, 0], [0, 1], [1, 1]]), max_minors=2)

    def test_not_overconstrained(self):
        """
        Bases are handled by the pure condition
        """
        bundle = load_document(DATA / 'nf7.json')
        normals, _ = normals_from_points(bundle.geometry, bundle.coordinates)
        with self.assertRaises(NotOverconstrainedError):
            overconstrained_report(bundle.geometry, normals)

    def test_degenerate_factors(self):
        """
        The bracket of two parallel lines sharing a point is reported
        """
        g = load_document(DATA / 'dg4.json').geometry
        factors = degenerate_factors(g, DG4_PARALLEL)
        self.assertEqual(len(factors), 1)
        self.assertEqual(factors[0].hyperplanes, ('h0', 'h3'))
        self.assertEqual(factors[0].shared_point, 'p1')
        generic = NormalAssignment(entries={'h0': (1, 2), 'h1': (1, 0), 'h2': (0, 1), 'h3': (3, 1)})
        self.assertEqual(degenerate_factors(g, generic), ())
