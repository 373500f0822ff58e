"""
Module listing all public method from the redraw_core modules
"""
from redraw_core.bracket import block_reduce
from redraw_core.bracket import BlockReduction
from redraw_core.bracket import Bracket
from redraw_core.bracket import bracket_canonicalize
from redraw_core.bracket import bracketize
from redraw_core.bracket import BracketPolynomial
from redraw_core.bracket import evaluate_bracket
from redraw_core.bracket import evaluate_brackets
from redraw_core.bracket import expand
from redraw_core.bracket import format_bracket_polynomial
from redraw_core.bracket import normalize_bracket
from redraw_core.bracket import parse_bracket_polynomial
from redraw_core.bracket import straighten
from redraw_core.exact_matrix import cofactor_det
from redraw_core.exact_matrix import det_polynomial
from redraw_core.exact_matrix import det_rational
from redraw_core.exact_matrix import kernel_basis
from redraw_core.exact_matrix import multiply_vector
from redraw_core.exact_matrix import rank
from redraw_core.exact_matrix import RingMatrix
from redraw_core.exact_polynomial import coordinate_degrees
from redraw_core.exact_polynomial import evaluate_polynomial
from redraw_core.exact_polynomial import format_polynomial
from redraw_core.exact_polynomial import hyperplane_degrees
from redraw_core.exact_polynomial import is_homogeneous
from redraw_core.exact_polynomial import leading_term
from redraw_core.exact_polynomial import normal_ring
from redraw_core.exact_polynomial import NormalRing
from redraw_core.exact_polynomial import parse_polynomial
from redraw_core.exact_polynomial import poly_canonicalize
from redraw_core.exact_polynomial import polynomial_ratio
from redraw_core.exact_polynomial import total_degree
from redraw_core.exact_random import make_rng
from redraw_core.exact_random import random_unimodular
from redraw_core.exceptions import GeometryError
from redraw_core.exceptions import MatrixError
from redraw_core.exceptions import NormalError
from redraw_core.exceptions import NotABasisError
from redraw_core.exceptions import NotOverconstrainedError
from redraw_core.exceptions import RealizationError
from redraw_core.exceptions import RedrawError
from redraw_core.exceptions import SubductionError
from redraw_core.geometry import check_incident_points
from redraw_core.geometry import check_normals
from redraw_core.geometry import check_realization
from redraw_core.geometry import GeometryBundle
from redraw_core.geometry import IncidenceGeometry
from redraw_core.geometry import load_document
from redraw_core.geometry import make_geometry
from redraw_core.geometry import NormalAssignment
from redraw_core.geometry import normals_from_points
from redraw_core.geometry import parse_document
from redraw_core.geometry import parse_geometry
from redraw_core.geometry import parse_normals
from redraw_core.geometry import PointConfiguration
from redraw_core.geometry import random_normal_assignment
from redraw_core.geometry import Realization
from redraw_core.geometry import serialize_geometry
from redraw_core.geometry import sub_geometry
from redraw_core.geometry import transform_normals
from redraw_core.list_utils import group_by_value
from redraw_core.logger import logger_get
from redraw_core.matroid import basis_size
from redraw_core.matroid import count_excess
from redraw_core.matroid import find_circuit
from redraw_core.matroid import generic_corank
from redraw_core.matroid import generic_rank
from redraw_core.matroid import is_basis
from redraw_core.matroid import is_independent
from redraw_core.matroid import MatroidMethod
from redraw_core.matroid import MatroidReport
from redraw_core.matroid import proper_count_condition
from redraw_core.pure_condition import degree_check
from redraw_core.pure_condition import evaluate
from redraw_core.pure_condition import kernel_dimension
from redraw_core.pure_condition import pin_invariance_check
from redraw_core.pure_condition import pinned_determinant
from redraw_core.pure_condition import pinned_value
from redraw_core.pure_condition import pure_condition
from redraw_core.pure_condition import PureCondition
from redraw_core.pure_condition import sl_invariance_check
from redraw_core.pure_condition import translation_vectors
from redraw_core.pydantic_utils import CustomFrozen
from redraw_core.pydantic_utils import format_rational
from redraw_core.pydantic_utils import Frozen
from redraw_core.pydantic_utils import parse_rational
from redraw_core.read_write import dumps_json
from redraw_core.read_write import load_yaml_file
from redraw_core.read_write import loads_json
from redraw_core.redraw import classify_realization
from redraw_core.redraw import count_nonzero_minors
from redraw_core.redraw import degenerate_factors
from redraw_core.redraw import overconstrained_report
from redraw_core.redraw import RealizationKind
from redraw_core.redraw import redrawing_space
from redraw_core.redraw import repin_realization
from redraw_core.redraw_matrix import build_matrix
from redraw_core.redraw_matrix import pin
from redraw_core.redraw_matrix import pinned_matrix
from redraw_core.redraw_matrix import RedrawMatrix
from redraw_core.safe_utils import safe_clt
from redraw_core.safe_utils import SafeTestCase
from redraw_core.settings import Settings
from redraw_core.settings import SETTINGS

__version__ = '0.1.0'

__all__ = [
    'block_reduce', 'BlockReduction', 'Bracket', 'bracket_canonicalize', 'bracketize', 'BracketPolynomial',
    'evaluate_bracket', 'evaluate_brackets', 'expand', 'format_bracket_polynomial', 'normalize_bracket',
    'parse_bracket_polynomial', 'straighten', 'cofactor_det', 'det_polynomial', 'det_rational',
    'kernel_basis', 'multiply_vector', 'rank', 'RingMatrix', 'coordinate_degrees', 'evaluate_polynomial',
    'format_polynomial', 'hyperplane_degrees', 'is_homogeneous', 'leading_term', 'normal_ring', 'NormalRing',
    'parse_polynomial', 'poly_canonicalize', 'polynomial_ratio', 'total_degree', 'make_rng', 'random_unimodular',
    'GeometryError', 'MatrixError', 'NormalError', 'NotABasisError', 'NotOverconstrainedError',
    'RealizationError', 'RedrawError', 'SubductionError', 'check_incident_points', 'check_normals',
    'check_realization',
    'GeometryBundle', 'IncidenceGeometry', 'load_document', 'make_geometry', 'NormalAssignment',
    'normals_from_points', 'parse_document', 'parse_geometry', 'parse_normals', 'PointConfiguration',
    'random_normal_assignment', 'Realization', 'serialize_geometry', 'sub_geometry', 'transform_normals',
    'group_by_value', 'logger_get', 'basis_size', 'count_excess', 'find_circuit', 'generic_corank',
    'generic_rank', 'is_basis', 'is_independent', 'MatroidMethod', 'MatroidReport',
    'proper_count_condition', 'degree_check', 'evaluate', 'kernel_dimension', 'pin_invariance_check',
    'pinned_determinant', 'pinned_value', 'pure_condition', 'PureCondition', 'sl_invariance_check',
    'translation_vectors', 'CustomFrozen', 'format_rational', 'Frozen', 'parse_rational', 'dumps_json',
    'load_yaml_file', 'loads_json', 'classify_realization',
    'count_nonzero_minors', 'degenerate_factors', 'overconstrained_report', 'RealizationKind',
    'redrawing_space', 'repin_realization', 'build_matrix', 'pin', 'pinned_matrix', 'RedrawMatrix',
    'safe_clt', 'SafeTestCase', 'Settings', 'SETTINGS', '__version__']
