"""
Module listing all errors raised by redraw_core. All of them are ValueErrors, so that callers not
interested in the detail can catch a single family.
"""
from typing import Any


class RedrawError(ValueError):
    """
    Root of all redraw_core errors
    """


class GeometryError(RedrawError):
    """
    Malformed or inconsistent incidence geometry document
    """


class NormalError(RedrawError):
    """
    Missing, zero or wrongly sized normal vector
    """


class MatrixError(RedrawError):
    """
    Illegal matrix operation (non-square determinant, double pinning, bad modulus...)
    """


class NotABasisError(RedrawError):
    """
    The geometry is not a basis of the d-plane matroid, hence its pinned matrix is not square.
    The matroid report explaining why is attached.
    """

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class SubductionError(RedrawError):
    """
    A leading monomial matches no product of bracket leading terms: the polynomial is not invariant
    """


class RealizationError(RedrawError):
    """
    Coordinates, offsets and normals violating n(h)·x(p) + ι(h) = 0, or not determining a normal
    """


class NotOverconstrainedError(RedrawError):
    """
    The geometry has no more incidences than a basis, use the pure condition instead
    """
