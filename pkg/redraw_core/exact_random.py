"""
Module implementing seeded random draws used by the randomized checks: rational and modular vectors,
and integer matrices of determinant one
"""
from fractions import Fraction
from typing import List
from typing import Tuple

import numpy as np

MAX_FACTORS = 6
SHEAR_BOUND = 5


def make_rng(seed: int) -> np.random.Generator:
    """
    Reproducible numpy generator for the given seed
    """
    return np.random.default_rng(seed)


def random_rational_vector(rng: np.random.Generator, size: int, bound: int) -> Tuple[Fraction, ...]:
    """
    Nonzero vector of rationals a/b with |a| <= bound and 1 <= b <= bound
    """
    while True:
        numerators = rng.integers(-bound, bound, size=size, endpoint=True)
        denominators = rng.integers(1, bound, size=size, endpoint=True)
        vector = tuple(Fraction(int(a), int(b)) for a, b in zip(numerators, denominators))
        if any(vector):
            return vector


def random_field_vector(rng: np.random.Generator, size: int, prime: int) -> Tuple[Fraction, ...]:
    """
    Nonzero vector of residues in [0, prime), returned as integral Fractions
    """
    while True:
        vector = tuple(Fraction(int(value)) for value in rng.integers(0, prime, size=size))
        if any(vector):
            return vector


def random_unimodular(d: int, seed: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Random d×d integer matrix of determinant 1: a product of at most six elementary factors, each a
    shear (identity plus c·E_ij, |c| <= 5) or a row swap with one row negated.
    """
    if d == 1:
        return ((1,),)
    matrix = np.identity(d, dtype=object)
    rng = make_rng(seed)
    for _ in range(int(rng.integers(1, MAX_FACTORS, endpoint=True))):
        i, j = (int(k) for k in rng.choice(d, size=2, replace=False))
        factor = np.identity(d, dtype=object)
        if rng.integers(0, 2):
            factor[i, j] = int(rng.integers(-SHEAR_BOUND, SHEAR_BOUND, endpoint=True))
        else:
            factor[i, i] = factor[j, j] = 0
            factor[i, j] = -1
            factor[j, i] = 1
        matrix = factor @ matrix
    return tuple(tuple(int(entry) for entry in row) for row in matrix)


def apply_matrix(matrix: Tuple[Tuple[int, ...], ...], vector: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
    """
    Product matrix · vector with exact rationals
    """
    return tuple(sum((entry * value for entry, value in zip(row, vector)), Fraction(0)) for row in matrix)


def seeds(seed: int, count: int) -> List[int]:
    """
    count derived seeds, reproducible from seed
    """
    return [int(value) for value in make_rng(seed).integers(0, 2 ** 32, size=count)]
