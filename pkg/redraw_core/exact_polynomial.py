"""
Module implementing exact multivariate polynomials with integer coefficients in the normal entries
n_{h,k}, on top of sympy sparse polynomial rings.

Variables are ordered n_{h0,1} < n_{h0,2} < ... < n_{h1,1} < ..., following the hyperplane order of
the geometry, and monomials are compared in graded lexicographic order for that variable order
(the largest variable decides first). For d = 2, n_{h,1} and n_{h,2} print as f_{h} and g_{h}.
"""
import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from sympy import Symbol
from sympy.polys.domains import ZZ
from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing

from redraw_core.exceptions import RedrawError
from redraw_core.pydantic_utils import CustomFrozen

Monomial = Tuple[int, ...]


class NormalRing(CustomFrozen):
    """
    Polynomial ring Z[n_{h,k}] attached to an ordered list of hyperplanes in dimension d.

    Attributes are:
        - hyperplanes: hyperplane labels, in the global hyperplane order
        - d: ambient dimension
        - ring: the underlying sympy sparse polynomial ring
    """
    hyperplanes: Tuple[str, ...]
    d: int
    ring: PolyRing

    def variable_index(self, hyperplane: int, k: int) -> int:
        """
        Generator position of n_{h,k}, hyperplane being a position and k in 1..d
        """
        return hyperplane * self.d + k - 1

    def variable(self, hyperplane: int, k: int) -> PolyElement:
        """
        The variable n_{h,k}
        """
        return self.ring.gens[self.variable_index(hyperplane, k)]

    def variable_name(self, index: int) -> str:
        """
        Printed name of the generator at position index
        """
        hyperplane, k = divmod(index, self.d)
        label = self.hyperplanes[hyperplane]
        if self.d == 2:
            return f'{"fg"[k]}_{{{label}}}'
        return f'n_{{{label},{k + 1}}}'

    @property
    def zero(self) -> PolyElement:
        return self.ring.zero

    @property
    def one(self) -> PolyElement:
        return self.ring.one

    def constant(self, value: int) -> PolyElement:
        """
        The constant polynomial value
        """
        return self.ring(int(value))


@lru_cache(maxsize=64)
def normal_ring(hyperplanes: Tuple[str, ...], d: int) -> NormalRing:
    """
    Cached NormalRing for the given hyperplane labels and dimension
    """
    if d < 1:
        raise RedrawError(f'dimension must be at least 1, got {d}')
    names = [f'n_{{{label},{k}}}' for label in hyperplanes for k in range(1, d + 1)]
    ring = PolyRing([Symbol(name) for name in names], ZZ, 'grlex')
    return NormalRing(hyperplanes=tuple(hyperplanes), d=d, ring=ring)


def monomial_key(monomial: Monomial) -> Tuple[int, Monomial]:
    """
    Sort key of the global graded lexicographic order: total degree first, then exponents read
    from the largest variable (last generator) down to the smallest.
    """
    return sum(monomial), tuple(reversed(monomial))


def leading_term(p: PolyElement) -> Tuple[Monomial, int]:
    """
    Leading monomial and coefficient of a nonzero polynomial in the global order
    """
    if not p:
        raise RedrawError('the zero polynomial has no leading term')
    monomial = max(p.keys(), key=monomial_key)
    return monomial, int(p[monomial])


def sorted_terms(p: PolyElement) -> List[Tuple[Monomial, int]]:
    """
    Terms of p sorted descending in the global order
    """
    return [(monomial, int(p[monomial])) for monomial in sorted(p.keys(), key=monomial_key,
                                                                 reverse=True)]


def poly_canonicalize(p: PolyElement) -> Tuple[PolyElement, Fraction]:
    """
    Split p as c·q, q primitive with positive leading coefficient. Returns (q, c).
    """
    if not p:
        raise RedrawError('cannot canonicalize the zero polynomial')
    content = math.gcd(*(int(coefficient) for coefficient in p.values()))
    if leading_term(p)[1] < 0:
        content = -content
    return p.quo_ground(content), Fraction(content)


def total_degree(p: PolyElement) -> int:
    """
    Total degree of p, -1 for the zero polynomial
    """
    return max((sum(monomial) for monomial in p.keys()), default=-1)


def coordinate_degrees(p: PolyElement, nring: NormalRing) -> Set[Tuple[int, ...]]:
    """
    Distinct tuples (degree in n_{.,1}, ..., degree in n_{.,d}) over the monomials of p
    """
    return {tuple(sum(monomial[k::nring.d]) for k in range(nring.d)) for monomial in p.keys()}


def hyperplane_degrees(p: PolyElement, nring: NormalRing) -> Dict[str, int]:
    """
    Largest degree of p in the entries n_{h,1}, ..., n_{h,d} of each hyperplane h
    """
    return {h: max((sum(monomial[i * nring.d:(i + 1) * nring.d]) for monomial in p.keys()), default=0)
            for i, h in enumerate(nring.hyperplanes)}


def is_homogeneous(p: PolyElement) -> bool:
    """
    True when all monomials of p share the same total degree
    """
    return len({sum(monomial) for monomial in p.keys()}) <= 1


def polynomial_ratio(p: PolyElement, q: PolyElement) -> Optional[Fraction]:
    """
    The rational λ with p = λ·q, or None when p and q are not proportional (or one is zero)
    """
    if not p or not q or set(p.keys()) != set(q.keys()):
        return None
    monomial = next(iter(p.keys()))
    ratio = Fraction(int(p[monomial]), int(q[monomial]))
    if all(Fraction(int(p[m]), int(q[m])) == ratio for m in p.keys()):
        return ratio
    return None


def evaluate_polynomial(p: PolyElement, values: Sequence[Fraction]) -> Fraction:
    """
    Exact value of p when the generator at position i takes values[i]
    """
    total = Fraction(0)
    for monomial, coefficient in p.items():
        term = Fraction(int(coefficient))
        for position, exponent in enumerate(monomial):
            if exponent:
                term *= Fraction(values[position]) ** exponent
        total += term
    return total


def format_polynomial(p: PolyElement, nring: NormalRing) -> str:
    """
    Canonical text of p: monomials sorted descending in the global order, signed integer
    coefficients, factors in increasing variable order joined by '*', powers written '^k'.
    """
    if not p:
        return '0'
    chunks = []
    for position, (monomial, coefficient) in enumerate(sorted_terms(p)):
        factors = [nring.variable_name(index) + (f'^{exponent}' if exponent > 1 else '')
                   for index, exponent in enumerate(monomial) if exponent]
        magnitude = abs(coefficient)
        body = '*'.join(([str(magnitude)] if magnitude != 1 or not factors else []) + factors)
        if position == 0:
            chunks.append(f'-{body}' if coefficient < 0 else body)
        else:
            chunks.append(f'{"-" if coefficient < 0 else "+"} {body}')
    return ' '.join(chunks)


def parse_polynomial(text: str, nring: NormalRing) -> PolyElement:
    """
    Parse the canonical text produced by format_polynomial (any term order, optional spaces)
    """
    names = {nring.variable_name(index): index for index in range(nring.ring.ngens)}
    alternatives = '|'.join(re.escape(name) for name in sorted(names, key=len, reverse=True))
    token_pattern = re.compile(rf'\s*(?:(?P<var>{alternatives})|(?P<int>\d+)|(?P<op>[+\-*^]))')
    tokens: List[Tuple[str, Any]] = []
    position = 0
    stripped = text.strip()
    while position < len(stripped):
        if not (match := token_pattern.match(stripped, position)):
            raise RedrawError(f'unexpected text in polynomial at {stripped[position:position + 12]!r}')
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        position = match.end()
    return _parse_sum(tokens, names, nring)


def _parse_sum(tokens: List[Tuple[str, Any]], names: Dict[str, int], nring: NormalRing) -> PolyElement:
    """
    Parse a token stream of signed monomials
    """
    result = nring.zero
    index = 0
    while index < len(tokens):
        if index and tokens[index] not in (('op', '+'), ('op', '-')):
            raise RedrawError(f'missing operator before {tokens[index][1]!r}')
        sign = 1
        while index < len(tokens) and tokens[index] in (('op', '+'), ('op', '-')):
            sign = -sign if tokens[index][1] == '-' else sign
            index += 1
        term = nring.constant(sign)
        expect_factor = True
        while index < len(tokens) and expect_factor:
            kind, value = tokens[index]
            if kind == 'int':
                factor = nring.constant(int(value))
            elif kind == 'var':
                factor = nring.ring.gens[names[value]]
            else:
                raise RedrawError(f'unexpected {value!r} in polynomial')
            index += 1
            if index < len(tokens) and tokens[index] == ('op', '^'):
                if index + 1 >= len(tokens) or tokens[index + 1][0] != 'int':
                    raise RedrawError('exponent expected after ^')
                factor = factor ** int(tokens[index + 1][1])
                index += 2
            term *= factor
            expect_factor = index < len(tokens) and tokens[index] == ('op', '*')
            index += 1 if expect_factor else 0
        result += term
    return result
