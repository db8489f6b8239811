#!/usr/bin/env python3
"""
Sparse bivariate polynomials in (x1, x2).

``Poly2`` wraps a ``sympy.Poly`` over QQ (exact backend) or RR (float
backend) and keeps the term map (i, j) -> coefficient of x1^i x2^j in
plain Python numbers: ``Fraction`` on QQ, ``float`` on RR. Zero
coefficients are never stored, so the zero polynomial is the empty map.
"""

from fractions import Fraction

import sympy as sp
from sympy import QQ, RR

from .core import DegreeOverflow, MalformedInput, is_exact, to_scalar

DEFAULT_MAX_DEGREE = 32

X1, X2 = sp.symbols("x1 x2")
GENS = (X1, X2)


def _to_sympy(value):
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if is_exact(value):
        return sp.Integer(value)
    return sp.Float(float(value))


def _from_sympy(value, exact):
    if exact:
        value = sp.Rational(value)
        return Fraction(int(value.p), int(value.q))
    return float(value)


def _domain(values):
    return QQ if all(is_exact(v) for v in values) else RR


def _gen(var):
    if var not in (1, 2):
        raise ValueError(f"Variable index must be 1 or 2, got {var}")
    return GENS[var - 1]


class Poly2:
    """
    Immutable sparse polynomial in two variables.

    Args:
        terms: Mapping (i, j) -> coefficient
        max_degree: Bound on the total degree i + j of any stored term
    """

    __slots__ = ("_poly", "_terms", "max_degree")

    def __init__(self, terms=None, max_degree=DEFAULT_MAX_DEGREE):
        rep = {}
        for (i, j), coeff in (terms or {}).items():
            if i < 0 or j < 0:
                raise MalformedInput(f"Negative exponent in monomial ({i}, {j})")
            if coeff == 0:
                continue
            if i + j > max_degree:
                raise DegreeOverflow(
                    f"Monomial x1^{i} x2^{j} exceeds maximum degree {max_degree}"
                )
            rep[(int(i), int(j))] = coeff
        domain = _domain(rep.values())
        if rep:
            poly = sp.Poly.from_dict({k: _to_sympy(c) for k, c in rep.items()}, *GENS, domain=domain)
        else:
            poly = sp.Poly(0, *GENS, domain=domain)
        self._set(poly, max_degree)

    def _set(self, poly, max_degree):
        self.max_degree = max_degree
        self._poly = poly
        exact = poly.get_domain().is_Exact
        terms = {}
        for (i, j), coeff in poly.as_dict().items():
            if coeff == 0:
                continue
            if i + j > max_degree:
                raise DegreeOverflow(f"Degree {i + j} exceeds maximum {max_degree}")
            terms[(int(i), int(j))] = _from_sympy(coeff, exact)
        self._terms = terms

    @classmethod
    def _wrap(cls, poly, max_degree):
        out = cls.__new__(cls)
        out._set(poly, max_degree)
        return out

    # -- construction ------------------------------------------------------

    @classmethod
    def constant(cls, value, max_degree=DEFAULT_MAX_DEGREE):
        return cls({(0, 0): value}, max_degree)

    @classmethod
    def variable(cls, index, max_degree=DEFAULT_MAX_DEGREE):
        """The coordinate x1 (index 1) or x2 (index 2)."""
        if index not in (1, 2):
            raise ValueError(f"Variable index must be 1 or 2, got {index}")
        return cls({(1, 0) if index == 1 else (0, 1): Fraction(1)}, max_degree)

    @classmethod
    def from_monomials(cls, monomials, max_degree=DEFAULT_MAX_DEGREE):
        """
        Build a polynomial from [i, j, coefficient] triples.

        Repeated monomials are summed. Coefficients go through to_scalar,
        so "p/q" strings stay exact.
        """
        terms = {}
        for entry in monomials:
            try:
                i, j, raw = entry
            except (TypeError, ValueError):
                raise MalformedInput(f"Monomial must be [i, j, coefficient], got {entry!r}")
            if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
                raise MalformedInput(f"Exponents must be integers, got {entry!r}")
            key = (i, j)
            terms[key] = terms.get(key, 0) + to_scalar(raw)
        return cls(terms, max_degree)

    @classmethod
    def from_sympy(cls, expr, max_degree=DEFAULT_MAX_DEGREE):
        """Build from a sympy expression or Poly in the symbols x1, x2."""
        poly = expr if isinstance(expr, sp.Poly) else sp.Poly(sp.expand(expr), *GENS)
        if not poly.get_domain().is_Exact:
            poly = poly.set_domain(RR)
        elif poly.get_domain() != QQ:
            poly = poly.set_domain(QQ)
        return cls._wrap(poly, max_degree)

    def _new(self, poly):
        return Poly2._wrap(poly, self.max_degree)

    def _coerce(self, other):
        return other if isinstance(other, Poly2) else Poly2.constant(other, self.max_degree)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def as_poly(self):
        """The underlying sympy Poly in (x1, x2)."""
        return self._poly

    def as_expr(self):
        return self._poly.as_expr()

    def items(self):
        """Terms in graded lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))

    def coefficient(self, i, j):
        return self._terms.get((i, j), 0)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def is_exact(self):
        return self._poly.get_domain().is_Exact

    def is_zero(self, tol=0.0):
        """
        Zero test on the active backend.

        Exact polynomials must be identically zero; float polynomials pass
        when every coefficient is at most tol in magnitude.
        """
        if self.is_exact():
            return not self._terms
        return all(abs(c) <= tol for c in self._terms.values())

    def max_abs_coefficient(self):
        return max((abs(float(c)) for c in self._terms.values()), default=0.0)

    def to_list(self):
        """Canonical [i, j, coefficient] triples."""
        return [[i, j, c] for (i, j), c in self.items()]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        return self._new(self._poly + self._coerce(other)._poly)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self._poly)

    def __sub__(self, other):
        return self._new(self._poly - self._coerce(other)._poly)

    def __rsub__(self, other):
        return self._new(self._coerce(other)._poly - self._poly)

    def __mul__(self, other):
        other = self._coerce(other)
        degree = self.degree() + other.degree()
        if self._terms and other._terms and degree > self.max_degree:
            raise DegreeOverflow(f"Product degree {degree} exceeds maximum {self.max_degree}")
        return self._new(self._poly * other._poly)

    __rmul__ = __mul__

    def scale(self, factor):
        return self * factor

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {n!r}")
        if self.degree() > 0 and self.degree() * n > self.max_degree:
            raise DegreeOverflow(f"Power degree {self.degree() * n} exceeds maximum {self.max_degree}")
        return self._new(self._poly ** n)

    def __eq__(self, other):
        if isinstance(other, Poly2):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- calculus ----------------------------------------------------------

    def diff(self, var):
        """Partial derivative with respect to x1 (var=1) or x2 (var=2)."""
        return self._new(self._poly.diff(_gen(var)))

    def integrate(self, var):
        """Antiderivative with respect to one variable, zero integration constant."""
        return self._new(self._poly.integrate(_gen(var)))

    def eval(self, x1, x2):
        total = 0
        for (i, j), c in self._terms.items():
            total += c * x1 ** i * x2 ** j
        return total

    def chop(self, tol):
        """Drop float coefficients with magnitude at most tol."""
        if self.is_exact():
            return self
        return Poly2({k: c for k, c in self._terms.items() if abs(c) > tol}, self.max_degree)

    def free_of(self, var):
        """Keep only the terms free of x1 (var=1) or of x2 (var=2)."""
        index = 0 if var == 1 else 1
        kept = {k: c for k, c in self._poly.as_dict().items() if k[index] == 0}
        if not kept:
            return self._new(sp.Poly(0, *GENS, domain=self._poly.get_domain()))
        return self._new(sp.Poly.from_dict(kept, *GENS, domain=self._poly.get_domain()))

    def compose_affine(self, g):
        """
        Substitute x -> R(theta) x + (a, b) for the motion g.

        The result is exact whenever self and g are.
        """
        c, s = g.cos_sin()
        a, b = g.a, g.b
        exact = self.is_exact() and all(is_exact(v) for v in (c, s, a, b))
        c, s, a, b = (_to_sympy(v) for v in (c, s, a, b))
        moved = self._poly.as_expr().xreplace({X1: c * X1 - s * X2 + a, X2: s * X1 + c * X2 + b})
        poly = sp.Poly(sp.expand(moved), *GENS, domain=QQ if exact else RR)
        return self._new(poly)

    # -- display -----------------------------------------------------------

    def __repr__(self):
        return f"Poly2({self.items()!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            mono = "*".join(
                f"x{n}^{e}" if e > 1 else f"x{n}" for n, e in ((1, i), (2, j)) if e
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_diff(p, var):
    return p.diff(var)


def poly_eval(p, x):
    """Evaluate at a Point2."""
    return p.eval(x.x1, x.x2)
