"""Exact rational scalars and dense univariate polynomials.

Scalars are ``fractions.Fraction`` (arbitrary precision, always in lowest
terms, positive denominator).  Polynomials are immutable dense coefficient
vectors in ascending degree with no trailing zeros; the zero polynomial is
the empty vector and its degree is -inf, so deg(p*q) = deg(p) + deg(q) holds
without special cases.

Determinants of polynomial matrices use fraction-free Bareiss elimination
(the intermediate divisions are exact), which keeps coefficient growth
polynomial instead of the exponential blow-up of cofactor expansion.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import EndpointRoot, ZeroPolynomial

Rational = Fraction
Scalar = Union[int, Fraction]


def rational_to_str(q: Scalar) -> str:
    """Serialize a rational as "p/q", omitting the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    """Parse "p/q" or a decimal string; decimal conversion is exact."""
    return Fraction(s.strip())


def falling_factorial(x: Scalar, l: int) -> Fraction:
    """x (x-1) ... (x-l+1); the empty product (l = 0) is 1."""
    if l < 0:
        raise ValueError("falling factorial needs a nonnegative length")
    out = Fraction(1)
    x = Fraction(x)
    for i in range(l):
        out *= x - i
    return out


def _lcm_denominators(coeffs: Sequence[Fraction]) -> int:
    out = 1
    for c in coeffs:
        out = out * c.denominator // math.gcd(out, c.denominator)
    return out


class RatPoly:
    """Immutable univariate polynomial in z over the rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("RatPoly is immutable")

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self):
        """Degree as int; -inf for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else float("-inf")

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        """Coefficient of z**k (0 beyond the stored degree)."""
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "RatPoly":
        other = _coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly([-c for c in self._coeffs])

    def __sub__(self, other) -> "RatPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly([c * other for c in self._coeffs])
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return RatPoly()
        # Clear denominators once, convolve over the integers, and rebuild
        # fractions at the end: one gcd per output coefficient instead of
        # one per product.
        da = _lcm_denominators(a)
        db = _lcm_denominators(b)
        ia = [(c * da).numerator for c in a]
        ib = [(c * db).numerator for c in b]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        den = da * db
        return RatPoly([Fraction(c, den) for c in out])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "RatPoly"):
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._coeffs)
        d = other._coeffs
        dn = len(d) - 1
        lead = d[-1]
        q = [Fraction(0)] * max(0, len(r) - dn)
        for i in range(len(r) - 1, dn - 1, -1):
            c = r[i] / lead
            if c:
                q[i - dn] = c
                for j, dc in enumerate(d):
                    r[i - dn + j] -= c * dc
            r[i] = Fraction(0)
        return RatPoly(q), RatPoly(r)

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        """Quotient when the division is exact; raises otherwise."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ArithmeticError("polynomial division is not exact")
        return q

    # -- calculus and evaluation --------------------------------------------

    def derivative(self, order: int = 1) -> "RatPoly":
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        cs = self._coeffs
        for _ in range(order):
            cs = tuple(cs[i] * i for i in range(1, len(cs)))
        return RatPoly(cs)

    def __call__(self, x: Scalar) -> Fraction:
        if isinstance(x, float):
            raise TypeError("use float_eval for floating-point evaluation")
        x = Fraction(x)
        out = Fraction(0)
        for c in reversed(self._coeffs):
            out = out * x + c
        return out

    def float_coeffs(self) -> list:
        return [float(c) for c in self._coeffs]

    def float_eval(self, x: float) -> float:
        out = 0.0
        for c in reversed(self._coeffs):
            out = out * x + float(c)
        return out

    def reflected(self) -> "RatPoly":
        """The polynomial p(-z)."""
        return RatPoly([c if i % 2 == 0 else -c for i, c in enumerate(self._coeffs)])

    # -- serialization and comparison ---------------------------------------

    def to_json(self) -> list:
        return [rational_to_str(c) for c in self._coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "RatPoly":
        return cls([rational_from_str(s) for s in data])

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        if not self._coeffs:
            return "RatPoly(0)"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(rational_to_str(c))
            elif i == 1:
                terms.append(f"{rational_to_str(c)}*z")
            else:
                terms.append(f"{rational_to_str(c)}*z^{i}")
        return "RatPoly(" + " + ".join(terms) + ")"


def _coerce(v) -> RatPoly:
    if isinstance(v, RatPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return RatPoly([v])
    raise TypeError(f"cannot coerce {type(v).__name__} to RatPoly")


ZERO = RatPoly()
ONE = RatPoly([1])
X = RatPoly([0, 1])
ONE_MINUS_Z2 = RatPoly([1, 0, -1])


def derivative(p: RatPoly, order: int) -> RatPoly:
    """Exact order-th derivative with respect to z."""
    return p.derivative(order)


def det_bareiss(rows: Sequence[Sequence[RatPoly]]) -> RatPoly:
    """Determinant of a square polynomial matrix, fraction-free Bareiss.

    The determinant of the empty matrix is 1.  Zero pivots are handled by
    row swaps; a fully zero pivot column short-circuits to 0.
    """
    m = len(rows)
    if m == 0:
        return ONE
    a = [[_coerce(e) for e in row] for row in rows]
    for row in a:
        if len(row) != m:
            raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = ONE
    for k in range(m - 1):
        if a[k][k].is_zero:
            for i in range(k + 1, m):
                if not a[i][k].is_zero:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = a[k][k]
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num if k == 0 else num.exact_div(prev)
            a[i][k] = ZERO
        prev = pivot
    d = a[m - 1][m - 1]
    return -d if sign < 0 else d


def det_rational(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant of a square rational matrix (Gaussian elimination, exact)."""
    m = len(rows)
    if m == 0:
        return Fraction(1)
    a = [[Fraction(e) for e in row] for row in rows]
    sign = 1
    for k in range(m):
        if a[k][k] == 0:
            for i in range(k + 1, m):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, m):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, m):
                    a[i][j] -= f * a[k][j]
    out = Fraction(sign)
    for k in range(m):
        out *= a[k][k]
    return out


def wronskian(ps: Sequence[RatPoly]) -> RatPoly:
    """Wronskian of a family: det of the matrix whose row i holds the
    (i-1)-th derivatives."""
    if not ps:
        raise ValueError("wronskian of an empty family")
    rows = [list(ps)]
    for _ in range(len(ps) - 1):
        rows.append([p.derivative() for p in rows[-1]])
    return det_bareiss(rows)


def _primitive(p: RatPoly) -> RatPoly:
    """Scale by a positive rational to primitive integer coefficients."""
    if p.is_zero:
        return p
    den = _lcm_denominators(p.coeffs)
    ints = [(c * den).numerator for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return RatPoly([Fraction(v, g) for v in ints])


def sturm_root_count(p: RatPoly, a: Scalar, b: Scalar) -> int:
    """Number of distinct real roots of p in the open interval (a, b).

    Uses the canonical Sturm chain (which counts distinct roots even in
    the presence of multiplicities).  The endpoints must not be roots.
    """
    if p.is_zero:
        raise ZeroPolynomial("root counting on the zero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if p(a) == 0 or p(b) == 0:
        raise EndpointRoot(f"polynomial vanishes at an endpoint of ({a}, {b})")
    chain = [_primitive(p)]
    d = p.derivative()
    if not d.is_zero:
        chain.append(_primitive(d))
        while chain[-1].degree > 0:
            _, r = divmod(chain[-2], chain[-1])
            if r.is_zero:
                break
            chain.append(_primitive(-r))

    def variations(x: Fraction) -> int:
        signs = [q(x) for q in chain]
        signs = [s for s in signs if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))

    return variations(a) - variations(b)
