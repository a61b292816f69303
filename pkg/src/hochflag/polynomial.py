"""Exact univariate polynomial arithmetic over arbitrary-precision integers.

Two layers:

* a low-level layer operating on plain coefficient tuples (ascending
  degree, no trailing zeros, the zero polynomial is the empty tuple),
  used by performance-sensitive inner loops;
* the `IntPolynomial` wrapper class used by the public API.

Interpolation runs in exact rational arithmetic and insists on an integral
result: every polynomial reconstructed here counts points of some finite
set, so a fractional coefficient signals either too few sample points for
the true degree or a broken counting routine, never valid data.
"""

from fractions import Fraction
from math import gcd

from .errors import NonIntegralInterpolationError

Coeffs = tuple[int, ...]


def trim(coeffs) -> Coeffs:
    """Strip trailing zeros, returning the canonical coefficient tuple."""
    c = tuple(coeffs)
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return c[:i]


def padd(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, v in enumerate(b):
        out[k] += v
    return trim(out)


def pneg(a: Coeffs) -> Coeffs:
    return tuple(-x for x in a)


def psub(a: Coeffs, b: Coeffs) -> Coeffs:
    return padd(a, pneg(b))


def pshift(a: Coeffs, k: int = 1) -> Coeffs:
    """Multiply by q^k."""
    return (0,) * k + a if a else ()


def pscale(a: Coeffs, c: int) -> Coeffs:
    return tuple(x * c for x in a) if c else ()


def pmul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    # top coefficient is a nonzero product of nonzero integers
    return tuple(out)


def peval(a: Coeffs, x: int) -> int:
    """Horner evaluation, exact."""
    r = 0
    for c in reversed(a):
        r = r * x + c
    return r


class IntPolynomial:
    """Polynomial in one variable q with integer coefficients.

    Immutable; coefficient k is the coefficient of q^k.

    >>> p = IntPolynomial([0, 1, 0, 1])
    >>> p
    IntPolynomial('q^3 + q')
    >>> p.evaluate(2)
    10
    >>> (p * IntPolynomial.one()).degree
    3
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        c = trim(coeffs)
        for x in c:
            if not isinstance(x, int):
                raise ValueError(f"coefficients must be integers, got {x!r}")
        self._coeffs = c

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def q(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        if k < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls((0,) * k + (c,))

    @property
    def coefficients(self) -> Coeffs:
        """Coefficients in ascending degree, no trailing zeros."""
        return self._coeffs

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == trim((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(padd(self._coeffs, other._coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(psub(self._coeffs, other._coeffs))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(pneg(self._coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(pmul(self._coeffs, other._coeffs))

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial(pscale(self._coeffs, c))

    def evaluate(self, x: int) -> int:
        return peval(self._coeffs, x)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "q" if k == 1 else f"q^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"


def lagrange_interpolate(points) -> IntPolynomial:
    """Unique polynomial of degree < #points through the given (x, y) pairs.

    Runs in exact rational arithmetic; raises
    NonIntegralInterpolationError if the result has a fractional
    coefficient, and ValueError on repeated abscissas or empty input.
    The result is re-evaluated at every input abscissa before returning.
    """
    pts = [(int(x), int(y)) for x, y in points]
    if not pts:
        raise ValueError("interpolation needs at least one point")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissas must be pairwise distinct")

    acc = [Fraction(0)] * len(pts)
    for xi, yi in pts:
        # numerator polynomial prod_{j != i} (q - xj), denominator prod (xi - xj)
        num = [1]
        denom = 1
        for xj, _ in pts:
            if xj == xi:
                continue
            nxt = [0] * (len(num) + 1)
            for k, c in enumerate(num):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            num = nxt
            denom *= xi - xj
        f = Fraction(yi, denom)
        for k, c in enumerate(num):
            acc[k] += f * c

    coeffs = []
    for c in acc:
        if c.denominator != 1:
            raise NonIntegralInterpolationError(
                f"non-integer coefficient {c} in interpolation through {pts}"
            )
        coeffs.append(int(c))
    poly = IntPolynomial(coeffs)
    for xi, yi in pts:
        if poly.evaluate(xi) != yi:
            raise AssertionError(
                f"interpolation self-check failed at x={xi}: "
                f"{poly.evaluate(xi)} != {yi}"
            )
    return poly


def content(a: Coeffs) -> int:
    """Gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for x in a:
        g = gcd(g, x)
    return g
