"""Dense exact-coefficient polynomials and the triangle-driven constructions.

``basis_poly_first(m)`` threads the monomial x^m through both triangles,
first kind outside, second kind inside; the construction must come back out
as exactly x^m, coefficient for coefficient. ``residual_poly_first(m)`` is
the same double sum with the degree-m diagonal term split off, after which
everything cancels: the result must be the zero polynomial. The ``*_second``
variants swap the roles of the two kinds.

Coefficients are stored as ``Fraction`` even though the constructions above
only ever produce integers: evaluation at arbitrary rational points then
stays closed without a type change. Floats are rejected outright.
"""

from fractions import Fraction

from .engine import StirlingKind, shared_calculator
from .exact import check_index, format_rational, parse_rational

_FIRST = StirlingKind.FIRST_SIGNED
_SECOND = StirlingKind.SECOND


def _exact(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not exact; use Fraction, int, or a 'p/q' string")
    return Fraction(value)


class Poly:
    """Polynomial in the power basis; coeffs[i] multiplies x^i.

    Canonical form: trailing zero coefficients are trimmed, and the zero
    polynomial stores no coefficients at all. That makes "is this the zero
    polynomial" (equivalently, identity in x) a structural equality test.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "Poly":
        if power < 0:
            raise ValueError(f"power must be non-negative, got {power}")
        return cls([0] * power + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> Fraction:
        """Coefficient of x^power (zero beyond the stored degree)."""
        if power < 0:
            raise ValueError(f"power must be non-negative, got {power}")
        if power >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[power]

    def evaluate(self, x) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = _exact(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self._coeffs or not other._coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly([c * _exact(other) for c in self._coeffs])

    __rmul__ = __mul__

    def __repr__(self):
        if not self._coeffs:
            return "Poly()"
        return f"Poly([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def to_json_list(self) -> list:
        """Coefficients as "p/q" strings, lowest order first."""
        return [format_rational(c) for c in self._coeffs]

    @classmethod
    def from_json_list(cls, items) -> "Poly":
        return cls(parse_rational(item) for item in items)


def poly_eval(p: Poly, x) -> Fraction:
    """Exact Horner evaluation of p at x."""
    return p.evaluate(x)


def linear_coefficient(p: Poly) -> Fraction:
    """Coefficient of x^1, which equals dp/dx at x = 0."""
    return p.coefficient(1)


def _checked_order(value: int, calc, name: str) -> int:
    check_index(value, calc.index_cap, name)
    if value < 1:
        raise ValueError(f"{name} must be at least 1, got {value}")
    return value


def basis_poly_first(m: int, calc=None) -> Poly:
    """The double sum over j of s(m, j) times sum over k of S(j, k) x^k.

    Must equal the monomial x^m exactly.
    """
    calc = calc or shared_calculator()
    _checked_order(m, calc, "m")
    coeffs = [0] * (m + 1)
    for j in range(1, m + 1):
        outer = calc._value(_FIRST, m, j)
        for k in range(1, j + 1):
            coeffs[k] += outer * calc._value(_SECOND, j, k)
    return Poly(coeffs)


def basis_poly_second(j: int, calc=None) -> Poly:
    """Mirror of :func:`basis_poly_first` with the kinds swapped; must equal
    the monomial x^j exactly."""
    calc = calc or shared_calculator()
    _checked_order(j, calc, "j")
    coeffs = [0] * (j + 1)
    for m in range(1, j + 1):
        outer = calc._value(_SECOND, j, m)
        for k in range(1, m + 1):
            coeffs[k] += outer * calc._value(_FIRST, m, k)
    return Poly(coeffs)


def residual_poly_first(m: int, calc=None) -> Poly:
    """The basis construction with the degree-m diagonal term split off:

        sum_{j=1}^{m-1} s(m, j) sum_{k=1}^{j} S(j, k) x^k
          + s(m, m) sum_{k=1}^{m-1} S(m, k) x^k

    Everything cancels; the result must be the zero polynomial.
    """
    calc = calc or shared_calculator()
    _checked_order(m, calc, "m")
    coeffs = [0] * (m + 1)
    for j in range(1, m):
        outer = calc._value(_FIRST, m, j)
        for k in range(1, j + 1):
            coeffs[k] += outer * calc._value(_SECOND, j, k)
    diagonal = calc._value(_FIRST, m, m)
    for k in range(1, m):
        coeffs[k] += diagonal * calc._value(_SECOND, m, k)
    return Poly(coeffs)


def residual_poly_second(j: int, calc=None) -> Poly:
    """Mirror of :func:`residual_poly_first` with the kinds swapped; must be
    the zero polynomial."""
    calc = calc or shared_calculator()
    _checked_order(j, calc, "j")
    coeffs = [0] * (j + 1)
    for m in range(1, j):
        outer = calc._value(_SECOND, j, m)
        for k in range(1, m + 1):
            coeffs[k] += outer * calc._value(_FIRST, m, k)
    diagonal = calc._value(_SECOND, j, j)
    for k in range(1, j):
        coeffs[k] += diagonal * calc._value(_FIRST, j, k)
    return Poly(coeffs)
