"""Exact arithmetic substrate: index guard rails, binomials, factorials,
and canonical text forms.

Integers are plain ``int`` and rationals are ``fractions.Fraction``, so every
operation in this package is exact for operands of any size. What this module
adds on top is a configurable cap on index-like arguments (a rail against
typo-sized requests allocating forever, not a correctness bound) and the
canonical string and JSON forms used by all machine output.
"""

import json
import math
import sys
from fractions import Fraction

DEFAULT_INDEX_CAP = 10_000

# CPython's int<->str conversion rail (default 4300 digits) sits far below
# the values this library legitimately serializes; raise it once, without
# ever lowering a more generous or unlimited setting.
_MIN_STR_DIGITS = 2_000_000
if hasattr(sys, "set_int_max_str_digits"):
    _current = sys.get_int_max_str_digits()
    if _current != 0 and _current < _MIN_STR_DIGITS:
        sys.set_int_max_str_digits(_MIN_STR_DIGITS)


class ResourceLimitError(Exception):
    """A guard rail was hit: an index cap or an enumeration budget."""


class IndexLimitError(ResourceLimitError):
    """An index argument exceeded the configured cap."""

    def __init__(self, name: str, value: int, cap: int):
        super().__init__(f"{name}={value} exceeds the index cap of {cap}")
        self.name = name
        self.value = value
        self.cap = cap


def check_index(value: int, cap: int = DEFAULT_INDEX_CAP, name: str = "index") -> int:
    """Validate one non-negative, capped index argument and return it."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    if value > cap:
        raise IndexLimitError(name, value, cap)
    return value


def binomial(n: int, k: int, cap: int = DEFAULT_INDEX_CAP) -> int:
    """C(n, k), exactly. k outside 0..n yields 0 rather than an error, so
    sums with unconditional bounds can be written without edge guards."""
    check_index(n, cap, "n")
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError(f"k must be an int, got {type(k).__name__}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int, cap: int = DEFAULT_INDEX_CAP) -> int:
    """n!, exactly, with 0! = 1."""
    check_index(n, cap, "n")
    return math.factorial(n)


def _ascii_minus(text: str) -> str:
    # tolerate a typographic minus on input; output is always ASCII '-'
    return text.replace("−", "-")


def format_int(value: int) -> str:
    """Exact decimal form with ASCII minus sign."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected int, got {type(value).__name__}")
    return str(value)


def parse_int(text: str) -> int:
    """Inverse of :func:`format_int`; accepts a typographic minus too."""
    return int(_ascii_minus(text.strip()))


def format_rational(value) -> str:
    """Exact "p/q" form, with "/q" omitted when the denominator is 1."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass Fraction or int")
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a normalized Fraction."""
    return Fraction(_ascii_minus(text.strip()))


def dump_json(data) -> str:
    """Canonical JSON text: two-space indent, insertion key order, ASCII only.

    Nothing we emit contains floats, so parsing the output and dumping it
    again through this function is byte-identical.
    """
    return json.dumps(data, indent=2, ensure_ascii=True)
