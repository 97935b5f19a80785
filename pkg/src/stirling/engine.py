"""Stirling number triangles of both kinds.

Rows are filled by the classical recurrences

    first kind (signed)   s(n+1, m) = s(n, m-1) - n * s(n, m)
    second kind           S(n+1, m) = m * S(n, m) + S(n, m-1)

anchored at s(0, 0) = S(0, 0) = 1, with every entry outside the triangle
(m > n, or m = 0 with n > 0) equal to zero. The unsigned first kind is the
sign-stripped view |s(n, m)| = (-1)^(n-m) s(n, m); it is derived from the
signed triangle, never recomputed by a second recurrence.

:class:`StirlingCalculator` memoizes rows per kind, growing row at a time and
never evicting; triangles at the scales this library targets are tiny next to
memory. Rows are immutable tuples appended under a lock, so concurrent
readers need no synchronization once a row exists.

The inter-kind conversions rebuild either kind from the other through
alternating binomial-weighted sums over the opposite triangle; they must
agree with the recurrence-built values exactly, which makes them the first
whole-triangle consistency check.
"""

import enum
import threading
from math import comb

from .exact import DEFAULT_INDEX_CAP, check_index, dump_json


class StirlingKind(enum.Enum):
    """Triangle selector; values double as the CLI tokens."""

    FIRST_SIGNED = "first"
    FIRST_UNSIGNED = "first-unsigned"
    SECOND = "second"

    @classmethod
    def from_token(cls, token: str) -> "StirlingKind":
        for kind in cls:
            if kind.value == token:
                return kind
        valid = ", ".join(k.value for k in cls)
        raise ValueError(f"unknown triangle kind {token!r}; expected one of: {valid}")


class Triangle:
    """Immutable snapshot of rows 0..max_row of one triangle kind."""

    __slots__ = ("kind", "rows")

    def __init__(self, kind: StirlingKind, rows):
        self.kind = kind
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries, got {len(row)}")

    @property
    def max_row(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def value(self, n: int, m: int) -> int:
        """Entry (n, m); zero outside the triangle. n must be a stored row."""
        if n < 0 or m < 0:
            raise ValueError(f"indices must be non-negative, got n={n}, m={m}")
        if n >= len(self.rows):
            raise ValueError(f"row {n} is not stored (max_row={self.max_row})")
        if m > n:
            return 0
        return self.rows[n][m]

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.kind is other.kind and self.rows == other.rows

    def __hash__(self):
        return hash((self.kind, self.rows))

    def __repr__(self):
        return f"Triangle({self.kind.value!r}, rows=0..{self.max_row})"

    def to_csv(self) -> str:
        """Ragged comma-separated exact decimals, one row per line, no header."""
        return "\n".join(",".join(str(v) for v in row) for row in self.rows) + "\n"

    def to_lists(self) -> list:
        """Rows as lists of exact decimal strings (the JSON shape)."""
        return [[str(v) for v in row] for row in self.rows]

    def to_json(self) -> str:
        return dump_json(self.to_lists())


def _next_row(kind: StirlingKind, prev: tuple, n: int) -> tuple:
    # prev is row n of a base kind; returns row n+1
    row = [0] * (n + 2)
    if kind is StirlingKind.FIRST_SIGNED:
        for m in range(1, n + 2):
            above = prev[m] if m <= n else 0
            row[m] = prev[m - 1] - n * above
    else:
        for m in range(1, n + 2):
            above = prev[m] if m <= n else 0
            row[m] = m * above + prev[m - 1]
    return tuple(row)


class StirlingCalculator:
    """Memoizing point-query facade over both triangles.

    All public index arguments are validated against ``index_cap``. Reads of
    already-built rows are lock-free; growth happens under a lock, appending
    immutable tuples, so values returned to concurrent callers are always
    consistent with the sequential ones.
    """

    def __init__(self, index_cap: int = DEFAULT_INDEX_CAP):
        self.index_cap = index_cap
        self._rows = {
            StirlingKind.FIRST_SIGNED: [(1,)],
            StirlingKind.SECOND: [(1,)],
        }
        self._lock = threading.Lock()

    def value(self, kind: StirlingKind, n: int, m: int) -> int:
        """Stirling number of the given kind at (n, m); zero outside the
        triangle, memoized inside it."""
        check_index(n, self.index_cap, "n")
        check_index(m, self.index_cap, "m")
        return self._value(kind, n, m)

    def _value(self, kind: StirlingKind, n: int, m: int) -> int:
        # The single read path. Everything in the package funnels through
        # here, which is what lets PerturbedCalculator offset one entry
        # for every consumer at once. No cap check: internal callers may
        # legitimately reach derived indices past the public cap.
        if kind is StirlingKind.FIRST_UNSIGNED:
            signed = self._value(StirlingKind.FIRST_SIGNED, n, m)
            return -signed if (n - m) % 2 else signed
        if m > n or (n > 0 and m == 0):
            return 0
        return self._stored_rows(kind, n)[n][m]

    def _stored_rows(self, kind: StirlingKind, upto: int) -> list:
        rows = self._rows[kind]
        if len(rows) <= upto:
            with self._lock:
                while len(rows) <= upto:
                    rows.append(_next_row(kind, rows[-1], len(rows) - 1))
        return rows

    def triangle(self, kind: StirlingKind, max_row: int) -> Triangle:
        """Snapshot rows 0..max_row of one kind."""
        check_index(max_row, self.index_cap, "max_row")
        rows = [
            [self._value(kind, n, m) for m in range(n + 1)]
            for n in range(max_row + 1)
        ]
        return Triangle(kind, rows)

    def first_from_second(self, n: int, m: int) -> int:
        """Signed first-kind value rebuilt from the second-kind triangle:

            s(n, m) = sum_{k=0}^{n-m} (-1)^k C(n-1+k, n-m+k) C(2n-m, n-m-k) S(n-m+k, k)

        Requires 1 <= m <= n. Must equal value(FIRST_SIGNED, n, m) exactly.
        """
        self._check_conversion_args(n, m)
        total = 0
        for k in range(n - m + 1):
            term = (
                comb(n - 1 + k, n - m + k)
                * comb(2 * n - m, n - m - k)
                * self._value(StirlingKind.SECOND, n - m + k, k)
            )
            total += -term if k % 2 else term
        return total

    def second_from_first(self, n: int, m: int) -> int:
        """Second-kind value rebuilt from the signed first-kind triangle;
        the mirror image of :meth:`first_from_second`."""
        self._check_conversion_args(n, m)
        total = 0
        for k in range(n - m + 1):
            term = (
                comb(n - 1 + k, n - m + k)
                * comb(2 * n - m, n - m - k)
                * self._value(StirlingKind.FIRST_SIGNED, n - m + k, k)
            )
            total += -term if k % 2 else term
        return total

    def _check_conversion_args(self, n: int, m: int):
        check_index(n, self.index_cap, "n")
        check_index(m, self.index_cap, "m")
        if m < 1 or m > n:
            raise ValueError(f"conversion requires 1 <= m <= n, got n={n}, m={m}")


class PerturbedCalculator(StirlingCalculator):
    """Calculator whose reads of exactly one stored entry are offset by delta.

    Fault injector: an identity suite that still passes against a corrupted
    triangle would be vacuous, so tests (and ``verify --inject-fault``) use
    this to prove the checkers can fail.
    """

    def __init__(self, kind: StirlingKind, n: int, m: int, delta: int = 1,
                 index_cap: int = DEFAULT_INDEX_CAP):
        super().__init__(index_cap=index_cap)
        if kind is StirlingKind.FIRST_UNSIGNED:
            raise ValueError("perturb a stored kind: first or second")
        check_index(n, index_cap, "n")
        check_index(m, index_cap, "m")
        if m > n:
            raise ValueError(f"(n={n}, m={m}) lies outside the triangle")
        if delta == 0:
            raise ValueError("delta must be nonzero")
        self.target = (kind, n, m)
        self.delta = delta

    def _value(self, kind: StirlingKind, n: int, m: int) -> int:
        value = super()._value(kind, n, m)
        if (kind, n, m) == self.target:
            value += self.delta
        return value


_SHARED = StirlingCalculator()


def shared_calculator() -> StirlingCalculator:
    """The process-wide default calculator (default index cap)."""
    return _SHARED


def stirling(kind: StirlingKind, n: int, m: int) -> int:
    return _SHARED.value(kind, n, m)


def build_triangle(kind: StirlingKind, max_row: int) -> Triangle:
    return _SHARED.triangle(kind, max_row)


def first_from_second(n: int, m: int) -> int:
    return _SHARED.first_from_second(n, m)


def second_from_first(n: int, m: int) -> int:
    return _SHARED.second_from_first(n, m)
