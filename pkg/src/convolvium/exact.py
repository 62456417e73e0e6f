"""Exact arbitrary-precision combinatorics.

Every quantity here is a plain Python int, so precision is unbounded. The
number families with fractional definitions (Catalan, super Catalan, Gessel)
are evaluated numerator-first and finished with a single exact division:
integrality is a theorem for each of them, so a leftover remainder is treated
as evidence of a bug or a violated claim and raises loudly instead of
rounding.
"""

from __future__ import annotations

import math
import sys
import threading
from functools import lru_cache

DEFAULT_PASCAL_CAP = 4096


class NonDivisible(ArithmeticError):
    """Exact division failed; carries the dividend, divisor, and remainder."""

    def __init__(self, a: int, b: int, remainder: int):
        super().__init__(f"{b} does not divide {a} (remainder {remainder})")
        self.a = a
        self.b = b
        self.remainder = remainder


def exact_div(a: int, b: int) -> int:
    """a / b when b divides a exactly; NonDivisible otherwise."""
    if b == 0:
        raise ZeroDivisionError("exact division by zero")
    q, r = divmod(a, b)
    if r:
        raise NonDivisible(a, b, r)
    return q


def lcm(a: int, b: int) -> int:
    """Least common multiple of two positive integers."""
    if a <= 0 or b <= 0:
        raise ValueError(f"lcm requires positive arguments, got {a} and {b}")
    return math.lcm(a, b)


class BinomialCache:
    """Append-only table of Pascal's triangle rows.

    Rows are immutable tuples built by addition only (no division), appended
    in order, and never replaced, so readers may index any published row
    without taking the growth lock. Memory is quadratic in the largest row
    requested; the cap bounds that.
    """

    def __init__(self, cap: int = DEFAULT_PASCAL_CAP):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        self.cap = cap
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    @property
    def rows_published(self) -> int:
        return len(self._rows)

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError("row index must be non-negative")
        if n > self.cap:
            raise ValueError(f"row {n} exceeds the cache cap {self.cap}")
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                mid = tuple(prev[i - 1] + prev[i] for i in range(1, len(prev)))
                self._rows.append((1, *mid, 1))
        return self._rows[n]


_PASCAL = BinomialCache()


def binomial(n: int, k: int) -> int:
    """binomial(n, k) with the vanishing convention: 0 when k < 0 or k > n.

    Served from the shared Pascal-row cache up to its cap, by the exact
    multiplicative formula (math.comb) beyond it.
    """
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    if n <= _PASCAL.cap:
        return _PASCAL.row(n)[k]
    return math.comb(n, k)


_central = [1]
_central_lock = threading.Lock()


def central_binomial(n: int) -> int:
    """binomial(2n, n) via the exact quotient recurrence c_k = c_{k-1}(4k-2)/k.

    Kept separate from the Pascal cache so sweeps that need central binomials
    for n in the hundreds do not materialize thousand-entry rows.
    """
    if n < 0:
        raise ValueError(f"central_binomial requires n >= 0, got n={n}")
    if n < len(_central):
        return _central[n]
    with _central_lock:
        while len(_central) <= n:
            k = len(_central)
            _central.append(exact_div(_central[-1] * (4 * k - 2), k))
    return _central[n]


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """The n-th Catalan number, binomial(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan requires n >= 0, got n={n}")
    return exact_div(binomial(2 * n, n), n + 1)


@lru_cache(maxsize=None)
def super_catalan(n: int, r: int) -> int:
    """Super Catalan number S(n, r) = binomial(2n,n) binomial(2r,r) / binomial(n+r,n).

    Symmetric in (n, r); even except at n = r = 0.
    """
    if n < 0 or r < 0:
        raise ValueError(f"super_catalan requires n, r >= 0, got ({n}, {r})")
    return exact_div(binomial(2 * n, n) * binomial(2 * r, r), binomial(n + r, n))


def half_super_catalan(n: int, r: int) -> int:
    """S(n, r) / 2, integral for r >= 1."""
    if r < 1:
        raise ValueError(f"half_super_catalan requires r >= 1, got r={r}")
    return exact_div(super_catalan(n, r), 2)


@lru_cache(maxsize=None)
def gessel(n: int, r: int) -> int:
    """Gessel number P(n, r) = r/(2(n+r)) * binomial(2n,n) * binomial(2r,r).

    Counts monotone lattice paths from (0,0) to (n+r, n+r-1) that avoid every
    diagonal point (x, x) with x >= r. P(n, 1) is the n-th Catalan number.
    Also equals binomial(n+r-1, n) * half_super_catalan(n, r).
    """
    if n < 0:
        raise ValueError(f"gessel requires n >= 0, got n={n}")
    if r < 1:
        raise ValueError(f"gessel requires r >= 1, got r={r}")
    return exact_div(r * binomial(2 * n, n) * binomial(2 * r, r), 2 * (n + r))


def smallest_clearing_factor(r: int) -> int:
    """K_r = (r/2) * binomial(2r, r), the canonical multiplier that makes
    K * binomial(2n, n) / (n + r) integral for every n >= 0."""
    if r < 1:
        raise ValueError(f"smallest_clearing_factor requires r >= 1, got r={r}")
    return exact_div(r * binomial(2 * r, r), 2)


def decimal(x: int) -> str:
    """Decimal string of x at any size.

    CPython 3.11+ guards int/str conversion above a digit limit; this lifts
    the limit just enough when a value actually needs it.
    """
    if hasattr(sys, "get_int_max_str_digits"):
        limit = sys.get_int_max_str_digits()
        if limit:
            digits = x.bit_length() // 3 + 3  # overestimate of decimal digits
            if digits > limit:
                sys.set_int_max_str_digits(digits)
    return str(x)


def parse_decimal(s: str) -> int:
    """Inverse of decimal(): parse a decimal string of any length."""
    if hasattr(sys, "get_int_max_str_digits"):
        limit = sys.get_int_max_str_digits()
        if limit and len(s) + 2 > limit:
            sys.set_int_max_str_digits(len(s) + 2)
    return int(s)
