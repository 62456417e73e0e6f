"""Closed forms for specific M-sums.

Each family below is a finite product/sum of binomials (and super Catalan
numbers) equal to an M-sum of one of the built-in kernels at a fixed weight
level. The family names encode kernel and level, not meaning: S1/S2/S3 are
the plain, rising-factor, and central-binomial alternating sums, PSI the
supercat kernel, PHI the gessel kernel; T0/T1 is the weight level t. All
functions take the half index n and correspond to M-sums at composite index
2n; offsets j > n return 0 to match the vanishing M-sum.

Where a family's natural grouping is a ratio whose integrality is only
guaranteed for the total, the terms accumulate as exact rationals and the
result asserts an integer at the end (a failed assertion raises NonDivisible,
the same loud signal as a violated divisibility claim).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .exact import (
    NonDivisible,
    binomial,
    exact_div,
    half_super_catalan,
    super_catalan,
)
from .kernels import (
    Kernel,
    central_kernel,
    gessel_kernel,
    plain_kernel,
    rising_kernel,
    supercat_kernel,
)
from .sums import m_sum


class ClosedFormFamily(str, Enum):
    S1_T0 = "s1-t0"
    S1_T1 = "s1-t1"
    S2_T0 = "s2-t0"
    S2_T1 = "s2-t1"
    S3_T0 = "s3-t0"
    PSI_T0 = "psi-t0"
    PSI_T1 = "psi-t1"
    PHI_J_T0 = "phi-j-t0"
    PHI_00 = "phi-00"


# parameters each family takes beyond the half index n
FAMILY_PARAMS: dict[ClosedFormFamily, tuple[str, ...]] = {
    ClosedFormFamily.S1_T0: ("n", "j"),
    ClosedFormFamily.S1_T1: ("n", "j"),
    ClosedFormFamily.S2_T0: ("n", "j", "a"),
    ClosedFormFamily.S2_T1: ("n", "j", "a"),
    ClosedFormFamily.S3_T0: ("n", "j"),
    ClosedFormFamily.PSI_T0: ("n", "j", "r"),
    ClosedFormFamily.PSI_T1: ("n", "j", "r"),
    ClosedFormFamily.PHI_J_T0: ("n", "j", "r"),
    ClosedFormFamily.PHI_00: ("n", "r"),
}


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def closed_s1_t0(n: int, j: int) -> int:
    """Plain kernel, level 0: (-1)^n at j = n, else 0."""
    if n < 0 or j < 0:
        raise ValueError("n and j must be non-negative")
    return _sign(n) if j == n else 0


def closed_s1_t1(n: int, j: int) -> int:
    """Plain kernel, level 1: (-1)^n binomial(2n, n) binomial(n, j)."""
    if n < 0 or j < 0:
        raise ValueError("n and j must be non-negative")
    return _sign(n) * binomial(2 * n, n) * binomial(n, j)


def closed_s2_t0(n: int, j: int, a: int) -> int:
    """Rising kernel, level 0: (-1)^n binomial(a+n, a) binomial(a+j, j) binomial(a, n-j)."""
    if n < 0 or j < 0 or a < 0:
        raise ValueError("n, j, a must be non-negative")
    if j > n:
        return 0
    return _sign(n) * binomial(a + n, a) * binomial(a + j, j) * binomial(a, n - j)


def closed_s2_t1(n: int, j: int, a: int) -> int:
    """Rising kernel, level 1:
    (-1)^n binomial(a+n, a) *
        sum_u binomial(2n, j+u) binomial(j+u, u) binomial(a+j+u, j+u) binomial(a, n-j-u).
    """
    if n < 0 or j < 0 or a < 0:
        raise ValueError("n, j, a must be non-negative")
    total = sum(
        binomial(2 * n, j + u)
        * binomial(j + u, u)
        * binomial(a + j + u, j + u)
        * binomial(a, n - j - u)
        for u in range(n - j + 1)
    )
    return _sign(n) * binomial(a + n, a) * total


def closed_s3_t0(n: int, j: int) -> int:
    """Central kernel, level 0:
    (-1)^j binomial(2n, n) binomial(2j, j) binomial(2(n-j), n-j)."""
    if n < 0 or j < 0:
        raise ValueError("n and j must be non-negative")
    if j > n:
        return 0
    return (
        _sign(j)
        * binomial(2 * n, n)
        * binomial(2 * j, j)
        * binomial(2 * (n - j), n - j)
    )


def closed_psi_t0(n: int, j: int, r: int) -> int:
    """Supercat(r) kernel, level 0: a single exact ratio of six binomials."""
    if n < 0 or j < 0:
        raise ValueError("n and j must be non-negative")
    if r < 1:
        raise ValueError("r must be at least 1")
    if j > n:
        return 0
    num = (
        binomial(2 * r, r)
        * binomial(2 * n, n)
        * binomial(2 * j, j)
        * binomial(2 * (n + r - j), n + r - j)
        * binomial(2 * n - j, n)
    )
    den = binomial(n + r, n) * binomial(2 * n + r - j, n)
    return _sign(j) * exact_div(num, den)


def closed_psi_t1(n: int, j: int, r: int) -> int:
    """Supercat(r) kernel, level 1:
    (-1)^j S(n, r) binomial(n, j) *
        sum_v (-1)^v S(n+r-j-v, n) binomial(2(j+v), j+v) binomial(n-j, v).
    """
    if n < 0 or j < 0:
        raise ValueError("n and j must be non-negative")
    if r < 1:
        raise ValueError("r must be at least 1")
    total = sum(
        _sign(v)
        * super_catalan(n + r - j - v, n)
        * binomial(2 * (j + v), j + v)
        * binomial(n - j, v)
        for v in range(n - j + 1)
    )
    return _sign(j) * super_catalan(n, r) * binomial(n, j) * total


def closed_phi_t0(n: int, j: int, r: int) -> int:
    """Gessel(r) kernel, level 0, at any offset j.

    Individual terms of the inner sum are not integers in general, so they
    accumulate as exact rationals; the prefactored total is asserted integral.
    """
    if n < 0 or j < 0:
        raise ValueError("n and j must be non-negative")
    if r < 1:
        raise ValueError("r must be at least 1")
    if j > n:
        return 0
    prefactor = (
        _sign(j + r - 1)
        * binomial(j + r - 1, j)
        * half_super_catalan(n, r)
        * binomial(2 * n - j, n)
    )
    total = Fraction(0)
    for l in range(r):
        total += (
            _sign(l)
            * binomial(2 * n - j + l, l)
            * binomial(n - j, r - 1 - l)
            * Fraction(
                binomial(2 * (j + r - 1 - l), j + r - 1 - l)
                * binomial(2 * (n - j + l + 1), n - j + l + 1),
                2 * binomial(2 * n - j + l + 1, n),
            )
        )
    value = prefactor * total
    if value.denominator != 1:
        raise NonDivisible(value.numerator, value.denominator,
                           value.numerator % value.denominator)
    return int(value)


def closed_phi_origin(n: int, r: int) -> int:
    """Gessel(r) kernel, level 0, at offset 0. Each term groups into half
    super Catalan numbers and is individually an integer."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if r < 1:
        raise ValueError("r must be at least 1")
    total = sum(
        _sign(l)
        * binomial(2 * n + l, l)
        * binomial(2 * (r - 1 - l), r - 1 - l)
        * binomial(n, r - 1 - l)
        * half_super_catalan(n, n + l + 1)
        for l in range(r)
    )
    return _sign(r - 1) * half_super_catalan(n, r) * total


_DISPATCH = {
    ClosedFormFamily.S1_T0: lambda n, j, r, a: closed_s1_t0(n, j),
    ClosedFormFamily.S1_T1: lambda n, j, r, a: closed_s1_t1(n, j),
    ClosedFormFamily.S2_T0: lambda n, j, r, a: closed_s2_t0(n, j, a),
    ClosedFormFamily.S2_T1: lambda n, j, r, a: closed_s2_t1(n, j, a),
    ClosedFormFamily.S3_T0: lambda n, j, r, a: closed_s3_t0(n, j),
    ClosedFormFamily.PSI_T0: lambda n, j, r, a: closed_psi_t0(n, j, r),
    ClosedFormFamily.PSI_T1: lambda n, j, r, a: closed_psi_t1(n, j, r),
    ClosedFormFamily.PHI_J_T0: lambda n, j, r, a: closed_phi_t0(n, j, r),
    ClosedFormFamily.PHI_00: lambda n, j, r, a: closed_phi_origin(n, r),
}


def closed_form(family: ClosedFormFamily, *, n: int, j: int = 0, r: int = 1, a: int = 0) -> int:
    """Evaluate one closed-form family (n is the half index)."""
    family = ClosedFormFamily(family)
    return _DISPATCH[family](n, j, r, a)


def msum_counterpart(
    family: ClosedFormFamily,
    *,
    n: int,
    j: int = 0,
    r: int = 1,
    a: int = 0,
    kernel: Kernel | None = None,
) -> int:
    """The M-sum each family's closed form must equal, evaluated directly.

    `kernel` overrides the family's standard kernel (the verifier uses this
    to thread fault-injected kernels through)."""
    family = ClosedFormFamily(family)
    if family in (ClosedFormFamily.S1_T0, ClosedFormFamily.S1_T1):
        kern = kernel or plain_kernel()
        t = 0 if family is ClosedFormFamily.S1_T0 else 1
        return m_sum(kern, 2 * n, j, t, 0)
    if family in (ClosedFormFamily.S2_T0, ClosedFormFamily.S2_T1):
        kern = kernel or rising_kernel()
        t = 0 if family is ClosedFormFamily.S2_T0 else 1
        return m_sum(kern, 2 * n, j, t, a)
    if family is ClosedFormFamily.S3_T0:
        kern = kernel or central_kernel()
        return m_sum(kern, 2 * n, j, 0, 0)
    if family in (ClosedFormFamily.PSI_T0, ClosedFormFamily.PSI_T1):
        kern = kernel or supercat_kernel(r)
        t = 0 if family is ClosedFormFamily.PSI_T0 else 1
        return m_sum(kern, 2 * n, j, t, r - 1)
    kern = kernel or gessel_kernel(r)
    if family is ClosedFormFamily.PHI_J_T0:
        return m_sum(kern, 2 * n, j, 0, r - 1)
    return m_sum(kern, 2 * n, 0, 0, r - 1)  # PHI_00
