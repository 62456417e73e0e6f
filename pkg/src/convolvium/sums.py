"""The weighted-sum engine.

For a kernel F (sign included) this module evaluates

    direct_sum(F, n, m, a)   = sum_{k=0}^{n} binomial(n,k)^m F(n,k,a)

and the restricted "M-sums" that organize such sums by how far the index k
sits from the ends:

    m_sum(F, n, j, t, a) = binomial(n-j, j) *
        sum_{k=j}^{n-j} binomial(n-2j, k-j) binomial(n,k)^t F(n,k,a)

with the vanishing convention m_sum = 0 whenever 2j > n. Two recurrences tie
the M-sums together and are exposed as operations:

    m_sum_lift       raises the binomial-weight level t by one,
    theorem2_transform  transplants a binomial(a+k,a) binomial(a+n-k,a) pair
                        out of the kernel and into index shifts.

Sums are evaluated in ascending k with plain integer arithmetic; there are no
floating-point or modular shortcuts anywhere.
"""

from __future__ import annotations

from .exact import binomial
from .kernels import (
    Kernel,
    gessel_kernel,
    half_supercat_kernel,
    supercat_kernel,
)


def _check_args(**named: int) -> None:
    for name, value in named.items():
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}")


def direct_sum(kernel: Kernel, n: int, m: int, a: int = 0) -> int:
    """sum_{k=0}^{n} binomial(n, k)^m * F(n, k, a)."""
    _check_args(n=n, a=a)
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return sum(binomial(n, k) ** m * kernel(n, k, a) for k in range(n + 1))


def m_sum(kernel: Kernel, n: int, j: int, t: int, a: int = 0) -> int:
    """Restricted sum at offset j and weight level t; 0 when 2j > n."""
    _check_args(n=n, j=j, t=t, a=a)
    if 2 * j > n:
        return 0
    inner = sum(
        binomial(n - 2 * j, k - j) * binomial(n, k) ** t * kernel(n, k, a)
        for k in range(j, n - j + 1)
    )
    return binomial(n - j, j) * inner


def m_sum_lift(kernel: Kernel, n: int, j: int, t: int, a: int = 0) -> int:
    """The level-raise recurrence: evaluates the offset-j M-sum at level t+1
    from the level-t M-sums at offsets j..j+floor((n-2j)/2)."""
    _check_args(n=n, j=j, t=t, a=a)
    if 2 * j > n:
        return 0
    total = sum(
        binomial(n - j, u) * m_sum(kernel, n, j + u, t, a)
        for u in range((n - 2 * j) // 2 + 1)
    )
    return binomial(n, j) * total


def theorem2_transform(g_kernel: Kernel, n: int, j: int, a: int) -> int:
    """The kernel-transplant recurrence.

    For H(n,k,a) = binomial(a+k,a) binomial(a+n-k,a) G(n,k,a), the offset-j
    level-0 M-sum of H equals

        binomial(a+j, a) * sum_{l=0}^{a}
            binomial(n-j+l, l) binomial(n-j, a-l) M_G(n, j+a-l, 0; a)

    which this evaluates from the G side. Offsets past n yield 0.
    """
    _check_args(n=n, j=j, a=a)
    if j > n:
        return 0
    total = sum(
        binomial(n - j + l, l) * binomial(n - j, a - l) * m_sum(g_kernel, n, j + a - l, 0, a)
        for l in range(a + 1)
    )
    return binomial(a + j, a) * total


def gessel_convolution(n: int, m: int, r: int) -> int:
    """The alternating Gessel convolution at composite index 2n:
    sum_k (-1)^k binomial(2n,k)^m P(k,r) P(2n-k,r)."""
    return direct_sum(gessel_kernel(r), 2 * n, m, r - 1)


def supercat_convolution(n: int, m: int, r: int) -> int:
    """The alternating super Catalan convolution at composite index 2n:
    sum_k (-1)^k binomial(2n,k)^m S(k,r) S(2n-k,r)."""
    return direct_sum(supercat_kernel(r), 2 * n, m, r - 1)


def quarter_psi(n: int, m: int, r: int) -> int:
    """One quarter of the super Catalan convolution, evaluated directly
    through half super Catalan numbers (never by dividing)."""
    return direct_sum(half_supercat_kernel(r), 2 * n, m, r - 1)
