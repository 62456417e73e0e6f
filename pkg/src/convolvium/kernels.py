"""Summand kernels: the integer families F(n, k, a) that weighted sums consume.

A kernel carries its own alternating sign, so the sum engine never multiplies
by (-1)^k itself. The built-in families:

    plain           (-1)^k
    rising          (-1)^k binomial(a+k, k) binomial(a+n-k, n-k)
    central         (-1)^k binomial(2k, k) binomial(2(n-k), n-k)
    supercat(r)     (-1)^k S(k, r) S(n-k, r)
    half-supercat(r) (-1)^k (S(k, r)/2) (S(n-k, r)/2)
    gessel(r)       (-1)^k P(k, r) P(n-k, r)
    custom          explicit table {(n, k, a): value}

The `bump` field is a fault-injection hook for the verifier's sensitivity
tests: it adds a delta to the kernel's value at exactly one point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping

from .exact import binomial, gessel, half_super_catalan, super_catalan

Point = tuple[int, int, int]  # (n, k, a)


class KernelFamily(str, Enum):
    PLAIN = "plain"
    RISING = "rising"
    CENTRAL = "central"
    SUPERCAT = "supercat"
    HALF_SUPERCAT = "half-supercat"
    GESSEL = "gessel"
    CUSTOM = "custom"


PARAMETERIZED_FAMILIES = frozenset(
    {KernelFamily.SUPERCAT, KernelFamily.HALF_SUPERCAT, KernelFamily.GESSEL}
)


class KernelDomainError(LookupError):
    """Kernel evaluated outside its domain (bad point, or a custom-table miss)."""


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


@dataclass(frozen=True)
class Kernel:
    family: KernelFamily
    order: int | None = None
    table: Mapping[Point, int] | None = None
    bump: tuple[Point, int] | None = None

    def __post_init__(self) -> None:
        if self.family in PARAMETERIZED_FAMILIES:
            if self.order is None or self.order < 1:
                raise ValueError(f"{self.family.value} kernel requires order >= 1")
        elif self.order is not None:
            raise ValueError(f"{self.family.value} kernel takes no order")
        if self.family is KernelFamily.CUSTOM:
            if self.table is None:
                raise ValueError("custom kernel requires a value table")
        elif self.table is not None:
            raise ValueError(f"{self.family.value} kernel takes no table")

    @property
    def label(self) -> str:
        if self.family in PARAMETERIZED_FAMILIES:
            return f"{self.family.value}({self.order})"
        return self.family.value

    def __call__(self, n: int, k: int, a: int) -> int:
        if n < 0 or a < 0 or k < 0 or k > n:
            raise KernelDomainError(
                f"kernel point out of domain: n={n}, k={k}, a={a}"
            )
        fam = self.family
        if fam is KernelFamily.PLAIN:
            value = _sign(k)
        elif fam is KernelFamily.RISING:
            value = _sign(k) * binomial(a + k, k) * binomial(a + n - k, n - k)
        elif fam is KernelFamily.CENTRAL:
            value = _sign(k) * binomial(2 * k, k) * binomial(2 * (n - k), n - k)
        elif fam is KernelFamily.SUPERCAT:
            r = self.order
            value = _sign(k) * super_catalan(k, r) * super_catalan(n - k, r)
        elif fam is KernelFamily.HALF_SUPERCAT:
            r = self.order
            value = _sign(k) * half_super_catalan(k, r) * half_super_catalan(n - k, r)
        elif fam is KernelFamily.GESSEL:
            r = self.order
            value = _sign(k) * gessel(k, r) * gessel(n - k, r)
        else:
            try:
                value = self.table[(n, k, a)]
            except KeyError:
                raise KernelDomainError(
                    f"custom kernel has no value at (n={n}, k={k}, a={a})"
                ) from None
        if self.bump is not None and self.bump[0] == (n, k, a):
            value += self.bump[1]
        return value


def plain_kernel() -> Kernel:
    return Kernel(KernelFamily.PLAIN)


def rising_kernel() -> Kernel:
    return Kernel(KernelFamily.RISING)


def central_kernel() -> Kernel:
    return Kernel(KernelFamily.CENTRAL)


def supercat_kernel(r: int) -> Kernel:
    return Kernel(KernelFamily.SUPERCAT, order=r)


def half_supercat_kernel(r: int) -> Kernel:
    return Kernel(KernelFamily.HALF_SUPERCAT, order=r)


def gessel_kernel(r: int) -> Kernel:
    return Kernel(KernelFamily.GESSEL, order=r)


def custom_kernel(table: Mapping[Point, int]) -> Kernel:
    return Kernel(KernelFamily.CUSTOM, table=dict(table))


def with_bump(kernel: Kernel, point: Point, delta: int = 1) -> Kernel:
    """Copy of kernel whose value at `point` is shifted by `delta` (test hook)."""
    return replace(kernel, bump=(point, delta))


def binomial_pair_kernel(g: Kernel, n: int, a: int) -> Kernel:
    """The kernel H(n, k, a) = binomial(a+k, a) binomial(a+n-k, a) G(n, k, a),
    materialized as a custom table over the single slice (n, a)."""
    table = {
        (n, k, a): binomial(a + k, a) * binomial(a + n - k, a) * g(n, k, a)
        for k in range(n + 1)
    }
    return custom_kernel(table)


def random_kernel(rng: random.Random, n_max: int, a_max: int) -> Kernel:
    """Custom kernel with values drawn uniformly from [-9, 9] for every point
    with n <= n_max, 0 <= k <= n, a <= a_max. Draw order is fixed (n, k, a
    ascending), so a seeded rng reproduces the same kernel."""
    table = {}
    for n in range(n_max + 1):
        for k in range(n + 1):
            for a in range(a_max + 1):
                table[(n, k, a)] = rng.randint(-9, 9)
    return custom_kernel(table)
