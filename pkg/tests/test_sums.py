"""Unit tests for kernels and the weighted-sum engine.

The golden convolution value is re-derived here through the lattice-path
oracle and math.comb only, so it does not depend on any arithmetic under
test. Recurrence properties run over random custom kernels: they are claims
about arbitrary integer summands, not about the built-in families.
"""

from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convolvium.exact import (
    catalan,
    binomial,
    exact_div,
    gessel,
    half_super_catalan,
    super_catalan,
)
from convolvium.kernels import (
    Kernel,
    KernelDomainError,
    KernelFamily,
    binomial_pair_kernel,
    central_kernel,
    custom_kernel,
    gessel_kernel,
    half_supercat_kernel,
    plain_kernel,
    random_kernel,
    rising_kernel,
    supercat_kernel,
    with_bump,
)
from convolvium.paths import count_paths, gessel_path_spec
from convolvium.sums import (
    direct_sum,
    gessel_convolution,
    m_sum,
    m_sum_lift,
    quarter_psi,
    supercat_convolution,
    theorem2_transform,
)

# --------------------------------------------------------------------- kernels


def test_plain_kernel_is_alternating_sign():
    k = plain_kernel()
    assert [k(4, i, 0) for i in range(5)] == [1, -1, 1, -1, 1]


def test_rising_kernel_values():
    k = rising_kernel()
    # (-1)^k binomial(a+k,k) binomial(a+n-k,n-k) at n=3, a=2
    assert k(3, 0, 2) == 1 * 1 * binomial(5, 3)
    assert k(3, 1, 2) == -1 * binomial(3, 1) * binomial(4, 2)
    assert k(3, 3, 2) == -1 * binomial(5, 3) * 1


def test_central_kernel_values():
    k = central_kernel()
    assert k(2, 1, 0) == -1 * binomial(2, 1) * binomial(2, 1)
    assert k(4, 0, 0) == binomial(8, 4)


def test_supercat_family_kernels_match_number_functions():
    for r in (1, 2, 3):
        sk, hk, gk = supercat_kernel(r), half_supercat_kernel(r), gessel_kernel(r)
        for n in range(7):
            for k in range(n + 1):
                sign = -1 if k % 2 else 1
                assert sk(n, k, 0) == sign * super_catalan(k, r) * super_catalan(n - k, r)
                assert hk(n, k, 0) == sign * half_super_catalan(k, r) * half_super_catalan(n - k, r)
                assert gk(n, k, 0) == sign * gessel(k, r) * gessel(n - k, r)
                assert 4 * hk(n, k, 0) == sk(n, k, 0)


def test_kernel_domain_errors():
    k = plain_kernel()
    with pytest.raises(KernelDomainError):
        k(-1, 0, 0)
    with pytest.raises(KernelDomainError):
        k(3, 4, 0)
    with pytest.raises(KernelDomainError):
        k(3, -1, 0)
    with pytest.raises(KernelDomainError):
        k(3, 1, -1)


def test_custom_kernel_table_and_miss():
    k = custom_kernel({(2, 0, 0): 5, (2, 1, 0): -3, (2, 2, 0): 1})
    assert k(2, 1, 0) == -3
    with pytest.raises(KernelDomainError):
        k(3, 0, 0)


def test_kernel_validation():
    with pytest.raises(ValueError):
        Kernel(KernelFamily.SUPERCAT)  # missing order
    with pytest.raises(ValueError):
        Kernel(KernelFamily.GESSEL, order=0)
    with pytest.raises(ValueError):
        Kernel(KernelFamily.PLAIN, order=2)
    with pytest.raises(ValueError):
        Kernel(KernelFamily.CUSTOM)  # missing table
    with pytest.raises(ValueError):
        Kernel(KernelFamily.PLAIN, table={})


def test_kernel_labels():
    assert plain_kernel().label == "plain"
    assert gessel_kernel(2).label == "gessel(2)"
    assert custom_kernel({(0, 0, 0): 1}).label == "custom"


def test_with_bump_shifts_exactly_one_point():
    base = central_kernel()
    bumped = with_bump(base, (4, 2, 0), 7)
    for k in range(5):
        delta = bumped(4, k, 0) - base(4, k, 0)
        assert delta == (7 if k == 2 else 0)
    assert bumped(6, 2, 0) == base(6, 2, 0)


def test_binomial_pair_of_half_supercat_is_gessel():
    # dressing the half-super-Catalan kernel with binomial(a+k,a)
    # binomial(a+n-k,a) at a = r-1 reproduces the Gessel kernel pointwise
    for r in (1, 2, 3):
        gk = gessel_kernel(r)
        for n in range(8):
            pair = binomial_pair_kernel(half_supercat_kernel(r), n, r - 1)
            for k in range(n + 1):
                assert pair(n, k, r - 1) == gk(n, k, r - 1)


def test_random_kernel_is_seeded_and_bounded():
    a = random_kernel(random.Random(99), 5, 2)
    b = random_kernel(random.Random(99), 5, 2)
    c = random_kernel(random.Random(100), 5, 2)
    values_a = [a(n, k, s) for n in range(6) for k in range(n + 1) for s in range(3)]
    values_b = [b(n, k, s) for n in range(6) for k in range(n + 1) for s in range(3)]
    values_c = [c(n, k, s) for n in range(6) for k in range(n + 1) for s in range(3)]
    assert values_a == values_b
    assert values_a != values_c
    assert all(-9 <= v <= 9 for v in values_a)


# ------------------------------------------------------------------ direct_sum


def test_direct_sum_gessel_weight_one():
    assert direct_sum(gessel_kernel(1), 2, 1, 0) == 2


def test_direct_sum_supercat_weight_one():
    assert direct_sum(supercat_kernel(1), 2, 1, 0) == 8


def test_direct_sum_single_term_at_n_zero():
    assert direct_sum(plain_kernel(), 0, 3, 0) == 1
    assert direct_sum(rising_kernel(), 0, 2, 4) == binomial(4, 0) * binomial(4, 0)
    assert direct_sum(custom_kernel({(0, 0, 1): -6}), 0, 5, 1) == -6


def test_direct_sum_validation():
    with pytest.raises(ValueError):
        direct_sum(plain_kernel(), 4, 0, 0)
    with pytest.raises(ValueError):
        direct_sum(plain_kernel(), -1, 1, 0)


# ------------------------------------------------------------- the golden value


def _path_gessel(n: int, r: int) -> int:
    """Gessel number from the lattice-path oracle, no arithmetic shortcut."""
    return count_paths(gessel_path_spec(n, r))


def test_golden_convolution_from_path_oracle():
    # the weight-1 Gessel convolution at n=3, r=2, rebuilt from path counts
    # and math.comb alone
    expected = sum(
        (-1) ** k * math.comb(6, k) * _path_gessel(k, 2) * _path_gessel(6 - k, 2)
        for k in range(7)
    )
    assert expected == 1170
    assert gessel_convolution(3, 1, 2) == 1170


def test_golden_divisibility_pattern():
    value = gessel_convolution(3, 1, 2)
    assert value % 6 == 0  # half the super Catalan number S(3,2) = 12
    assert value % 12 == 6  # but not the full S(3,2)
    assert value % 20 == 10  # and not the central binomial C(6,3)


# -------------------------------------------------------------- m=1 identities


def test_gessel_convolution_weight_one_r_one():
    for n in range(13):
        assert gessel_convolution(n, 1, 1) == catalan(n) * binomial(2 * n, n)


def test_supercat_convolution_weight_one():
    for n in range(11):
        for r in range(1, 6):
            expected = super_catalan(n, r) * super_catalan(n + r, n)
            assert supercat_convolution(n, 1, r) == expected


def test_quarter_psi_dual_route():
    for n in range(9):
        for m in (1, 2, 3):
            for r in (1, 2, 3):
                psi = supercat_convolution(n, m, r)
                quarter = quarter_psi(n, m, r)
                assert 4 * quarter == psi
                assert quarter == exact_div(psi, 4)


# ----------------------------------------------------------------------- m_sum


def _table_strategy(n_max: int = 8):
    """Random single-a custom kernel tables covering n <= n_max."""
    return st.builds(
        lambda seed: random_kernel(random.Random(seed), n_max, 0),
        st.integers(0, 2**16),
    )


def test_m_sum_vanishes_past_half():
    kern = plain_kernel()
    for n in range(8):
        for j in range(n // 2 + 1, n + 4):
            assert m_sum(kern, n, j, 2, 0) == 0


def test_m_sum_level_zero_offset_zero_is_singly_weighted_sum():
    # even at level 0 the M-sum keeps one binomial weight, from C(n-2j, k-j)
    kern = central_kernel()
    for n in range(9):
        expected = sum(binomial(n, k) * kern(n, k, 0) for k in range(n + 1))
        assert m_sum(kern, n, 0, 0, 0) == expected


@settings(max_examples=40)
@given(_table_strategy(), st.integers(0, 8), st.integers(1, 4))
def test_reduction_direct_sum_is_offset_zero_m_sum(kern, n, m):
    assert direct_sum(kern, n, m, 0) == m_sum(kern, n, 0, m - 1, 0)


@settings(max_examples=40)
@given(_table_strategy(), st.integers(0, 8), st.integers(0, 4), st.integers(0, 2))
def test_lift_recurrence_matches_direct_level(kern, n, j, t):
    assert m_sum_lift(kern, n, j, t, 0) == m_sum(kern, n, j, t + 1, 0)


def test_lift_recurrence_on_builtins():
    for kern, a in ((plain_kernel(), 0), (central_kernel(), 0), (rising_kernel(), 2),
                    (supercat_kernel(2), 1), (gessel_kernel(3), 2)):
        for n in range(9):
            for j in range(n // 2 + 1):
                for t in range(3):
                    assert m_sum_lift(kern, n, j, t, a) == m_sum(kern, n, j, t + 1, a)


def test_m_sum_validation():
    with pytest.raises(ValueError):
        m_sum(plain_kernel(), -1, 0, 0, 0)
    with pytest.raises(ValueError):
        m_sum(plain_kernel(), 4, -1, 0, 0)
    with pytest.raises(ValueError):
        m_sum(plain_kernel(), 4, 0, -1, 0)
    with pytest.raises(ValueError):
        m_sum(plain_kernel(), 4, 0, 0, -1)


# ---------------------------------------------------------- kernel transplant


@settings(max_examples=30)
@given(
    st.builds(lambda seed: random_kernel(random.Random(seed), 8, 3), st.integers(0, 2**16)),
    st.integers(0, 8),
    st.integers(0, 10),
    st.integers(0, 3),
)
def test_transplant_matches_dressed_kernel(g, n, j, a):
    dressed = binomial_pair_kernel(g, n, a)
    assert m_sum(dressed, n, j, 0, a) == theorem2_transform(g, n, j, a)


def test_transplant_gessel_instance():
    # M-sums of the gessel(r) kernel from the half-super-Catalan side
    for r in (1, 2, 3):
        for h in range(6):
            for j in range(h + 1):
                assert m_sum(gessel_kernel(r), 2 * h, j, 0, r - 1) == theorem2_transform(
                    half_supercat_kernel(r), 2 * h, j, r - 1
                )


def test_transplant_offset_past_n_is_zero():
    g = custom_kernel({(2, k, 1): 1 for k in range(3)})
    assert theorem2_transform(g, 2, 3, 1) == 0
