"""Machine verification suites.

Every claim the library's arithmetic rests on is swept over a bounded
parameter box by one of the suites registered here. A suite never raises on
a falsified claim: it records each violation (parameters, expected, actual)
and the caller decides what a non-empty list means. All arithmetic is exact;
a violation is a counterexample, not a tolerance artifact.

Suites accept an optional fault-injection `bump` that perturbs one built-in
kernel value at one point. Sweeps that evaluate that kernel at that point
must then report at least one violation; this is how the suites themselves
are tested for sensitivity. Randomized suites (eq8, thm2) derive their
kernels from a seeded generator, so reports are reproducible byte for byte.

Runtime protection: before running, each suite estimates its work from the
resolved range and refuses (RangeTooLarge) if the estimate exceeds the
budget, taken from the CONVOLVIUM_BUDGET_MS environment variable when set
and 600000 ms otherwise.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import closed_forms as cf
from .exact import (
    binomial,
    catalan,
    central_binomial,
    decimal,
    half_super_catalan,
    lcm,
    gessel,
    smallest_clearing_factor,
    super_catalan,
)
from .kernels import (
    PARAMETERIZED_FAMILIES,
    Kernel,
    KernelFamily,
    Point,
    binomial_pair_kernel,
    random_kernel,
    with_bump,
)
from .paths import (
    count_paths,
    enumerate_paths,
    gessel_path_spec,
    prefix_path_spec,
    verify_interpretations,
)
from .sums import direct_sum, m_sum, m_sum_lift, theorem2_transform

DEFAULT_BUDGET_MS = 600_000.0
BUDGET_ENV_VAR = "CONVOLVIUM_BUDGET_MS"
DEFAULT_SEED = 0x5EED
FUZZ_KERNEL_COUNT = 50

# rough cost assigned to one kernel/binomial evaluation when estimating work
_EST_US_PER_TERM = 2.0

# board size (x + y at the target) up to which the paths suite cross-checks
# the counting DP against explicit enumeration
_ENUM_CROSSCHECK_STEPS = 12


class UnknownSuite(ValueError):
    """No suite is registered under the requested name."""


class RangeTooLarge(ValueError):
    """The requested range's estimated runtime exceeds the budget."""


@dataclass(frozen=True)
class SweepRange:
    """Overrides for a suite's default parameter box.

    A None field keeps the suite's default; suites ignore fields they do not
    use. The seed only matters to the randomized suites.
    """

    n_max: int | None = None
    m_max: int | None = None
    r_max: int | None = None
    a_max: int | None = None
    seed: int = DEFAULT_SEED


@dataclass(frozen=True)
class KernelBump:
    """Fault injection: add delta to one built-in kernel's value at one point.

    Suites build their built-in kernels through a factory that applies the
    bump on a family/order match, so a single bump threads through every
    suite that evaluates that kernel. Custom (table) kernels are outside the
    fault-injection surface.
    """

    family: KernelFamily
    order: int | None
    point: Point
    delta: int = 1

    def __post_init__(self) -> None:
        if self.family is KernelFamily.CUSTOM:
            raise ValueError("custom kernels cannot be bumped")
        if self.family in PARAMETERIZED_FAMILIES:
            if self.order is None or self.order < 1:
                raise ValueError(f"{self.family.value} bump requires order >= 1")
        elif self.order is not None:
            raise ValueError(f"{self.family.value} bump takes no order")
        if self.delta == 0:
            raise ValueError("bump delta must be non-zero")


@dataclass
class VerificationReport:
    suite: str
    claim: str
    range: dict[str, int]
    cases_checked: int
    violations: list[dict]
    elapsed_ms: float
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self, include_timings: bool = False) -> dict:
        """JSON-ready dict. elapsed_ms serializes as 0 unless timings are
        requested, so default reports are byte-identical across runs."""
        return {
            "suite": self.suite,
            "claim": self.claim,
            "range": dict(self.range),
            "cases_checked": self.cases_checked,
            "violations": self.violations,
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timings else 0,
            "notes": list(self.notes),
        }


class _SuiteCtx:
    """Mutable state threaded through one suite run."""

    def __init__(self, params: dict[str, int], seed: int, bump: KernelBump | None):
        self.params = params
        self.seed = seed
        self.bump = bump
        self.cases = 0
        self.violations: list[dict] = []
        self.notes: list[str] = []

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def mk(self, family: KernelFamily, order: int | None = None) -> Kernel:
        """Built-in kernel, with the fault-injection bump applied on match."""
        kernel = Kernel(family, order=order)
        b = self.bump
        if b is not None and b.family is family and b.order == order:
            kernel = with_bump(kernel, b.point, b.delta)
        return kernel

    def equal(self, params: dict, expected: int, actual: int) -> None:
        self.cases += 1
        if expected != actual:
            self.violations.append(
                {
                    "parameters": params,
                    "expected": decimal(expected),
                    "actual": decimal(actual),
                }
            )

    def divides(self, params: dict, divisor: int, value: int) -> None:
        self.cases += 1
        rem = value % divisor
        if rem:
            self.violations.append(
                {
                    "parameters": {
                        **params,
                        "divisor": decimal(divisor),
                        "value": decimal(value),
                    },
                    "expected": "remainder 0",
                    "actual": f"remainder {decimal(rem)}",
                }
            )

    def assert_true(self, params: dict, ok: bool, expected: str, actual: str) -> None:
        self.cases += 1
        if not ok:
            self.violations.append(
                {"parameters": params, "expected": expected, "actual": actual}
            )


# ---------------------------------------------------------------- suite runners


def _run_theorem1(ctx: _SuiteCtx) -> None:
    p = ctx.params
    for r in range(1, p["r_max"] + 1):
        kern = ctx.mk(KernelFamily.GESSEL, r)
        for n in range(p["n_max"] + 1):
            d = half_super_catalan(n, r)
            for m in range(1, p["m_max"] + 1):
                ctx.divides({"n": n, "m": m, "r": r}, d, direct_sum(kern, 2 * n, m, r - 1))


def _run_psi_div(ctx: _SuiteCtx) -> None:
    p = ctx.params
    for r in range(1, p["r_max"] + 1):
        kern = ctx.mk(KernelFamily.SUPERCAT, r)
        for n in range(p["n_max"] + 1):
            d = super_catalan(n, r)
            for m in range(1, p["m_max"] + 1):
                ctx.divides({"n": n, "m": m, "r": r}, d, direct_sum(kern, 2 * n, m, r - 1))


def _run_phi_m1(ctx: _SuiteCtx) -> None:
    kern = ctx.mk(KernelFamily.GESSEL, 1)
    for n in range(ctx.params["n_max"] + 1):
        ctx.equal(
            {"n": n},
            catalan(n) * binomial(2 * n, n),
            direct_sum(kern, 2 * n, 1, 0),
        )


def _run_psi_m1(ctx: _SuiteCtx) -> None:
    p = ctx.params
    for r in range(1, p["r_max"] + 1):
        kern = ctx.mk(KernelFamily.SUPERCAT, r)
        for n in range(p["n_max"] + 1):
            ctx.equal(
                {"n": n, "r": r},
                super_catalan(n, r) * super_catalan(n + r, n),
                direct_sum(kern, 2 * n, 1, r - 1),
            )


def _run_calkin(ctx: _SuiteCtx) -> None:
    p = ctx.params
    kern = ctx.mk(KernelFamily.PLAIN)
    for n in range(p["n_max"] + 1):
        d = central_binomial(n)
        for m in range(1, p["m_max"] + 1):
            ctx.divides({"n": n, "m": m}, d, direct_sum(kern, 2 * n, m, 0))


def _run_s2_div(ctx: _SuiteCtx) -> None:
    p = ctx.params
    kern = ctx.mk(KernelFamily.RISING)
    for a in range(p["a_max"] + 1):
        for n in range(p["n_max"] + 1):
            d = lcm(binomial(a + n, a), central_binomial(n))
            for m in range(1, p["m_max"] + 1):
                ctx.divides({"n": n, "m": m, "a": a}, d, direct_sum(kern, 2 * n, m, a))


def _run_s3_div(ctx: _SuiteCtx) -> None:
    p = ctx.params
    kern = ctx.mk(KernelFamily.CENTRAL)
    for n in range(p["n_max"] + 1):
        d = central_binomial(n)
        for m in range(1, p["m_max"] + 1):
            ctx.divides({"n": n, "m": m}, d, direct_sum(kern, 2 * n, m, 0))


_FAMILY_KERNEL = {
    cf.ClosedFormFamily.S1_T0: KernelFamily.PLAIN,
    cf.ClosedFormFamily.S1_T1: KernelFamily.PLAIN,
    cf.ClosedFormFamily.S2_T0: KernelFamily.RISING,
    cf.ClosedFormFamily.S2_T1: KernelFamily.RISING,
    cf.ClosedFormFamily.S3_T0: KernelFamily.CENTRAL,
    cf.ClosedFormFamily.PSI_T0: KernelFamily.SUPERCAT,
    cf.ClosedFormFamily.PSI_T1: KernelFamily.SUPERCAT,
    cf.ClosedFormFamily.PHI_J_T0: KernelFamily.GESSEL,
    cf.ClosedFormFamily.PHI_00: KernelFamily.GESSEL,
}


def _run_closed_forms(ctx: _SuiteCtx) -> None:
    p = ctx.params
    for family in cf.ClosedFormFamily:
        takes = cf.FAMILY_PARAMS[family]
        kfam = _FAMILY_KERNEL[family]
        r_values = range(1, p["r_max"] + 1) if "r" in takes else (1,)
        a_values = range(p["a_max"] + 1) if "a" in takes else (0,)
        for n in range(p["n_max"] + 1):
            # probe one offset past the half index: both sides must vanish
            j_values = range(n + 2) if "j" in takes else (0,)
            for j in j_values:
                for r in r_values:
                    kern = ctx.mk(kfam, r if kfam in PARAMETERIZED_FAMILIES else None)
                    for a in a_values:
                        params = {"family": family.value, "n": n}
                        if "j" in takes:
                            params["j"] = j
                        if "r" in takes:
                            params["r"] = r
                        if "a" in takes:
                            params["a"] = a
                        ctx.equal(
                            params,
                            cf.closed_form(family, n=n, j=j, r=r, a=a),
                            cf.msum_counterpart(family, n=n, j=j, r=r, a=a, kernel=kern),
                        )


def _builtin_kernels(ctx: _SuiteCtx) -> list[tuple[Kernel, int]]:
    """Every built-in kernel instance the sweep covers, paired with the `a`
    it is summed at (the rising kernel reads `a`; the supercat-type kernels
    run at their natural a = r - 1; the rest run at a = 0)."""
    p = ctx.params
    out = [(ctx.mk(KernelFamily.PLAIN), 0), (ctx.mk(KernelFamily.CENTRAL), 0)]
    for a in range(p["a_max"] + 1):
        out.append((ctx.mk(KernelFamily.RISING), a))
    for r in range(1, p["r_max"] + 1):
        out.append((ctx.mk(KernelFamily.SUPERCAT, r), r - 1))
        out.append((ctx.mk(KernelFamily.HALF_SUPERCAT, r), r - 1))
        out.append((ctx.mk(KernelFamily.GESSEL, r), r - 1))
    return out


def _run_eq7(ctx: _SuiteCtx) -> None:
    p = ctx.params
    for kern, a in _builtin_kernels(ctx):
        for n in range(p["n_max"] + 1):
            for m in range(1, p["m_max"] + 1):
                ctx.equal(
                    {"kernel": kern.label, "n": n, "m": m, "a": a},
                    direct_sum(kern, n, m, a),
                    m_sum(kern, n, 0, m - 1, a),
                )


def _run_eq8(ctx: _SuiteCtx) -> None:
    p = ctx.params
    entries: list[tuple[str, Kernel, int]] = [
        (kern.label, kern, a) for kern, a in _builtin_kernels(ctx)
    ]
    rng = ctx.rng()
    for i in range(FUZZ_KERNEL_COUNT):
        entries.append((f"custom[{i}]", random_kernel(rng, p["n_max"], 0), 0))
    for label, kern, a in entries:
        for n in range(p["n_max"] + 1):
            for j in range(n // 2 + 1):
                for t in range(p["m_max"]):
                    ctx.equal(
                        {"kernel": label, "n": n, "j": j, "t": t, "a": a},
                        m_sum(kern, n, j, t + 1, a),
                        m_sum_lift(kern, n, j, t, a),
                    )


def _run_thm2(ctx: _SuiteCtx) -> None:
    p = ctx.params
    rng = ctx.rng()
    for i in range(FUZZ_KERNEL_COUNT):
        g = random_kernel(rng, p["n_max"], p["a_max"])
        for n in range(p["n_max"] + 1):
            for a in range(p["a_max"] + 1):
                h = binomial_pair_kernel(g, n, a)
                for j in range(n + 1):
                    ctx.equal(
                        {"kernel": f"custom[{i}]", "n": n, "j": j, "a": a},
                        m_sum(h, n, j, 0, a),
                        theorem2_transform(g, n, j, a),
                    )
    # the named instance: the gessel(r) kernel is the binomial-pair dressing
    # of half-supercat(r) at a = r - 1, so the transplant must reproduce its
    # offset M-sums
    h_max = min(6, p["n_max"])
    for r in range(1, p["r_max"] + 1):
        g = ctx.mk(KernelFamily.HALF_SUPERCAT, r)
        q = ctx.mk(KernelFamily.GESSEL, r)
        for h in range(h_max + 1):
            for j in range(h + 1):
                ctx.equal(
                    {"kernel": f"gessel({r})", "n": 2 * h, "j": j, "a": r - 1},
                    m_sum(q, 2 * h, j, 0, r - 1),
                    theorem2_transform(g, 2 * h, j, r - 1),
                )


def _run_eq2_eq4(ctx: _SuiteCtx) -> None:
    p = ctx.params
    for r in range(1, p["r_max"] + 1):
        # pointwise: twice the Gessel number is the rising binomial times the
        # super Catalan number
        for k in range(2 * p["n_max"] + 1):
            ctx.equal(
                {"relation": "gessel-factorization", "k": k, "r": r},
                2 * gessel(k, r),
                binomial(k + r - 1, k) * super_catalan(k, r),
            )
        gk = ctx.mk(KernelFamily.GESSEL, r)
        sk = ctx.mk(KernelFamily.SUPERCAT, r)
        hk = ctx.mk(KernelFamily.HALF_SUPERCAT, r)
        for n in range(p["n_max"] + 1):
            pair = binomial_pair_kernel(hk, 2 * n, r - 1)
            for m in range(1, p["m_max"] + 1):
                ctx.equal(
                    {"relation": "kernel-factorization", "n": n, "m": m, "r": r},
                    direct_sum(gk, 2 * n, m, r - 1),
                    direct_sum(pair, 2 * n, m, r - 1),
                )
                ctx.equal(
                    {"relation": "quarter-sum", "n": n, "m": m, "r": r},
                    direct_sum(sk, 2 * n, m, r - 1),
                    4 * direct_sum(hk, 2 * n, m, r - 1),
                )


def _run_stanley(ctx: _SuiteCtx) -> None:
    top = ctx.params["n_max"]
    for a in range(top + 1):
        for b in range(top + 1):
            for m in range(top + 1):
                for n in range(top + 1):
                    lhs = sum(
                        binomial(a, m - k) * binomial(b, n - k) * binomial(a + b + k, k)
                        for k in range(min(m, n) + 1)
                    )
                    ctx.equal(
                        {"a": a, "b": b, "m": m, "n": n},
                        binomial(a + n, m) * binomial(b + m, n),
                        lhs,
                    )


def _run_eq14(ctx: _SuiteCtx) -> None:
    top = ctx.params["a_max"]
    for a in range(top + 1):
        for b in range(a + 1):
            for c in range(b + 1):
                ctx.equal(
                    {"a": a, "b": b, "c": c},
                    binomial(a, b) * binomial(b, c),
                    binomial(a, c) * binomial(a - c, b - c),
                )


def _run_kr(ctx: _SuiteCtx) -> None:
    window = ctx.params["n_max"]
    for r in range(1, ctx.params["r_max"] + 1):
        cleared = smallest_clearing_factor(r)
        for n in range(window + 1):
            ctx.divides({"r": r, "n": n, "K": decimal(cleared)}, n + r, cleared * central_binomial(n))
        # minimality, as far as the window can see: every smaller multiplier
        # must fail at some n in the window
        for cand in range(1, cleared):
            witness = next(
                (n for n in range(window + 1) if cand * central_binomial(n) % (n + r)),
                None,
            )
            ctx.assert_true(
                {"r": r, "K": cand},
                witness is not None,
                f"some n <= {window} where K*binomial(2n,n) is not divisible by n+r",
                "no witness in window",
            )


def _run_remark1(ctx: _SuiteCtx) -> None:
    kern = ctx.mk(KernelFamily.GESSEL, 2)
    value = direct_sum(kern, 6, 1, 1)
    base = {"n": 3, "m": 1, "r": 2}
    ctx.equal(base, 1170, value)
    ctx.divides({**base, "claim": "divisible by half the super Catalan number"}, 6, value)
    ctx.equal({**base, "claim": "not divisible by the full super Catalan number"}, 6, value % 12)
    ctx.equal({**base, "claim": "not divisible by the central binomial"}, 10, value % 20)


def _run_paths(ctx: _SuiteCtx) -> None:
    p = ctx.params
    for n in range(1, p["n_max"] + 1):
        for r in range(1, p["r_max"] + 1):
            chk = verify_interpretations(n, r)
            ctx.equal({"n": n, "r": r, "check": "tail-count"}, chk.formula_value, chk.tail_count)
            ctx.equal({"n": n, "r": r, "check": "band-count"}, chk.formula_value, chk.band_count)
            if 2 * (n + r) - 1 <= _ENUM_CROSSCHECK_STEPS:
                for tag, spec in (("tail", gessel_path_spec(n, r)), ("band", prefix_path_spec(n, r))):
                    ctx.equal(
                        {"n": n, "r": r, "check": f"enumeration-{tag}"},
                        count_paths(spec),
                        len(enumerate_paths(spec)),
                    )


# ------------------------------------------------------------------- registry


@dataclass(frozen=True, eq=False)
class SuiteSpec:
    name: str
    claim: str
    defaults: dict[str, int]
    minimums: dict[str, int]
    runner: Callable[[_SuiteCtx], None]
    estimator: Callable[[dict[str, int]], float]
    uses_seed: bool = False


def _est_weighted(p: dict[str, int]) -> float:
    return (p["n_max"] + 1) * p.get("m_max", 1) * p.get("r_max", 1) * (2 * p["n_max"] + 2)


def _est_closed_forms(p: dict[str, int]) -> float:
    n = p["n_max"]
    return 9.0 * (n + 1) * (n + 2) * p["r_max"] * (p["a_max"] + 1) * (2 * n + 2)


def _kernel_count(p: dict[str, int]) -> int:
    return 2 + (p["a_max"] + 1) + 3 * p["r_max"]


def _est_eq7(p: dict[str, int]) -> float:
    return _kernel_count(p) * p["m_max"] * float(p["n_max"] + 1) ** 2


def _est_eq8(p: dict[str, int]) -> float:
    n = p["n_max"]
    per_case = (n + 1) * (n // 2 + 2)
    return (_kernel_count(p) + FUZZ_KERNEL_COUNT) * p["m_max"] * (n + 1) * (n // 2 + 1) * float(per_case)


def _est_thm2(p: dict[str, int]) -> float:
    n, a, r = p["n_max"], p["a_max"], p["r_max"]
    fuzz = FUZZ_KERNEL_COUNT * (n + 1.0) ** 2 * (a + 1) ** 2 * (n + 2)
    instance = r * (min(6, n) + 1.0) ** 2 * (2 * min(6, n) + 2)
    return fuzz + instance


def _est_eq2_eq4(p: dict[str, int]) -> float:
    n = p["n_max"]
    return p["r_max"] * (2 * n + 1.0) + 4.0 * (n + 1) * p["m_max"] * p["r_max"] * (2 * n + 2)


def _est_kr(p: dict[str, int]) -> float:
    window = p["n_max"] + 1.0
    if p["r_max"] > 40:
        return float("inf")
    candidates = sum(float(smallest_clearing_factor(r)) for r in range(1, p["r_max"] + 1))
    return p["r_max"] * window + candidates * window


def _est_paths(p: dict[str, int]) -> float:
    n, r = p["n_max"], p["r_max"]
    return 4.0 * n * r * (n + r) ** 2 + 8000.0


_MIN_DEFAULTS = {"n_max": 0, "m_max": 1, "r_max": 1, "a_max": 0}


def _spec(
    name: str,
    claim: str,
    defaults: dict[str, int],
    runner: Callable[[_SuiteCtx], None],
    estimator: Callable[[dict[str, int]], float],
    minimums: dict[str, int] | None = None,
    uses_seed: bool = False,
) -> SuiteSpec:
    mins = {k: _MIN_DEFAULTS[k] for k in defaults}
    mins.update(minimums or {})
    return SuiteSpec(name, claim, defaults, mins, runner, estimator, uses_seed)


_REGISTRY: dict[str, SuiteSpec] = {
    s.name: s
    for s in (
        _spec(
            "theorem1",
            "half the super Catalan number S(n,r) divides the alternating "
            "Gessel convolution at every binomial weight",
            {"n_max": 10, "m_max": 4, "r_max": 5},
            _run_theorem1,
            _est_weighted,
        ),
        _spec(
            "psi-div",
            "the super Catalan number S(n,r) divides the alternating super "
            "Catalan convolution at every binomial weight",
            {"n_max": 10, "m_max": 4, "r_max": 5},
            _run_psi_div,
            _est_weighted,
        ),
        _spec(
            "phi-m1",
            "at weight 1 and r = 1 the Gessel convolution equals "
            "catalan(n) * binomial(2n, n)",
            {"n_max": 12},
            _run_phi_m1,
            _est_weighted,
        ),
        _spec(
            "psi-m1",
            "at weight 1 the super Catalan convolution equals S(n,r) * S(n+r,n)",
            {"n_max": 10, "r_max": 5},
            _run_psi_m1,
            _est_weighted,
        ),
        _spec(
            "calkin",
            "binomial(2n,n) divides the alternating m-th power sum of "
            "binomial(2n,k)",
            {"n_max": 12, "m_max": 5},
            _run_calkin,
            _est_weighted,
        ),
        _spec(
            "s2-div",
            "lcm(binomial(a+n,a), binomial(2n,n)) divides the alternating "
            "weighted sum over the rising kernel",
            {"n_max": 10, "m_max": 4, "a_max": 4},
            _run_s2_div,
            lambda p: _est_weighted(p) * (p["a_max"] + 1),
        ),
        _spec(
            "s3-div",
            "binomial(2n,n) divides the alternating weighted sum over the "
            "central-binomial kernel",
            {"n_max": 10, "m_max": 4},
            _run_s3_div,
            _est_weighted,
        ),
        _spec(
            "closed-forms",
            "every closed-form family equals its M-sum evaluated directly, "
            "including one offset past the vanishing boundary",
            {"n_max": 6, "r_max": 4, "a_max": 4},
            _run_closed_forms,
            _est_closed_forms,
        ),
        _spec(
            "eq7",
            "the weight-m direct sum equals the offset-0 M-sum at level m-1 "
            "for every built-in kernel",
            {"n_max": 12, "m_max": 4, "r_max": 4, "a_max": 4},
            _run_eq7,
            _est_eq7,
        ),
        _spec(
            "eq8",
            "the level-raise recurrence reproduces the directly evaluated "
            "M-sum one level up, for built-in and random kernels",
            {"n_max": 12, "m_max": 3, "r_max": 4, "a_max": 4},
            _run_eq8,
            _est_eq8,
            uses_seed=True,
        ),
        _spec(
            "thm2",
            "transplanting a binomial pair out of the kernel reproduces the "
            "offset M-sums, for random kernels and for the Gessel instance",
            {"n_max": 10, "a_max": 3, "r_max": 4},
            _run_thm2,
            _est_thm2,
            uses_seed=True,
        ),
        _spec(
            "eq2-eq4",
            "the Gessel, super Catalan, and half-super-Catalan kernels agree "
            "pointwise and in aggregate under their factorizations",
            {"n_max": 8, "m_max": 3, "r_max": 4},
            _run_eq2_eq4,
            _est_eq2_eq4,
        ),
        _spec(
            "stanley",
            "sum_k binomial(a,m-k) binomial(b,n-k) binomial(a+b+k,k) equals "
            "binomial(a+n,m) binomial(b+m,n) over the full box",
            {"n_max": 12},
            _run_stanley,
            lambda p: float(p["n_max"] + 1) ** 5,
        ),
        _spec(
            "eq14",
            "binomial(a,b) binomial(b,c) equals binomial(a,c) "
            "binomial(a-c,b-c) for all c <= b <= a",
            {"a_max": 24},
            _run_eq14,
            lambda p: float(p["a_max"] + 1) ** 3,
        ),
        _spec(
            "kr",
            "K_r = (r/2) binomial(2r,r) makes K*binomial(2n,n)/(n+r) integral "
            "for every n in the window, and every smaller K fails somewhere "
            "in it",
            {"n_max": 500, "r_max": 5},
            _run_kr,
            _est_kr,
        ),
        _spec(
            "remark1",
            "the weight-1 Gessel convolution at n=3, r=2 is 1170: divisible "
            "by 6 but by neither 12 nor 20",
            {},
            _run_remark1,
            lambda p: 50.0,
        ),
        _spec(
            "paths",
            "both forbidden-diagonal path counts equal the Gessel number, and "
            "explicit enumeration matches the counting DP on small boards",
            {"n_max": 10, "r_max": 6},
            _run_paths,
            _est_paths,
            minimums={"n_max": 1, "r_max": 1},
        ),
    )
}


def suite_names() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def _resolve_params(spec: SuiteSpec, sweep: SweepRange) -> tuple[dict[str, int], list[str]]:
    params: dict[str, int] = {}
    notes: list[str] = []
    for pname, default in spec.defaults.items():
        requested = getattr(sweep, pname)
        value = default if requested is None else requested
        minimum = spec.minimums[pname]
        if value < minimum:
            notes.append(f"{pname} raised to {minimum} (suite minimum)")
            value = minimum
        params[pname] = value
    return params, notes


def _resolve_budget(budget_ms: float | None) -> float:
    if budget_ms is not None:
        return float(budget_ms)
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is not None:
        try:
            return float(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} must be numeric, got {raw!r}") from None
    return DEFAULT_BUDGET_MS


def run_suite(
    name: str,
    sweep: SweepRange | None = None,
    *,
    bump: KernelBump | None = None,
    budget_ms: float | None = None,
) -> VerificationReport:
    """Run one suite and return its report.

    Raises UnknownSuite for an unregistered name and RangeTooLarge when the
    resolved range's estimated runtime exceeds the budget.
    """
    spec = _REGISTRY.get(name)
    if spec is None:
        raise UnknownSuite(
            f"unknown suite {name!r}; known suites: {', '.join(_REGISTRY)}"
        )
    sweep = sweep if sweep is not None else SweepRange()
    params, notes = _resolve_params(spec, sweep)
    budget = _resolve_budget(budget_ms)
    est_ms = spec.estimator(params) * _EST_US_PER_TERM / 1000.0
    if est_ms > budget:
        raise RangeTooLarge(
            f"suite {name!r} at {params} is estimated at ~{est_ms:.0f} ms, over "
            f"the {budget:.0f} ms budget; shrink the range or raise {BUDGET_ENV_VAR}"
        )
    ctx = _SuiteCtx(params, sweep.seed, bump)
    ctx.notes.extend(notes)
    start = time.perf_counter()
    spec.runner(ctx)
    elapsed = (time.perf_counter() - start) * 1000.0
    rng_range = dict(params)
    if spec.uses_seed:
        rng_range["seed"] = sweep.seed
    return VerificationReport(
        suite=name,
        claim=spec.claim,
        range=rng_range,
        cases_checked=ctx.cases,
        violations=ctx.violations,
        elapsed_ms=elapsed,
        notes=ctx.notes,
    )


def run_all(
    sweep: SweepRange | None = None,
    *,
    bump: KernelBump | None = None,
    budget_ms: float | None = None,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Run every registered suite, in registry order.

    A suite that raises (over budget, or a genuine bug) is converted into a
    failing report rather than aborting the batch. jobs > 1 runs suites on a
    thread pool; reports still come back in registry order.
    """

    def one(name: str) -> VerificationReport:
        try:
            return run_suite(name, sweep, bump=bump, budget_ms=budget_ms)
        except Exception as exc:
            return VerificationReport(
                suite=name,
                claim=_REGISTRY[name].claim,
                range={},
                cases_checked=0,
                violations=[
                    {
                        "parameters": {},
                        "expected": "suite completes",
                        "actual": f"{type(exc).__name__}: {exc}",
                    }
                ],
                elapsed_ms=0.0,
                notes=[f"suite aborted: {type(exc).__name__}"],
            )

    names = list(_REGISTRY)
    if jobs <= 1:
        return [one(n) for n in names]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, names))


def reports_to_json(reports: list[VerificationReport], *, include_timings: bool = False) -> str:
    """Deterministic JSON for a batch of reports.

    With include_timings False (the default) the output is byte-identical
    across runs of the same ranges and seed.
    """
    payload = {
        "passed": all(r.passed for r in reports),
        "total_cases": sum(r.cases_checked for r in reports),
        "total_violations": sum(len(r.violations) for r in reports),
        "suites": [r.to_json_dict(include_timings=include_timings) for r in reports],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def reports_to_csv(reports: list[VerificationReport]) -> str:
    """CSV of violations only: header suite,params,expected,actual and one
    row per violation. A fully green batch serializes as just the header."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["suite", "params", "expected", "actual"])
    for report in reports:
        for violation in report.violations:
            writer.writerow(
                [
                    report.suite,
                    json.dumps(violation["parameters"], sort_keys=True),
                    violation["expected"],
                    violation["actual"],
                ]
            )
    return buf.getvalue()
