"""Threshold formulas: minimal shallowness bounds, partition sizes,
co-degree thresholds and the Lambert W function.

Minimal-t searches locate the boundary with log-gamma floats and then, when
the factorials stay affordable, certify both sides of the boundary in exact
arithmetic.  Exactness with transcendental constants (e, ln r, 1/e) is
obtained from directed-rounding decimal brackets: the predicate is accepted
only when it holds against the unfavourable end of every bracket, with the
precision doubled until the comparison separates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from math import comb, exp, factorial, lgamma, log, sqrt
from typing import Union

__all__ = [
    "ThresholdResult",
    "CodegreeThresholds",
    "lambert_w",
    "girth4_constant",
    "min_t_general",
    "min_t_girth4",
    "t_formula_general",
    "t_formula_girth4",
    "partition_k",
    "shallow_size_guarantee",
    "codegree_thresholds",
    "rrs_matching_threshold",
    "bipartite_sufficient",
]

Real = Union[int, float, Fraction]

EXACT_T_CAP = 20_000  # largest t for which boundary checks use big integers


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


# ---------------------------------------------------------------------------
# Lambert W


def lambert_w(x: float, max_iter: int = 50) -> float:
    """Principal branch of the Lambert W function (inverse of w * e^w).

    Halley iteration from a piecewise initial guess: a branch-point series
    near -1/e, log(x) - log(log(x)) for large x, log1p(x) in between.
    Converged result satisfies |W e^W - x| <= 1e-12 * max(1, |x|).
    """
    branch = -exp(-1.0)
    if x < branch:
        if x > branch - 1e-15:  # allow representation noise at the branch point
            return -1.0
        raise ValueError(f"lambert_w defined for x >= -1/e, got {x}")
    if x == 0.0:
        return 0.0
    if x < -0.25:
        p = sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3
    elif x < math.e:
        w = math.log1p(x)
    else:
        lx = log(x)
        w = lx - log(lx)
    for _ in range(max_iter):
        ew = exp(w)
        f = w * ew - x
        if f == 0.0:
            break
        w1 = w + 1.0
        if w1 == 0.0:
            w += 1e-9
            continue
        step = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1))
        w -= step
        if abs(step) <= 1e-16 * (1.0 + abs(w)):
            break
    if abs(w * exp(w) - x) > 1e-12 * max(1.0, abs(x)):
        raise ArithmeticError(f"lambert_w failed to converge at x={x}")
    return w


def girth4_constant() -> float:
    """e^(1 + W(2/e)) = 4.319..., the girth-4 shallowness constant."""
    return exp(1.0 + lambert_w(2.0 / math.e))


# ---------------------------------------------------------------------------
# Directed-rounding brackets for e, 1/e and ln r


def _bracket(compute, digits: int):
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_FLOOR
        lo = compute()
        ctx.rounding = ROUND_CEILING
        hi = compute()
    return Fraction(lo), Fraction(hi)


def _e_bracket(digits):
    return _bracket(lambda: Decimal(1).exp(), digits)


def _einv_bracket(digits):
    return _bracket(lambda: Decimal(-1).exp(), digits)


def _ln_bracket(x: int, digits):
    return _bracket(lambda: Decimal(x).ln(), digits)


class _Ambiguous(Exception):
    pass


def _certify(lhs: Fraction, rhs_lo, rhs_hi) -> bool:
    if lhs >= rhs_hi:
        return True
    if lhs < rhs_lo:
        return False
    raise _Ambiguous


def _exact_loop(check, start_digits: int = 30, max_digits: int = 10_000) -> bool:
    digits = start_digits
    while True:
        try:
            return check(digits)
        except _Ambiguous:
            digits *= 2
            if digits > max_digits:
                raise ArithmeticError(
                    "boundary not separable within precision budget"
                ) from None


# ---------------------------------------------------------------------------
# The two shallow-hitting inequalities and the partition inequality
#
#   general:  t!/(t+1) >= e * mu^(t+1) * r^(t+3)
#   girth 4:  t!/(t+1) >= e * r^2 * (eta*(ln r + 1 + 1/e))^(t+1)
#   partition: (t!/(t+1)) * (k/Delta)^t >= e * r


def eq_general_holds_log(t: int, mu: float, r: int) -> bool:
    lhs = lgamma(t + 1) - log(t + 1)
    return lhs >= 1.0 + (t + 1) * log(mu) + (t + 3) * log(r)


def eq_general_holds_exact(t: int, mu: Real, r: int) -> bool:
    mu_f = Fraction(mu)
    lhs = Fraction(factorial(t), t + 1)
    core = mu_f ** (t + 1) * Fraction(r) ** (t + 3)

    def check(digits):
        e_lo, e_hi = _e_bracket(digits)
        return _certify(lhs, e_lo * core, e_hi * core)

    return _exact_loop(check)


def eq_girth4_holds_log(t: int, eta: float, r: int) -> bool:
    lhs = lgamma(t + 1) - log(t + 1)
    ell = log(r) + 1.0 + exp(-1.0)
    return lhs >= 1.0 + 2.0 * log(r) + (t + 1) * (log(eta) + log(ell))


def eq_girth4_holds_exact(t: int, eta: Real, r: int) -> bool:
    eta_f = Fraction(eta)
    lhs = Fraction(factorial(t), t + 1)

    def check(digits):
        e_lo, e_hi = _e_bracket(digits)
        ln_lo, ln_hi = _ln_bracket(r, digits)
        ei_lo, ei_hi = _einv_bracket(digits)
        base_lo = eta_f * (ln_lo + 1 + ei_lo)
        base_hi = eta_f * (ln_hi + 1 + ei_hi)
        rhs_lo = e_lo * r * r * base_lo ** (t + 1)
        rhs_hi = e_hi * r * r * base_hi ** (t + 1)
        return _certify(lhs, rhs_lo, rhs_hi)

    return _exact_loop(check)


def eq_partition_holds_exact(k: int, max_degree: int, r: int, t: int) -> bool:
    lhs = Fraction(factorial(t), t + 1) * Fraction(k, max_degree) ** t

    def check(digits):
        e_lo, e_hi = _e_bracket(digits)
        return _certify(lhs, e_lo * r, e_hi * r)

    return _exact_loop(check)


@dataclass(frozen=True)
class ThresholdResult:
    """Minimal t satisfying an inequality, with its closed-form companion.

    ``exact_boundary`` records whether both sides of the boundary
    (t satisfies, t-1 violates) were certified in exact arithmetic; for
    very large t the log-domain check is used instead.
    """

    t: int
    closed_form: int
    exact_boundary: bool


def _search_min_t(holds_log, holds_exact, hi_hint: int) -> tuple:
    hi = max(hi_hint, 2)
    while not holds_log(hi):
        hi *= 2
        if hi > 10**9:
            raise ArithmeticError("no satisfying t below 1e9")
    lo = 1  # both inequalities fail at t=1 for every admissible parameter
    if holds_log(1):
        return 1, False
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds_log(mid):
            hi = mid
        else:
            lo = mid
    exact = False
    if hi <= EXACT_T_CAP:
        while hi > 1 and holds_exact(hi - 1):
            hi -= 1
        while not holds_exact(hi):
            hi += 1
        exact = True
    return hi, exact


def t_formula_general(mu: float, r: int) -> int:
    """Closed-form t = 1 + ceil(e*mu*r * (e^2 mu^2 r^4)^(1/(e*mu*r)));
    provably satisfies the general inequality and is e*mu*r*(1+o(1))."""
    if mu < 1 or r < 2:
        raise ValueError("requires mu >= 1 and r >= 2")
    emr = math.e * mu * r
    val = emr * exp((2.0 + 2.0 * log(mu) + 4.0 * log(r)) / emr)
    return 1 + math.ceil(val)


def min_t_general(mu: Real, r: int) -> ThresholdResult:
    """Smallest integer t with t!/(t+1) >= e * mu^(t+1) * r^(t+3)."""
    if mu < 1 or r < 2:
        raise ValueError("requires mu >= 1 and r >= 2")
    mu_float = float(mu)
    closed = t_formula_general(mu_float, r)
    t, exact = _search_min_t(
        lambda t: eq_general_holds_log(t, mu_float, r),
        lambda t: eq_general_holds_exact(t, mu, r),
        closed,
    )
    return ThresholdResult(t=t, closed_form=closed, exact_boundary=exact)


def t_formula_girth4(eta: float, r: int) -> int:
    """Closed-form t = 1 + ceil(e^(1+h) * eta * (ln r + 1 + 1/e)) with
    h = W((2/e) * (1/eta + ln(eta*L)/(eta*L))), L the log factor; provably
    satisfies the girth-4 inequality."""
    if eta < 1 or r < 2:
        raise ValueError("requires eta >= 1 and r >= 2")
    ell = log(r) + 1.0 + exp(-1.0)
    h = lambert_w((2.0 / math.e) * (1.0 / eta + log(eta * ell) / (eta * ell)))
    return 1 + math.ceil(exp(1.0 + h) * eta * ell)


def min_t_girth4(eta: Real, r: int) -> ThresholdResult:
    """Smallest integer t with
    t!/(t+1) >= e * r^2 * (eta * (ln r + 1 + 1/e))^(t+1)."""
    if eta < 1 or r < 2:
        raise ValueError("requires eta >= 1 and r >= 2")
    eta_float = float(eta)
    closed = t_formula_girth4(eta_float, r)
    t, exact = _search_min_t(
        lambda t: eq_girth4_holds_log(t, eta_float, r),
        lambda t: eq_girth4_holds_exact(t, eta, r),
        closed,
    )
    return ThresholdResult(t=t, closed_form=closed, exact_boundary=exact)


def partition_k(max_degree: int, r: int, t: int) -> int:
    """Number of colors k = ceil((e*Delta/t) * ((t+1)/sqrt(2 pi t) * e*r)^(1/t))
    guaranteeing a partition of the edges into k t-shallow classes.

    Satisfaction of the partition inequality at the returned k is certified
    exactly (the ceiling is nudged up if float rounding left it short).
    """
    if not max_degree >= t >= 1 or r < 2:
        raise ValueError("requires Delta >= t >= 1 and r >= 2")
    val = (math.e * max_degree / t) * (
        (t + 1) / sqrt(2.0 * math.pi * t) * math.e * r
    ) ** (1.0 / t)
    k = max(1, math.ceil(val))
    while not eq_partition_holds_exact(k, max_degree, r, t):
        k += 1
    return k


def shallow_size_guarantee(n: int, r: int, t: int, delta: int, max_degree: int) -> int:
    """Constructive lower bound ceil((n*delta/r) / k) on the maximum
    t-shallow edge set size, with k = partition_k(Delta, r, t)."""
    k = partition_k(max_degree, r, t)
    return _ceil_frac(Fraction(n * delta, r * k))


@dataclass(frozen=True)
class CodegreeThresholds:
    """Co-degree bounds around k = (r-1)t + 1, exact rationals.

    Hypergraphs with co-degree >= the sufficient value always have a
    t-shallow hitting edge set; gadgets achieving the lb value without one
    exist.  Ceiling decisions belong to call sites.
    """

    k: int
    uniform_lb: Fraction
    uniform_sufficient: Fraction
    partite_lb: Fraction
    partite_sufficient: int


def codegree_thresholds(n: int, r: int, t: int) -> CodegreeThresholds:
    if r < 2 or t < 2:
        raise ValueError("requires r >= 2 and t >= 2")
    k = (r - 1) * t + 1
    frac = Fraction(n, k)
    return CodegreeThresholds(
        k=k,
        uniform_lb=frac - 1,
        uniform_sufficient=frac,
        partite_lb=frac - 1,
        partite_sufficient=_ceil_frac(frac) + 1,
    )


def rrs_matching_threshold(n: int, r: int) -> int:
    """Tight minimum co-degree guaranteeing a perfect matching in an
    r-uniform hypergraph on n vertices (four-case formula), r >= 3, r | n."""
    if r < 3:
        raise ValueError("requires r >= 3")
    if n % r != 0:
        raise ValueError(f"r={r} must divide n={n}")
    half = Fraction(n, 2)
    if r % 4 == 0 and (n // r) % 2 == 1:
        value = half + 3 - r
    elif r % 2 == 1 and n % 2 == 1 and ((n - 1) // 2) % 2 == 1:
        value = half + Fraction(5, 2) - r
    elif r % 2 == 1 and n % 2 == 1 and ((n - 1) // 2) % 2 == 0:
        value = half + Fraction(3, 2) - r
    else:
        value = half + 2 - r
    assert value.denominator == 1
    return int(value)


def bipartite_sufficient(
    size_a: int, size_b: int, delta_a: int, delta_b: int, t: int
) -> bool:
    """Degree condition guaranteeing a t-shallow hitting edge set in a
    bipartite graph: |B| <= t|A|, t*dA + dB >= |A| and dA + t*dB >= |B|."""
    if size_a > size_b:
        raise ValueError("requires |A| <= |B|")
    return (
        size_b <= t * size_a
        and t * delta_a + delta_b >= size_a
        and delta_a + t * delta_b >= size_b
    )
