"""Closed-form counts and bounds, used as fast predictors and as cross-checks
against the verifier."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .combinatorics import binomial

__all__ = [
    "SingleWeighingCounts",
    "balanced_count",
    "unbalanced_count",
    "single_weighing_counts",
    "theorem1_bounds",
    "single_weighing_cap",
    "strategy6_X",
    "strategy6_X_limit",
    "theorem2_exponents",
    "theorem2_lower_bound",
    "indiscreet_exact_count",
    "three_family_count",
    "lincomb_count",
    "pyber_bound",
]


def _check_single(t: int, f: int, n: int) -> None:
    if not 0 <= f <= t:
        raise ValueError(f"need 0 <= f <= t, got f={f}, t={t}")
    if not 1 <= n <= t // 2:
        raise ValueError(f"need 1 <= n <= t//2, got n={n}, t={t}")


def balanced_count(t: int, f: int, n: int) -> int:
    """f-fake situations that balance one weighing of n coins against n."""
    _check_single(t, f, n)
    return sum(binomial(n, i) ** 2 * binomial(t - 2 * n, f - 2 * i) for i in range(n + 1))


def unbalanced_count(t: int, f: int, n: int) -> int:
    """f-fake situations that tip one n-vs-n weighing a given way (either way, by symmetry)."""
    _check_single(t, f, n)
    rest = t - 2 * n
    total = 0
    for i in range(n):
        ci = binomial(n, i)
        for j in range(i + 1, n + 1):
            total += ci * binomial(n, j) * binomial(rest, f - i - j)
    return total


@dataclass(frozen=True)
class SingleWeighingCounts:
    t: int
    f: int
    n: int
    balanced: int
    unbalanced: int


def single_weighing_counts(t: int, f: int, n: int) -> SingleWeighingCounts:
    return SingleWeighingCounts(t, f, n, balanced_count(t, f, n), unbalanced_count(t, f, n))


def theorem1_bounds(t: int, f: int) -> tuple[int, int]:
    """(lower, strict upper) on the surviving f-fake situations of a successful discreet strategy."""
    if not 1 < f < t - 1:
        raise ValueError(f"bounds need 1 < f < t-1, got f={f}, t={t}")
    lower = max(-(-t // f), -(-t // (t - f)))
    return lower, math.comb(t, f)


def single_weighing_cap(t: int, f: int, balanced_only: bool = False) -> int:
    """Most f-fake situations any single first weighing can leave alive.

    With ``balanced_only`` only balanced outcomes are considered, which is the
    relevant cap when unbalanced weighings are known to be indiscreet.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got t={t}")
    best = 0
    for n in range(1, t // 2 + 1):
        best = max(best, balanced_count(t, f, n))
        if not balanced_only:
            best = max(best, unbalanced_count(t, f, n))
    return best


def _check_divides(a: int, **values: int) -> None:
    if a < 2:
        raise ValueError(f"need a >= 2, got a={a}")
    for name, v in values.items():
        if v % a:
            raise ValueError(f"a={a} must divide {name}={v}")


def strategy6_X(t: int, f: int, a: int) -> Fraction:
    """Revealing factor of splitting into a equal piles with equal fakes."""
    _check_divides(a, t=t, f=f)
    return Fraction(math.comb(t, f), math.comb(t // a, f // a) ** a)


def strategy6_X_limit(f: int, a: int) -> Fraction:
    """Limit of :func:`strategy6_X` as t grows without bound."""
    _check_divides(a, f=f)
    q = f // a
    return Fraction(f**f, math.factorial(f)) * Fraction(math.factorial(q), q**q) ** a


def _check_theorem2(t: int, f: int, d: int, a: int) -> None:
    problems = []
    if a < 2:
        problems.append("a >= 2")
    else:
        if f % a:
            problems.append("a | f")
        if d % a == 0:
            problems.append("a does not divide d")
        if t % a == 0:
            problems.append("a does not divide t")
        if not t > 2 * a:
            problems.append("t > 2a")
        if not t // a - (-(-d // a)) > f / a:
            problems.append("floor(t/a) - ceil(d/a) > f/a")
    if problems:
        raise ValueError(f"precondition failed for (t={t}, f={f}, d={d}, a={a}): " + ", ".join(problems))


def theorem2_exponents(t: int, d: int, a: int) -> tuple[int, int]:
    """(e1, e2): how many of the a piles lose ceil(d/a) vs floor(d/a) borrowed coins."""
    e1 = a * (t // a) - a * (d // a) + d + 1 - t
    return e1, a - e1


def theorem2_lower_bound(t: int, f: int, d: int, a: int) -> int:
    """Surviving f-fake situations guaranteed by the equal-piles-plus-leftover indiscreet strategy."""
    _check_theorem2(t, f, d, a)
    e1, e2 = theorem2_exponents(t, d, a)
    if e1 < 0:
        # leftover pile already exceeds d+1 coins; the product would need a negative power
        raise ValueError(
            f"precondition failed for (t={t}, f={f}, d={d}, a={a}): exponent e1={e1} is negative "
            "(t mod a > d mod a + 1)"
        )
    q, per = t // a, f // a
    return binomial(q - (-(-d // a)), per) ** e1 * binomial(q - d // a, per) ** e2


def indiscreet_exact_count(t: int, f: int, d: int, a: int) -> int:
    """Exact count when d mod a > t mod a: only the a large piles need comparing."""
    if a < 2 or f % a or d % a == 0:
        raise ValueError(f"need a >= 2, a | f and a not dividing d; got (f={f}, d={d}, a={a})")
    if not d % a > t % a:
        raise ValueError(f"exact case needs d mod a > t mod a, got {d % a} <= {t % a}")
    return binomial(t // a, f // a) ** a


def three_family_count(t: int, f: int) -> int:
    """Surviving situations of the three-family discreet strategy, in terms of t and f."""
    if f < 1:
        raise ValueError(f"need f >= 1, got f={f}")
    k, r = divmod(t, f)
    if r == 0:
        raise ValueError(f"t={t} is a multiple of f={f}; use the equal-piles strategy")
    if k < 4:
        raise ValueError(f"need floor(t/f) >= 4, got {k}")
    return (k - 2) ** r * (k - 3) ** (f - r) + 2 ** (f - r) + 2**r


def lincomb_count(c: Sequence[int], g: Sequence[int], solutions: Iterable[Sequence[int]]) -> int:
    """Sum over solution vectors x of prod_i C(g_i, x_i)^{c_i}."""
    if len(c) != len(g):
        raise ValueError("c and g must have the same length")
    total = 0
    target = None
    for x in solutions:
        if len(x) != len(c):
            raise ValueError(f"solution {tuple(x)} has wrong length")
        if any(not 0 <= xi <= gi for xi, gi in zip(x, g)):
            raise ValueError(f"solution {tuple(x)} out of bounds for g={tuple(g)}")
        value = sum(ci * xi for ci, xi in zip(c, x))
        if target is None:
            target = value
        elif value != target:
            raise ValueError(f"solution {tuple(x)} sums to {value}, others to {target}")
        term = 1
        for ci, gi, xi in zip(c, g, x):
            term *= math.comb(gi, xi) ** ci
        total += term
    return total


def pyber_bound(n: int, m: int) -> int:
    """ceil(log3 C(n, m)) + 15m, computed without floating point."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got n={n}, m={m}")
    target = math.comb(n, m)
    e, power = 0, 1
    while power < target:
        power *= 3
        e += 1
    return e + 15 * m
