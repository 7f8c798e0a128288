"""Average sensitivity of MOD*_m, and the order of the oblivious-weighing lower bound.

MOD*_m outputs 1 iff the number of 0 bits (fake coins) is a multiple of m.
``avg_sensitivity_enum`` flips every bit of every input literally;
``avg_sensitivity_exact`` uses the binomial multisection sum.

``measurement_bound_order`` reports alpha / sqrt(n) as-is. It is an order
term of an Omega bound: constant factors are unknown and not included.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .combinatorics import format_ratio, multisection_sum

__all__ = [
    "MAX_ENUM_N",
    "SensitivityResult",
    "mod_m_star",
    "sensitivity_at",
    "avg_sensitivity_enum",
    "avg_sensitivity_exact",
    "avg_sensitivity_trig",
    "measurement_bound_order",
    "sensitivity_result",
]

MAX_ENUM_N = 24

Bits = str | Sequence[int]


def _check_m(m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got m={m}")


def _bits(bits: Bits) -> list[int]:
    out = [int(b) for b in bits]
    if any(b not in (0, 1) for b in out):
        raise ValueError(f"bits must be 0/1, got {bits!r}")
    return out


def mod_m_star(bits: Bits, m: int) -> int:
    _check_m(m)
    values = _bits(bits)
    return int(values.count(0) % m == 0)


def sensitivity_at(bits: Bits, m: int) -> int:
    """Number of single-bit flips that change MOD*_m."""
    _check_m(m)
    values = _bits(bits)
    base = mod_m_star(values, m)
    changed = 0
    for i in range(len(values)):
        flipped = values.copy()
        flipped[i] ^= 1
        changed += mod_m_star(flipped, m) != base
    return changed


def avg_sensitivity_enum(n: int, m: int) -> Fraction:
    """Mean sensitivity over all 2^n inputs, by enumerating every flip."""
    _check_m(m)
    if not 0 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration needs 0 <= n <= {MAX_ENUM_N}, got n={n}")
    if n == 0:
        return Fraction(0)
    words = np.arange(1 << n, dtype=np.uint32)
    zeros = n - np.bitwise_count(words).astype(np.int64)
    out = (zeros % m == 0)
    total = 0
    for i in range(n):
        total += int(np.count_nonzero(out != out[words ^ np.uint32(1 << i)]))
    return Fraction(total, 1 << n)


def avg_sensitivity_exact(n: int, m: int) -> Fraction:
    """n * sum_s C(n, s*m) / 2^(n-1)."""
    _check_m(m)
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    return Fraction(n * multisection_sum(n, m, 0), 2 ** (n - 1))


def avg_sensitivity_trig(n: int, m: int) -> float:
    """(2n/m) * [1 + sum_{j=1}^{m-1} cos(pi n j / m) cos^n(pi j / m)]."""
    _check_m(m)
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    tail = sum(math.cos(math.pi * n * j / m) * math.cos(math.pi * j / m) ** n for j in range(1, m))
    return 2 * n / m * (1 + tail)


def measurement_bound_order(n: int, m: int) -> float:
    return float(avg_sensitivity_exact(n, m)) / math.sqrt(n)


@dataclass(frozen=True)
class SensitivityResult:
    n: int
    m: int
    exact: Fraction
    trig: float
    asymptote: Fraction
    bound_order: float

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "exact": {"fraction": format_ratio(self.exact), "decimal": float(self.exact)},
            "trig": self.trig,
            "asymptote": {"fraction": format_ratio(self.asymptote), "decimal": float(self.asymptote)},
            "bound_order": self.bound_order,
        }


def sensitivity_result(n: int, m: int) -> SensitivityResult:
    exact = avg_sensitivity_exact(n, m)
    return SensitivityResult(
        n=n,
        m=m,
        exact=exact,
        trig=avg_sensitivity_trig(n, m),
        asymptote=Fraction(2 * n, m),
        bound_order=float(exact) / math.sqrt(n),
    )
