"""Exact counting primitives: binomials, series multisection, and ratio helpers.

All counts are plain Python ``int`` (arbitrary precision) and all ratios are
:class:`fractions.Fraction`, which is always kept in lowest terms.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "binomial",
    "multisection_sum",
    "multisection_trig",
    "ratio",
    "format_ratio",
    "parse_ratio",
    "decimal",
]


def binomial(n: int, k: int) -> int:
    """Return C(n, k), with C(n, k) = 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_modulus(m: int, p: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got m={m}")
    if not 0 <= p < m:
        raise ValueError(f"residue must satisfy 0 <= p < m, got p={p}, m={m}")


def multisection_sum(n: int, m: int, p: int = 0) -> int:
    """Sum of C(n, p + s*m) over s >= 0, by direct summation."""
    _check_modulus(m, p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got n={n}")
    return sum(math.comb(n, k) for k in range(p, n + 1, m))


def multisection_trig(n: int, m: int, p: int = 0) -> float:
    """Cosine closed form of :func:`multisection_sum`.

    Floating point; agrees with the exact sum to roughly 1e-12 relative for
    the sizes used here, but it is an approximation.
    """
    _check_modulus(m, p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got n={n}")
    total = 0.0
    for j in range(m):
        theta = math.pi * j / m
        total += math.cos(math.pi * (n - 2 * p) * j / m) * (2.0 * math.cos(theta)) ** n
    return total / m


def ratio(numerator: int, denominator: int) -> Fraction:
    if denominator <= 0:
        raise ValueError("ratio denominator must be positive")
    return Fraction(numerator, denominator)


def format_ratio(value: Fraction) -> str:
    """Serialize as ``"num/den"`` (lowest terms, den shown even when 1)."""
    return f"{value.numerator}/{value.denominator}"


def parse_ratio(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"expected 'num/den', got {text!r}")
    return ratio(int(num), int(den))


def decimal(value: Fraction, digits: int = 4) -> str:
    """Presentation-only rendering, ``digits`` places after the point."""
    return f"{float(value):.{digits}f}"
