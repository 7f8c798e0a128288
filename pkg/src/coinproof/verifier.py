"""What the observer can still believe after watching a strategy.

The main path counts admissible situations at the level of observational
classes: a situation is a vector of per-class fake counts, weighted by the
number of coin-level placements it stands for. ``oracle_admissible_count``
is a deliberately naive coin-level enumeration used to cross-check it.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, NamedTuple, Sequence

from .combinatorics import format_ratio
from .model import (
    ObservationalClassing,
    Strategy,
    Syndrome,
    ensure_valid,
    expected_syndrome,
    refine,
    sign,
)

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "AdmissibleCount",
    "AdmissibleReport",
    "SubsetRow",
    "InconsistentStrategyError",
    "OracleRangeError",
    "admissible_count",
    "oracle_admissible_count",
    "verify",
    "subset_table",
    "best_order",
    "oracle_cap_from_env",
]

DEFAULT_ORACLE_CAP = 500_000
MAX_SUBSET_WEIGHINGS = 20


class InconsistentStrategyError(ValueError):
    """The prover's own arrangement is not admissible under its syndrome."""


class OracleRangeError(ValueError):
    """Coin-level enumeration would exceed the configured cap."""


def oracle_cap_from_env(default: int = DEFAULT_ORACLE_CAP) -> int:
    raw = os.environ.get("COINPROOF_ORACLE_CAP")
    if not raw:
        return default
    cap = int(raw)
    if cap <= 0:
        raise ValueError("COINPROOF_ORACLE_CAP must be positive")
    return cap


class AdmissibleCount(NamedTuple):
    count: int
    per_class: tuple[tuple[int, ...], ...]


def _class_level_count(
    sizes: Sequence[int],
    columns: Sequence[Sequence[int]],
    n: int,
    syndrome: Syndrome,
) -> AdmissibleCount:
    p, m = len(sizes), len(syndrome)
    empty = AdmissibleCount(0, tuple(() for _ in range(p)))
    if not 0 <= n <= sum(sizes):
        return empty

    last = [-1] * m
    for k, col in enumerate(columns):
        for j, c in enumerate(col):
            if c:
                last[j] = k
    if any(last[j] == -1 and syndrome[j] != 0 for j in range(m)):
        return empty
    closing = [[j for j in range(m) if last[j] == k] for k in range(p)]

    # suffix capacities: coins available from class k onward, per pan
    lcap = [[0] * m for _ in range(p + 1)]
    rcap = [[0] * m for _ in range(p + 1)]
    cap = [0] * (p + 1)
    for k in range(p - 1, -1, -1):
        cap[k] = cap[k + 1] + sizes[k]
        for j in range(m):
            c = columns[k][j]
            lcap[k][j] = lcap[k + 1][j] + (sizes[k] if c == -1 else 0)
            rcap[k][j] = rcap[k + 1][j] + (sizes[k] if c == 1 else 0)

    def reachable(k: int, rem: int, diffs: Sequence[int]) -> bool:
        for j in range(m):
            if last[j] < k:
                continue
            lo = diffs[j] - min(rem, rcap[k][j])
            hi = diffs[j] + min(rem, lcap[k][j])
            s = syndrome[j]
            if s == 0 and not lo <= 0 <= hi:
                return False
            if s == 1 and hi <= 0:
                return False
            if s == -1 and lo >= 0:
                return False
        return True

    memo: dict[tuple, tuple[int, tuple[frozenset, ...]]] = {}

    def go(k: int, rem: int, diffs: tuple[int, ...]) -> tuple[int, tuple[frozenset, ...]]:
        if k == p:
            return (1, ()) if rem == 0 else (0, ())
        key = (k, rem, diffs)
        if key in memo:
            return memo[key]
        g, col = sizes[k], columns[k]
        total = 0
        here: set[int] = set()
        tails: list[set[int]] = [set() for _ in range(p - k - 1)]
        for x in range(max(0, rem - cap[k + 1]), min(g, rem) + 1):
            nd = list(diffs)
            for j, c in enumerate(col):
                if c:
                    nd[j] -= c * x
            ok = True
            for j in closing[k]:
                if sign(nd[j]) != syndrome[j]:
                    ok = False
                    break
                nd[j] = 0
            if not ok or not reachable(k + 1, rem - x, nd):
                continue
            sub_count, sub_sets = go(k + 1, rem - x, tuple(nd))
            if sub_count == 0:
                continue
            total += math.comb(g, x) * sub_count
            here.add(x)
            for acc, s in zip(tails, sub_sets):
                acc |= s
        result = (total, (frozenset(here), *map(frozenset, tails)) if total else ())
        memo[key] = result
        return result

    if not reachable(0, n, (0,) * m):
        return empty
    total, sets = go(0, n, (0,) * m)
    if not total:
        return empty
    return AdmissibleCount(total, tuple(tuple(sorted(s)) for s in sets))


def admissible_count(
    strategy: Strategy,
    n: int,
    syndrome: Syndrome,
    classing: ObservationalClassing | None = None,
) -> AdmissibleCount:
    """|W(s | Z_n, A)|: the number of n-fake situations producing ``syndrome``.

    Also returns, per observational class, the sorted fake counts that class
    takes across the consistent situations.
    """
    ensure_valid(strategy)
    if len(syndrome) != strategy.m:
        raise ValueError(f"syndrome length {len(syndrome)} does not match {strategy.m} weighings")
    if any(s not in (-1, 0, 1) for s in syndrome):
        raise ValueError(f"syndrome entries must be -1, 0 or 1: {syndrome}")
    if not 0 <= n <= strategy.t:
        raise ValueError(f"fake-count hypothesis n={n} outside [0, {strategy.t}]")
    classing = classing or refine(strategy)
    return _class_level_count(classing.sizes, classing.columns, n, tuple(syndrome))


def oracle_admissible_count(
    strategy: Strategy,
    n: int,
    syndrome: Syndrome,
    cap: int = DEFAULT_ORACLE_CAP,
) -> int:
    """Brute force: try every n-subset of coins as the fakes, weigh literally."""
    ensure_valid(strategy)
    if len(syndrome) != strategy.m:
        raise ValueError(f"syndrome length {len(syndrome)} does not match {strategy.m} weighings")
    t = strategy.t
    total = math.comb(t, n) if 0 <= n <= t else 0
    if total > cap:
        raise OracleRangeError(f"oracle out of range: C({t},{n}) = {total} exceeds cap {cap}")

    ranges = strategy.coin_ranges()
    pans = []
    for w in strategy.weighings:
        side = [0] * t
        for pid in w.left:
            for i in ranges[pid]:
                side[i] = -1
        for pid in w.right:
            for i in ranges[pid]:
                side[i] = 1
        pans.append(side)

    target = tuple(syndrome)
    hits = 0
    for fakes in itertools.combinations(range(t), n):
        result = []
        for side in pans:
            left = sum(1 for i in fakes if side[i] == -1)
            right = sum(1 for i in fakes if side[i] == 1)
            result.append((left > right) - (left < right))
        if tuple(result) == target:
            hits += 1
    return hits


@dataclass(frozen=True)
class AdmissibleReport:
    syndrome: Syndrome
    t: int
    f: int
    d: int
    count_f: int
    count_d: int
    success: bool
    discreet: bool
    X: Fraction
    R: Fraction
    class_sizes: tuple[int, ...]
    per_class: tuple[tuple[int, ...], ...]

    @property
    def prior_f(self) -> int:
        return math.comb(self.t, self.f)

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "f": self.f,
            "d": self.d,
            "syndrome": list(self.syndrome),
            "count_f": str(self.count_f),
            "count_d": str(self.count_d),
            "success": self.success,
            "discreet": self.discreet,
            "X": {"fraction": format_ratio(self.X), "decimal": float(self.X)},
            "R": {"fraction": format_ratio(self.R), "decimal": float(self.R)},
            "class_sizes": list(self.class_sizes),
            "per_class": [list(s) for s in self.per_class],
        }


def verify(strategy: Strategy, classing: ObservationalClassing | None = None) -> AdmissibleReport:
    """Decide whether the realized syndrome proves f and not d, and how much it leaks.

    Success means no d-fake situation survives the realized syndrome (and the
    prover's own arrangement does). Discreet means every observational class
    can hold at least one fake in some surviving situation and at least one
    real coin in another, so no single coin's identity is pinned down.
    """
    ensure_valid(strategy)
    classing = classing or refine(strategy)
    syndrome = expected_syndrome(strategy)
    res_f = admissible_count(strategy, strategy.f, syndrome, classing)
    res_d = admissible_count(strategy, strategy.d, syndrome, classing)
    if res_f.count == 0:
        raise InconsistentStrategyError("strategy inconsistent with own arrangement")
    success = res_d.count == 0 and res_f.count > 0
    hides_all = all(
        vals and vals[-1] >= 1 and vals[0] <= g - 1 for vals, g in zip(res_f.per_class, classing.sizes)
    )
    X = Fraction(math.comb(strategy.t, strategy.f), res_f.count)
    return AdmissibleReport(
        syndrome=syndrome,
        t=strategy.t,
        f=strategy.f,
        d=strategy.d,
        count_f=res_f.count,
        count_d=res_d.count,
        success=success,
        discreet=success and hides_all,
        X=X,
        R=1 - 1 / X,
        class_sizes=classing.sizes,
        per_class=res_f.per_class,
    )


@dataclass(frozen=True)
class SubsetRow:
    weighings: tuple[int, ...]  # 0-based indices into the strategy's weighings
    syndrome: Syndrome
    count_f: int
    count_d: int

    def label(self) -> str:
        if not self.weighings:
            return "{}"
        return ",".join(f"h{j + 1}" for j in self.weighings)

    def to_dict(self) -> dict[str, Any]:
        return {
            "weighings": list(self.weighings),
            "syndrome": list(self.syndrome),
            "count_f": str(self.count_f),
            "count_d": str(self.count_d),
        }


def _prefix_counts(strategy: Strategy, indices: Sequence[int], full: Syndrome) -> tuple[int, int]:
    sub = strategy.with_weighings(strategy.weighings[j] for j in indices)
    syn = tuple(full[j] for j in indices)
    classing = refine(sub)
    return (
        admissible_count(sub, strategy.f, syn, classing).count,
        admissible_count(sub, strategy.d, syn, classing).count,
    )


def subset_table(strategy: Strategy) -> list[SubsetRow]:
    """Admissible counts for every subset of the weighings, smallest subsets first.

    Order within a subset is irrelevant: the admissible set is the
    intersection of the per-weighing sets. Each subset is evaluated under
    the corresponding part of the realized syndrome.
    """
    ensure_valid(strategy)
    if strategy.m > MAX_SUBSET_WEIGHINGS:
        raise ValueError(f"subset table needs m <= {MAX_SUBSET_WEIGHINGS}, got {strategy.m}")
    full = expected_syndrome(strategy)
    rows = []
    for size in range(strategy.m + 1):
        for idx in itertools.combinations(range(strategy.m), size):
            cf, cd = _prefix_counts(strategy, idx, full)
            rows.append(SubsetRow(idx, tuple(full[j] for j in idx), cf, cd))
    return rows


def best_order(strategy: Strategy) -> list[int]:
    """Greedy weighing order keeping as many f-fake situations alive as possible at each step.

    Ties go to the lower original index.
    """
    ensure_valid(strategy)
    if strategy.m > MAX_SUBSET_WEIGHINGS:
        raise ValueError(f"best_order needs m <= {MAX_SUBSET_WEIGHINGS}, got {strategy.m}")
    full = expected_syndrome(strategy)
    order: list[int] = []
    remaining = list(range(strategy.m))
    while remaining:
        best_j, best_count = remaining[0], -1
        for j in remaining:
            cf, _ = _prefix_counts(strategy, sorted(order + [j]), full)
            if cf > best_count:
                best_j, best_count = j, cf
        order.append(best_j)
        remaining.remove(best_j)
    return order
