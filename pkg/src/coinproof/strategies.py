"""Generators for the known strategy families, the solution-vector solver and
the brute-force search over linear-combination configurations.

"Compare all piles with each other" is realized everywhere as a chain of
adjacent comparisons: balance is transitive for an observer who sees every
result, so the chain admits exactly the same situations with fewer weighings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .analytic import lincomb_count, theorem2_exponents
from .model import Params, Pile, Strategy, Weighing, ensure_valid
from .verifier import verify

__all__ = [
    "GeneratorError",
    "LinCombConfig",
    "SearchEntry",
    "SearchResult",
    "ConjectureRecord",
    "gen_shapovalov",
    "gen_divisibility",
    "gen_indiscreet_piles",
    "gen_three_family",
    "gen_three_family_augmented",
    "solve_solution_vectors",
    "gen_linear_combination",
    "search_lincomb",
    "conjecture1_sweep",
    "representable",
]


class GeneratorError(ValueError):
    """Generator preconditions are not met; the message names the condition."""


def _chain(groups: Sequence[Sequence[str]]) -> list[Weighing]:
    return [Weighing(groups[i], groups[i + 1]) for i in range(len(groups) - 1)]


def _require(ok: bool, condition: str) -> None:
    if not ok:
        raise GeneratorError(f"precondition failed: {condition}")


def gen_shapovalov(t: int = 80, f: int = 3, d: int = 2) -> Strategy:
    """The five-pile, three-weighing solution for 80 coins, 3 fakes vs 2."""
    _require((t, f, d) == (80, 3, 2), "this showcase strategy exists only for t=80, f=3, d=2")
    piles = [Pile("A", 10, 1), Pile("B", 10, 0), Pile("C", 20, 0), Pile("D", 20, 1), Pile("E", 20, 1)]
    weighings = [
        Weighing(["A", "C"], ["B", "D"]),
        Weighing(["A", "B"], ["E"]),
        Weighing(["C", "D"], ["A", "B", "E"]),
    ]
    return Strategy(Params(t, f, d), piles, weighings)


def gen_divisibility(t: int, f: int, d: int, a: int) -> Strategy:
    """a equal piles with f/a fakes each, compared in a chain; proves a | (fake count)."""
    _require(a >= 2, "a >= 2")
    _require(f % a == 0, f"a | f (a={a}, f={f})")
    _require(t % a == 0, f"a | t (a={a}, t={t})")
    _require(d % a != 0, f"a does not divide d (a={a}, d={d})")
    piles = [Pile(f"P{i + 1}", t // a, f // a) for i in range(a)]
    strategy = Strategy(Params(t, f, d), piles, _chain([[p.id] for p in piles]))
    ensure_valid(strategy)
    return strategy


def gen_indiscreet_piles(t: int, f: int, d: int, a: int) -> Strategy:
    """a large equal piles, a leftover pile of real coins, and borrowed real coins if needed.

    After the large piles balance and the leftover coins balance, the fake
    count is a*k or a*k + (t mod a). Only when d has the second form are
    real coins borrowed from the large piles and chained 1-vs-1 with the
    leftover so that d+1 coins are shown equal. The pile that lends more
    loses ceil(d/a) coins; the others lose floor(d/a).
    """
    _require(a >= 2, "a >= 2")
    _require(f % a == 0, f"a | f (a={a}, f={f})")
    _require(d % a != 0, f"a does not divide d (a={a}, d={d})")
    _require(t > 2 * a, f"t > 2a (t={t}, a={a})")
    q, left = divmod(t, a)
    _require(q - (-(-d // a)) > f // a, f"floor(t/a) - ceil(d/a) > f/a (t={t}, d={d}, a={a}, f={f})")

    borrow = left > 0 and d % a == left
    lends = [0] * a
    if borrow:
        e1, _ = theorem2_exponents(t, d, a)
        lends = [-(-d // a) if i < e1 else d // a for i in range(a)]
        assert sum(lends) == d + 1 - left

    piles: list[Pile] = []
    big_groups: list[list[str]] = []
    borrowed: list[str] = []
    for i in range(a):
        main = Pile(f"P{i + 1}", q - lends[i], f // a)
        extras = [Pile(f"P{i + 1}b{k + 1}", 1, 0) for k in range(lends[i])]
        piles.append(main)
        piles.extend(extras)
        big_groups.append([main.id, *(p.id for p in extras)])
        borrowed.extend(p.id for p in extras)
    leftover = [Pile(f"L{k + 1}", 1, 0) for k in range(left)]
    piles.extend(leftover)

    singles = [p.id for p in leftover] + borrowed
    weighings = _chain(big_groups) + _chain([[s] for s in singles])
    strategy = Strategy(Params(t, f, d), piles, weighings)
    ensure_valid(strategy)
    return strategy


def _three_family_layout(t: int, f: int, d: int, family: str) -> tuple[Strategy, int, int]:
    _require(f >= 2, f"f >= 2 (f={f})")
    k, r = divmod(t, f)
    if r == 0:
        raise GeneratorError(f"precondition failed: t mod f = 0 (t={t}, f={f}); use the divisibility generator")
    _require(k >= 4, f"floor(t/f) >= 4 (got {k})")
    family = family.upper()
    _require(family in ("A", "B", "C"), f"family is one of A, B, C (got {family!r})")
    piles = []
    for i in range(1, f + 1):
        low = i <= r
        sizes = {"A": k - 2 if low else k - 3, "B": 1 if low else 2, "C": 2 if low else 1}
        for fam in "ABC":
            piles.append(Pile(f"{fam}{i}", sizes[fam], 1 if fam == family else 0))
    weighings = _chain([[f"A{i}", f"B{i}"] for i in range(1, f + 1)])
    weighings += _chain([[f"B{i}", f"C{i}"] for i in range(1, f + 1)])
    return Strategy(Params(t, f, d), piles, weighings), k, r


def gen_three_family(t: int, f: int, d: int, family: str = "A") -> Strategy:
    """Piles A_i, B_i, C_i with one fake in each pile of one family.

    Shows every A_i + B_i weighs the same and every B_i + C_i weighs the
    same. Successful and discreet for 0 < d < f; for larger d it can fail,
    which the verifier reports.
    """
    strategy, _, _ = _three_family_layout(t, f, d, family)
    ensure_valid(strategy)
    return strategy


def gen_three_family_augmented(t: int, f: int, d: int, family: str = "A") -> Strategy:
    """Three-family strategy plus every cross comparison within the same size block.

    Adds A_w + B_x vs A_y + B_z and B_w + C_x vs B_y + C_z for w != y,
    x != z, with all four indices in [1, r] or all in [r+1, f].
    """
    base, _, r = _three_family_layout(t, f, d, family)
    existing = {(w.left, w.right) for w in base.weighings}
    extra = []
    for block in (range(1, r + 1), range(r + 1, f + 1)):
        pairs = list(itertools.product(block, repeat=2))
        for first, second in ("AB", "BC"):
            for (w, x), (y, z) in itertools.combinations(pairs, 2):
                if w == y or x == z:
                    continue
                left, right = (f"{first}{w}", f"{second}{x}"), (f"{first}{y}", f"{second}{z}")
                if (left, right) in existing or (right, left) in existing:
                    continue
                existing.add((left, right))
                extra.append(Weighing(left, right))
    strategy = base.with_weighings([*base.weighings, *extra])
    ensure_valid(strategy)
    return strategy


# -- linear combinations ------------------------------------------------


@dataclass(frozen=True)
class LinCombConfig:
    """c[i] piles of size g[i] for each group i."""

    c: tuple[int, ...]
    g: tuple[int, ...]

    def __init__(self, c: Sequence[int], g: Sequence[int]):
        object.__setattr__(self, "c", tuple(c))
        object.__setattr__(self, "g", tuple(g))

    @property
    def total(self) -> int:
        return sum(ci * gi for ci, gi in zip(self.c, self.g))

    def problems(self, t: int, f: int) -> list[str]:
        out = []
        if len(self.c) != len(self.g) or not self.c:
            out.append("c and g must be non-empty and of equal length")
            return out
        if self.total != t:
            out.append(f"sum c_i*g_i = {self.total} != t = {t}")
        for i, (ci, gi) in enumerate(zip(self.c, self.g)):
            if not 2 <= ci <= f:
                out.append(f"c[{i}]={ci} outside [2, f={f}]")
            if not 1 <= gi <= t / 2:
                out.append(f"g[{i}]={gi} outside [1, t/2={t / 2:g}]")
        return out

    def canonical(self) -> "LinCombConfig":
        pairs = sorted(zip(self.c, self.g))
        return LinCombConfig([p[0] for p in pairs], [p[1] for p in pairs])

    def __str__(self) -> str:
        return f"c={self.c} g={self.g}"


def _solutions(c: Sequence[int], g: Sequence[int], target: int) -> Iterator[tuple[int, ...]]:
    k = len(c)
    reach = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        reach[i] = reach[i + 1] + c[i] * g[i]
    x = [0] * k

    def go(i: int, rem: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            if rem == 0:
                yield tuple(x)
            return
        for xi in range(min(g[i], rem // c[i]) + 1):
            left = rem - c[i] * xi
            if left > reach[i + 1]:
                continue
            x[i] = xi
            yield from go(i + 1, left)
        x[i] = 0

    if 0 <= target <= reach[0]:
        yield from go(0, target)


def solve_solution_vectors(c: Sequence[int], g: Sequence[int], target: int) -> list[tuple[int, ...]]:
    """All x with sum c_i*x_i = target and 0 <= x_i <= g_i, in lexicographic order."""
    if len(c) != len(g):
        raise ValueError("c and g must have the same length")
    if any(ci < 1 for ci in c) or any(gi < 0 for gi in g):
        raise ValueError("need c_i >= 1 and g_i >= 0")
    return list(_solutions(c, g, target))


def _representable(c: Sequence[int], g: Sequence[int], target: int) -> bool:
    return next(_solutions(c, g, target), None) is not None


def gen_linear_combination(
    t: int, f: int, d: int, config: LinCombConfig, placement: Sequence[int] | None = None
) -> Strategy:
    """c_i equal piles of size g_i per group, each holding placement[i] fakes, chained per group.

    Proves the fake count is a sum of c_i * x_i with 0 <= x_i <= g_i, which
    excludes d when d has no such representation.
    """
    problems = config.problems(t, f)
    if problems:
        raise GeneratorError("invalid configuration: " + "; ".join(problems))
    if _representable(config.c, config.g, d):
        raise GeneratorError(f"d representable: d={d} has a solution vector for {config}")
    solutions = solve_solution_vectors(config.c, config.g, f)
    if not solutions:
        raise GeneratorError(f"placement infeasible: f={f} has no solution vector for {config}")
    x = tuple(placement) if placement is not None else solutions[0]
    if x not in solutions:
        raise GeneratorError(f"placement infeasible: {x} is not a solution vector for f={f}")

    piles, weighings = [], []
    for i, (ci, gi) in enumerate(zip(config.c, config.g)):
        group = [Pile(f"G{i + 1}P{j + 1}", gi, x[i]) for j in range(ci)]
        piles.extend(group)
        weighings.extend(_chain([[p.id] for p in group]))
    strategy = Strategy(Params(t, f, d), piles, weighings)
    ensure_valid(strategy)
    return strategy


@dataclass(frozen=True)
class SearchEntry:
    config: LinCombConfig
    count: int
    solutions: int


@dataclass(frozen=True)
class SearchResult:
    entries: list[SearchEntry]
    partial: bool
    examined: int

    @property
    def best(self) -> SearchEntry | None:
        return self.entries[0] if self.entries else None


def _configs(t: int, pairs: Sequence[tuple[int, int]], max_groups: int) -> Iterator[tuple[tuple[int, int], ...]]:
    chosen: list[tuple[int, int]] = []

    def go(start: int, rem: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if rem == 0:
            yield tuple(chosen)
            return
        if len(chosen) == max_groups:
            return
        for idx in range(start, len(pairs)):
            c, g = pairs[idx]
            if c * g > rem:
                continue
            chosen.append((c, g))
            yield from go(idx, rem - c * g)
            chosen.pop()

    yield from go(0, t)


def search_lincomb(
    t: int,
    f: int,
    d: int,
    max_groups: int = 3,
    c_max: int | None = None,
    g_max: int | None = None,
    max_configs: int = 2_000_000,
    t_ceiling: int = 120,
) -> SearchResult:
    """Exhaustive search over linear-combination configurations, best count first.

    Configurations are multisets of (c_i, g_i) groups, enumerated in sorted
    order so each is seen once. Kept when f is representable and d is not;
    ranked by surviving-situation count, ties by the sorted config. Stops
    after ``max_configs`` candidates and flags the result as partial.
    """
    if max_groups < 1:
        raise ValueError("max_groups must be >= 1")
    if t > t_ceiling:
        raise ValueError(f"t={t} exceeds search ceiling {t_ceiling}")
    if not 0 <= f <= t or not 0 <= d <= t or f == d:
        raise ValueError(f"invalid parameters t={t}, f={f}, d={d}")
    c_hi = min(f, c_max) if c_max is not None else f
    g_hi = min(t // 2, g_max) if g_max is not None else t // 2
    pairs = [(c, g) for c in range(2, c_hi + 1) for g in range(1, g_hi + 1)]

    entries = []
    examined = 0
    partial = False
    for combo in _configs(t, pairs, max_groups):
        if examined >= max_configs:
            partial = True
            break
        examined += 1
        c = [p[0] for p in combo]
        g = [p[1] for p in combo]
        if _representable(c, g, d):
            continue
        sols = solve_solution_vectors(c, g, f)
        if not sols:
            continue
        entries.append(SearchEntry(LinCombConfig(c, g), lincomb_count(c, g, sols), len(sols)))
    entries.sort(key=lambda e: (-e.count, tuple(zip(e.config.c, e.config.g))))
    return SearchResult(entries, partial, examined)


# -- empirical check of the augmented three-family strategy -------------


@dataclass(frozen=True)
class ConjectureRecord:
    t: int
    f: int
    d: int
    exempt_form: bool  # d is q*f or q*f +- r for some q >= 1
    base_success: bool
    augmented_success: bool
    augmented_discreet: bool
    weighings: int


def conjecture1_sweep(t_max: int = 16, f_max: int = 4) -> list[ConjectureRecord]:
    """Run both three-family variants for every d over small (t, f).

    Records which d the augmented comparisons exclude. Nothing is asserted;
    this is data for judging the conjectured exclusion rule.
    """
    records = []
    for f in range(2, f_max + 1):
        for t in range(4 * f + 1, t_max + 1):
            k, r = divmod(t, f)
            if r == 0 or k < 4:
                continue
            for d in range(0, t + 1):
                if d == f:
                    continue
                exempt = any(d in (q * f, q * f + r, q * f - r) for q in range(1, t // f + 2))
                base = verify(gen_three_family(t, f, d))
                aug_strategy = gen_three_family_augmented(t, f, d)
                aug = verify(aug_strategy)
                records.append(
                    ConjectureRecord(t, f, d, exempt, base.success, aug.success, aug.discreet, aug_strategy.m)
                )
    return records


def representable(c: Sequence[int], g: Sequence[int], target: int) -> bool:
    """True when some solution vector reaches ``target``."""
    return _representable(c, g, target)
