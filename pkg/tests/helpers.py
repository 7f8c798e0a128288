"""Shared test utilities: random small strategies for oracle comparisons."""
from __future__ import annotations

import random

from coinproof.model import Params, Pile, Strategy, Weighing


def random_strategy(rng: random.Random, t_max: int = 14, f_max: int = 4, m_max: int = 4) -> Strategy:
    """A valid random strategy: random pile partition, random balanced weighings."""
    while True:
        t = rng.randint(4, t_max)
        f = rng.randint(0, min(f_max, t))
        d = rng.choice([x for x in range(0, min(f_max + 2, t) + 1) if x != f])
        sizes = _partition(rng, t, rng.randint(2, min(t, 7)))
        fakes = _spread(rng, f, sizes)
        piles = [Pile(f"p{i}", s, x) for i, (s, x) in enumerate(zip(sizes, fakes))]
        weighings = []
        for _ in range(rng.randint(1, m_max)):
            w = _balanced_weighing(rng, piles)
            if w is not None:
                weighings.append(w)
        if weighings:
            return Strategy(Params(t, f, d), piles, weighings)


def _partition(rng: random.Random, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0, *cuts, total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def _spread(rng: random.Random, f: int, sizes: list[int]) -> list[int]:
    fakes = [0] * len(sizes)
    for _ in range(f):
        i = rng.choice([k for k, s in enumerate(sizes) if fakes[k] < s])
        fakes[i] += 1
    return fakes


def _balanced_weighing(rng: random.Random, piles: list[Pile]) -> Weighing | None:
    for _ in range(200):
        left, right = [], []
        for p in piles:
            side = rng.choice((-1, 0, 0, 1))
            if side == -1:
                left.append(p)
            elif side == 1:
                right.append(p)
        if left and right and sum(p.size for p in left) == sum(p.size for p in right):
            return Weighing([p.id for p in left], [p.id for p in right])
    return None
