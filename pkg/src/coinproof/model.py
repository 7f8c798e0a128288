"""Problems, strategies, weighings, and what an observer can tell coins apart by.

Coins are numbered ``0..t-1``; each declared pile owns a contiguous index
range in declaration order. A weighing puts whole piles on the left or right
pan. The result of a weighing is encoded as

    s = sign(fakes_left - fakes_right)

so ``+1`` means the right pan is heavier (the left pan holds more of the
lighter fakes), ``-1`` means the left pan is heavier and ``0`` is balance.
Because both pans always hold the same number of coins this equals
``sign(x . h)`` with ``x`` the 0 (fake) / 1 (real) vector and ``h`` the
-1 (left) / 0 / +1 (right) placement vector.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

__all__ = [
    "Params",
    "Pile",
    "Weighing",
    "Strategy",
    "Syndrome",
    "ObservedClass",
    "ObservationalClassing",
    "Issue",
    "ValidationReport",
    "StrategyError",
    "SchemaError",
    "validate",
    "ensure_valid",
    "refine",
    "expected_syndrome",
    "rewrite_over_classes",
    "class_counts",
    "sign",
]

Syndrome = tuple[int, ...]


def sign(value: int) -> int:
    return (value > 0) - (value < 0)


class StrategyError(ValueError):
    """A strategy violates a structural invariant."""

    def __init__(self, issues: Sequence["Issue"]):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


class SchemaError(ValueError):
    """Strategy JSON does not match the interchange schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


@dataclass(frozen=True)
class Params:
    t: int
    f: int
    d: int


@dataclass(frozen=True)
class Pile:
    id: str
    size: int
    fakes: int = 0


@dataclass(frozen=True)
class Weighing:
    left: tuple[str, ...]
    right: tuple[str, ...]

    def __init__(self, left: Iterable[str], right: Iterable[str]):
        object.__setattr__(self, "left", tuple(left))
        object.__setattr__(self, "right", tuple(right))


@dataclass(frozen=True)
class Strategy:
    """An oblivious weighing strategy plus the prover's pile-level arrangement."""

    params: Params
    piles: tuple[Pile, ...]
    weighings: tuple[Weighing, ...] = ()

    def __init__(self, params: Params, piles: Iterable[Pile], weighings: Iterable[Weighing] = ()):
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "piles", tuple(piles))
        object.__setattr__(self, "weighings", tuple(weighings))

    @property
    def t(self) -> int:
        return self.params.t

    @property
    def f(self) -> int:
        return self.params.f

    @property
    def d(self) -> int:
        return self.params.d

    @property
    def m(self) -> int:
        return len(self.weighings)

    def pile(self, pile_id: str) -> Pile:
        for p in self.piles:
            if p.id == pile_id:
                return p
        raise KeyError(pile_id)

    def coin_ranges(self) -> dict[str, range]:
        out: dict[str, range] = {}
        start = 0
        for p in self.piles:
            out[p.id] = range(start, start + p.size)
            start += p.size
        return out

    def with_weighings(self, weighings: Iterable[Weighing]) -> "Strategy":
        return Strategy(self.params, self.piles, weighings)

    def with_params(self, **changes: int) -> "Strategy":
        values = {"t": self.t, "f": self.f, "d": self.d, **changes}
        return Strategy(Params(**values), self.piles, self.weighings)

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "f": self.f,
            "d": self.d,
            "piles": [{"id": p.id, "size": p.size, "fakes": p.fakes} for p in self.piles],
            "weighings": [{"left": list(w.left), "right": list(w.right)} for w in self.weighings],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Any) -> "Strategy":
        _expect_keys(data, "", {"t", "f", "d", "piles", "weighings"})
        t = _expect_int(data["t"], "t")
        f = _expect_int(data["f"], "f")
        d = _expect_int(data["d"], "d")
        piles_raw = _expect_list(data["piles"], "piles")
        piles = []
        for i, raw in enumerate(piles_raw):
            path = f"piles[{i}]"
            _expect_keys(raw, path, {"id", "size", "fakes"})
            if not isinstance(raw["id"], str):
                raise SchemaError(f"{path}.id", "expected a string")
            piles.append(
                Pile(raw["id"], _expect_int(raw["size"], f"{path}.size"), _expect_int(raw["fakes"], f"{path}.fakes"))
            )
        weighings = []
        for j, raw in enumerate(_expect_list(data["weighings"], "weighings")):
            path = f"weighings[{j}]"
            _expect_keys(raw, path, {"left", "right"})
            sides = []
            for side in ("left", "right"):
                ids = _expect_list(raw[side], f"{path}.{side}")
                for k, pid in enumerate(ids):
                    if not isinstance(pid, str):
                        raise SchemaError(f"{path}.{side}[{k}]", "expected a pile id string")
                sides.append(ids)
            weighings.append(Weighing(*sides))
        return cls(Params(t, f, d), piles, weighings)

    @classmethod
    def from_json(cls, text: str) -> "Strategy":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path: str | Path) -> "Strategy":
        return cls.from_json(Path(path).read_text())

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n")


def _expect_keys(obj: Any, path: str, keys: set[str]) -> None:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    unknown = sorted(set(obj) - keys)
    if unknown:
        raise SchemaError(path, f"unknown key(s): {', '.join(unknown)}")
    missing = sorted(keys - set(obj))
    if missing:
        raise SchemaError(path, f"missing key(s): {', '.join(missing)}")


def _expect_int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(path, "expected an integer")
    return value


def _expect_list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(path, "expected an array")
    return value


# -- validation ---------------------------------------------------------


@dataclass(frozen=True)
class Issue:
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}" if self.location else self.message


@dataclass
class ValidationReport:
    errors: list[Issue] = field(default_factory=list)
    warnings: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    @property
    def discreet_possible(self) -> bool:
        return not any(w.message.startswith("discreet impossible") for w in self.warnings)


def validate(strategy: Strategy) -> ValidationReport:
    """Check every structural invariant; never raises.

    Errors are fatal for verification. A warning is issued when
    ``1 < f < t-1`` fails, since no strategy can then hide every coin.
    """
    report = ValidationReport()
    err = report.errors.append
    t, f, d = strategy.t, strategy.f, strategy.d

    if t < 0:
        err(Issue("t", f"t must be >= 0, got {t}"))
    if not 0 <= f <= t:
        err(Issue("f", f"need 0 <= f <= t, got f={f}, t={t}"))
    if not 0 <= d <= t:
        err(Issue("d", f"need 0 <= d <= t, got d={d}, t={t}"))
    if d == f:
        err(Issue("d", f"d must differ from f (both {f})"))

    sizes: dict[str, int] = {}
    for i, p in enumerate(strategy.piles):
        loc = f"piles[{i}] ({p.id})"
        if p.id in sizes:
            err(Issue(loc, f"duplicate pile id {p.id!r}"))
        if p.size < 1:
            err(Issue(loc, f"size must be >= 1, got {p.size}"))
        if not 0 <= p.fakes <= max(p.size, 0):
            err(Issue(loc, f"fakes must be within [0, size], got {p.fakes} of {p.size}"))
        sizes.setdefault(p.id, p.size)

    total = sum(p.size for p in strategy.piles)
    if total != t:
        err(Issue("piles", f"pile sizes sum to {total}, expected t={t}"))
    fakes = sum(p.fakes for p in strategy.piles)
    if fakes != f:
        err(Issue("piles", f"pile fakes sum to {fakes}, expected f={f}"))

    for j, w in enumerate(strategy.weighings):
        loc = f"weighings[{j}]"
        if not w.left and not w.right:
            err(Issue(loc, "empty weighing"))
            continue
        seen: set[str] = set()
        known = True
        for pid in (*w.left, *w.right):
            if pid not in sizes:
                err(Issue(loc, f"unknown pile {pid!r}"))
                known = False
            elif pid in seen:
                err(Issue(loc, f"pile {pid!r} used more than once"))
            seen.add(pid)
        if known:
            ls = sum(sizes[p] for p in w.left)
            rs = sum(sizes[p] for p in w.right)
            if ls != rs:
                err(Issue(loc, f"unequal pans: {ls} coins left vs {rs} right"))

    if not 1 < f < t - 1:
        report.warnings.append(Issue("f", f"discreet impossible: need 1 < f < t-1, got f={f}, t={t}"))
    return report


def ensure_valid(strategy: Strategy) -> None:
    report = validate(strategy)
    if not report.ok:
        raise StrategyError(report.errors)


# -- observational classes --------------------------------------------


@dataclass(frozen=True)
class ObservedClass:
    size: int
    column: tuple[int, ...]
    piles: tuple[str, ...]
    fakes: int  # prover's count, from pile fakes


@dataclass(frozen=True)
class ObservationalClassing:
    classes: tuple[ObservedClass, ...]
    pile_class: Mapping[str, int]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.column for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def _pile_columns(strategy: Strategy) -> dict[str, list[int]]:
    cols = {p.id: [0] * strategy.m for p in strategy.piles}
    for j, w in enumerate(strategy.weighings):
        for pid in w.left:
            cols[pid][j] = -1
        for pid in w.right:
            cols[pid][j] = 1
    return cols


def refine(strategy: Strategy) -> ObservationalClassing:
    """Group coins with identical participation across every weighing.

    Coins sharing a column are exchangeable for the observer, so admissible
    counting only needs per-class fake counts. Classes are ordered by their
    first coin index.
    """
    ensure_valid(strategy)
    cols = _pile_columns(strategy)
    index: dict[tuple[int, ...], int] = {}
    members: list[list[Pile]] = []
    pile_class: dict[str, int] = {}
    for p in strategy.piles:
        col = tuple(cols[p.id])
        k = index.setdefault(col, len(members))
        if k == len(members):
            members.append([])
        members[k].append(p)
        pile_class[p.id] = k
    classes = tuple(
        ObservedClass(
            size=sum(p.size for p in ps),
            column=col,
            piles=tuple(p.id for p in ps),
            fakes=sum(p.fakes for p in ps),
        )
        for col, ps in zip(index, members)
    )
    return ObservationalClassing(classes, pile_class)


def rewrite_over_classes(strategy: Strategy, classing: ObservationalClassing | None = None) -> Strategy:
    """Equivalent strategy with exactly one pile per observational class."""
    classing = classing or refine(strategy)
    piles = [Pile(f"K{k}", c.size, c.fakes) for k, c in enumerate(classing.classes)]
    weighings = []
    for j in range(strategy.m):
        left = [f"K{k}" for k, c in enumerate(classing.classes) if c.column[j] == -1]
        right = [f"K{k}" for k, c in enumerate(classing.classes) if c.column[j] == 1]
        weighings.append(Weighing(left, right))
    return Strategy(strategy.params, piles, weighings)


def class_counts(strategy: Strategy, classing: ObservationalClassing, fake_coins: Iterable[int]) -> tuple[int, ...]:
    """Project a coin-level situation (set of fake indices) onto class counts."""
    owner = [0] * strategy.t
    for pid, rng in strategy.coin_ranges().items():
        for i in rng:
            owner[i] = classing.pile_class[pid]
    counts = [0] * len(classing)
    for i in fake_coins:
        counts[owner[i]] += 1
    return tuple(counts)


def expected_syndrome(strategy: Strategy) -> Syndrome:
    """Results the prover's own arrangement produces."""
    ensure_valid(strategy)
    fakes = {p.id: p.fakes for p in strategy.piles}
    return tuple(
        sign(sum(fakes[p] for p in w.left) - sum(fakes[p] for p in w.right)) for w in strategy.weighings
    )
