import json
import random

import pytest

from coinproof.model import (
    Params,
    Pile,
    SchemaError,
    Strategy,
    StrategyError,
    Weighing,
    class_counts,
    expected_syndrome,
    refine,
    rewrite_over_classes,
    validate,
)
from coinproof.strategies import gen_divisibility, gen_shapovalov
from helpers import random_strategy


def single(left_fakes, right_fakes):
    piles = [Pile("L", 2, left_fakes), Pile("R", 2, right_fakes), Pile("X", 2, 0)]
    f = left_fakes + right_fakes
    return Strategy(Params(6, f, f + 1), piles, [Weighing(["L"], ["R"])])


class TestValidate:
    def test_shapovalov_is_valid_and_discreet_eligible(self):
        report = validate(gen_shapovalov())
        assert report.ok
        assert report.discreet_possible

    def test_all_fake_is_flagged_not_fatal(self):
        s = Strategy(Params(5, 5, 4), [Pile("a", 5, 5)])
        report = validate(s)
        assert report.ok
        assert not report.discreet_possible

    def test_unequal_pans_fatal(self):
        s = Strategy(Params(5, 1, 2), [Pile("a", 3, 1), Pile("b", 2, 0)], [Weighing(["a"], ["b"])])
        report = validate(s)
        assert not report.ok
        assert any("unequal pans" in i.message and i.location == "weighings[0]" for i in report.errors)
        with pytest.raises(StrategyError):
            refine(s)

    @pytest.mark.parametrize(
        "piles,weighings,params,needle",
        [
            ([Pile("a", 3, 1), Pile("a", 3, 0)], [], Params(6, 1, 2), "duplicate pile id"),
            ([Pile("a", 3, 4), Pile("b", 3, 0)], [], Params(6, 4, 2), "fakes must be within"),
            ([Pile("a", 3, 1), Pile("b", 2, 0)], [], Params(6, 1, 2), "sum to 5"),
            ([Pile("a", 3, 1), Pile("b", 3, 1)], [], Params(6, 1, 2), "pile fakes sum to 2"),
            ([Pile("a", 3, 1), Pile("b", 3, 0)], [Weighing(["a"], ["z"])], Params(6, 1, 2), "unknown pile"),
            ([Pile("a", 3, 1), Pile("b", 3, 0)], [Weighing(["a"], ["a"])], Params(6, 1, 2), "more than once"),
            ([Pile("a", 3, 1), Pile("b", 3, 0)], [Weighing([], [])], Params(6, 1, 2), "empty weighing"),
            ([Pile("a", 3, 1), Pile("b", 3, 0)], [], Params(6, 1, 1), "must differ"),
            ([Pile("a", 3, 1), Pile("b", 3, 0)], [], Params(6, 1, 9), "0 <= d <= t"),
        ],
    )
    def test_errors_are_located(self, piles, weighings, params, needle):
        report = validate(Strategy(params, piles, weighings))
        assert any(needle in str(i) for i in report.errors), report.errors


class TestRefine:
    def test_shapovalov_classes(self):
        c = refine(gen_shapovalov())
        assert c.sizes == (10, 10, 20, 20, 20)
        assert len(set(c.columns)) == 5

    def test_no_weighings_one_class(self):
        c = refine(Strategy(Params(7, 2, 3), [Pile("a", 3, 1), Pile("b", 4, 1)]))
        assert c.sizes == (7,)
        assert c.pile_class == {"a": 0, "b": 0}

    def test_idle_piles_merge(self):
        piles = [Pile("a", 2, 1), Pile("x", 1, 0), Pile("b", 2, 1), Pile("y", 3, 0)]
        s = Strategy(Params(8, 2, 1), piles, [Weighing(["a"], ["b"])])
        c = refine(s)
        assert c.sizes == (2, 4, 2)
        assert c.pile_class["x"] == c.pile_class["y"] == 1

    def test_idempotent(self):
        rng = random.Random(7)
        for s in [gen_shapovalov(), *(random_strategy(rng) for _ in range(30))]:
            c = refine(s)
            again = refine(rewrite_over_classes(s, c))
            assert again.sizes == c.sizes
            assert again.columns == c.columns

    def test_class_counts_projection(self):
        s = gen_shapovalov()
        c = refine(s)
        # one coin from A (0..9), D (40..59), E (60..79)
        assert class_counts(s, c, [3, 45, 70]) == (1, 0, 0, 1, 1)


class TestExpectedSyndrome:
    def test_shapovalov(self):
        assert expected_syndrome(gen_shapovalov()) == (0, 0, -1)

    def test_equal_fakes_all_balanced(self):
        assert expected_syndrome(gen_divisibility(12, 3, 1, 3)) == (0, 0)

    def test_sign_convention(self):
        # more fakes on the left makes the left lighter, so the right pan is heavier: +1
        assert expected_syndrome(single(1, 0)) == (1,)
        assert expected_syndrome(single(0, 1)) == (-1,)
        assert expected_syndrome(single(1, 1)) == (0,)

    def test_invariant_under_rewrite(self):
        rng = random.Random(11)
        for _ in range(30):
            s = random_strategy(rng)
            assert expected_syndrome(rewrite_over_classes(s)) == expected_syndrome(s)


class TestJson:
    def test_round_trip(self):
        s = gen_shapovalov()
        assert Strategy.from_json(s.to_json()) == s

    def test_schema_shape(self):
        data = json.loads(gen_shapovalov().to_json())
        assert list(data) == ["t", "f", "d", "piles", "weighings"]
        assert data["piles"][0] == {"id": "A", "size": 10, "fakes": 1}
        assert data["weighings"][2] == {"left": ["C", "D"], "right": ["A", "B", "E"]}

    @pytest.mark.parametrize(
        "mutate,path",
        [
            (lambda d: d.update(extra=1), ""),
            (lambda d: d["piles"][1].update(colour="red"), "piles[1]"),
            (lambda d: d["piles"][0].pop("fakes"), "piles[0]"),
            (lambda d: d["piles"][2].update(size="20"), "piles[2].size"),
            (lambda d: d.update(t=True), "t"),
            (lambda d: d["weighings"][0].update(left="A"), "weighings[0].left"),
            (lambda d: d["weighings"][1]["right"].append(3), "weighings[1].right[1]"),
        ],
    )
    def test_rejects_bad_documents(self, mutate, path):
        data = gen_shapovalov().to_dict()
        mutate(data)
        with pytest.raises(SchemaError) as info:
            Strategy.from_dict(data)
        assert info.value.path == path

    def test_syntax_error_has_line(self):
        with pytest.raises(SchemaError, match="line 2"):
            Strategy.from_json('{"t": 1,\n "f": }')
