import itertools
import math
from fractions import Fraction

import pytest

from coinproof.analytic import (
    balanced_count,
    indiscreet_exact_count,
    lincomb_count,
    pyber_bound,
    single_weighing_cap,
    strategy6_X,
    strategy6_X_limit,
    theorem1_bounds,
    theorem2_exponents,
    theorem2_lower_bound,
    three_family_count,
    unbalanced_count,
)
from coinproof.model import Params, Pile, Strategy, Weighing
from coinproof.strategies import gen_indiscreet_piles, gen_three_family
from coinproof.verifier import admissible_count, oracle_admissible_count, verify


def brute_single(t, f, n):
    """(balanced, left-heavy) by enumerating coin subsets: coins 0..n-1 left, n..2n-1 right."""
    bal = tipped = 0
    for fakes in itertools.combinations(range(t), f):
        lf = sum(1 for i in fakes if i < n)
        rf = sum(1 for i in fakes if n <= i < 2 * n)
        bal += lf == rf
        tipped += lf < rf
    return bal, tipped


class TestSingleWeighing:
    def test_table1_rows(self):
        assert balanced_count(80, 3, 30) == 19140
        assert balanced_count(80, 3, 20) == 25880
        assert unbalanced_count(80, 3, 40) == 41080

    def test_unbalanced_from_partition(self):
        assert unbalanced_count(80, 3, 30) == (math.comb(80, 3) - 19140) // 2 == 31510

    def test_no_fakes(self):
        for t in (2, 7, 30):
            for n in range(1, t // 2 + 1):
                assert balanced_count(t, 0, n) == 1
                assert unbalanced_count(t, 0, n) == 0

    @pytest.mark.parametrize("t", [6, 9, 12])
    def test_against_enumeration(self, t):
        for f in range(0, 5):
            for n in range(1, t // 2 + 1):
                assert (balanced_count(t, f, n), unbalanced_count(t, f, n)) == brute_single(t, f, n)

    def test_vandermonde(self):
        for t in range(2, 61):
            for f in range(0, 6):
                if f > t:
                    continue
                for n in range(1, t // 2 + 1):
                    assert balanced_count(t, f, n) + 2 * unbalanced_count(t, f, n) == math.comb(t, f)

    def test_agrees_with_verifier(self):
        for t, f, n in [(10, 3, 2), (12, 4, 5), (9, 2, 4)]:
            rest = t - 2 * n
            x = min(f, rest)
            piles = [Pile("L", n, (f - x + 1) // 2), Pile("R", n, (f - x) // 2), Pile("X", rest, x)]
            s = Strategy(Params(t, f, f + 1), piles, [Weighing(["L"], ["R"])])
            assert admissible_count(s, f, (0,)).count == balanced_count(t, f, n)
            assert admissible_count(s, f, (1,)).count == unbalanced_count(t, f, n)
            assert admissible_count(s, f, (-1,)).count == unbalanced_count(t, f, n)

    @pytest.mark.parametrize("n", [0, 6])
    def test_domain(self, n):
        with pytest.raises(ValueError):
            balanced_count(10, 2, n)


class TestBounds:
    @pytest.mark.parametrize("t,f,expected", [(80, 3, (27, 82160)), (6, 3, (2, 20)), (10, 8, (5, 45))])
    def test_theorem1(self, t, f, expected):
        assert theorem1_bounds(t, f) == expected

    @pytest.mark.parametrize("t,f", [(10, 1), (10, 9), (5, 0)])
    def test_theorem1_rejects(self, t, f):
        with pytest.raises(ValueError):
            theorem1_bounds(t, f)

    def test_single_weighing_cap(self):
        assert single_weighing_cap(10, 2, balanced_only=True) == math.comb(8, 2) + 1 == 29
        assert single_weighing_cap(10, 0) == 1
        scan = max(max(balanced_count(80, 3, n), unbalanced_count(80, 3, n)) for n in range(1, 41))
        assert single_weighing_cap(80, 3) == scan >= 41080

    def test_pyber(self):
        assert pyber_bound(80, 3) == 56
        assert pyber_bound(3, 3) == 45
        assert pyber_bound(12, 1) == 18
        # exact power of three: ceil(log3 27) = 3
        assert pyber_bound(27, 1) == 18


class TestStrategy6:
    def test_values(self):
        assert strategy6_X(8, 2, 2) == Fraction(7, 4)
        assert strategy6_X_limit(2, 2) == 2
        assert round(float(strategy6_X(70, 7, 7)), 2) == 119.88

    def test_approaches_limit(self):
        gaps = [abs(strategy6_X(t, 6, 3) - strategy6_X_limit(6, 3)) for t in (30, 300, 3000)]
        assert gaps[0] > gaps[1] > gaps[2]

    def test_rejects(self):
        with pytest.raises(ValueError):
            strategy6_X(9, 2, 2)


class TestTheorem2:
    def test_strategy2_value(self):
        assert theorem2_lower_bound(80, 3, 2, 3) == 25 * 26**2 == 16900

    def test_exponents_sum(self):
        for t, d, a in [(80, 2, 3), (41, 5, 4), (23, 1, 2)]:
            e1, e2 = theorem2_exponents(t, d, a)
            assert e1 + e2 == a

    def test_negative_exponent_rejected(self):
        assert theorem2_exponents(15, 1, 4)[0] == -1
        with pytest.raises(ValueError, match="e1"):
            theorem2_lower_bound(15, 4, 1, 4)

    @pytest.mark.parametrize(
        "args,needle",
        [((80, 3, 3, 3), "a does not divide d"), ((81, 3, 2, 3), "a does not divide t"),
         ((80, 4, 2, 3), "a | f"), ((7, 2, 1, 4), "t > 2a")],
    )
    def test_named_preconditions(self, args, needle):
        with pytest.raises(ValueError, match=needle):
            theorem2_lower_bound(*args)

    def test_exact_case(self):
        assert indiscreet_exact_count(10, 2, 3, 2) == 25
        s = gen_indiscreet_piles(10, 2, 3, 2)
        assert oracle_admissible_count(s, 2, (0,) * s.m) == 25

    def test_bound_below_generator(self):
        for a in (2, 3):
            for t in range(2 * a + 1, 31):
                if t % a == 0:
                    continue
                for f in range(a, t, a):
                    for d in range(1, t):
                        if d % a == 0 or t // a - -(-d // a) <= f // a:
                            continue
                        bound = theorem2_lower_bound(t, f, d, a)
                        assert bound <= verify(gen_indiscreet_piles(t, f, d, a)).count_f


class TestThreeFamily:
    def test_values(self):
        assert three_family_count(80, 3) == 24**2 * 23 + 2 + 4 == 13254
        assert three_family_count(9, 2) == 6
        assert three_family_count(13, 3) == 8

    def test_against_oracle(self):
        for t, f in [(9, 2), (13, 3)]:
            s = gen_three_family(t, f, 1)
            assert oracle_admissible_count(s, f, (0,) * s.m) == three_family_count(t, f)

    @pytest.mark.parametrize("t,f", [(12, 3), (11, 3), (7, 2)])
    def test_rejects(self, t, f):
        with pytest.raises(ValueError):
            three_family_count(t, f)


class TestLincombCount:
    def test_seven_fakes_example(self):
        sols = [(1, 1, 1), (2, 0, 1), (0, 2, 1)]
        assert lincomb_count((2, 2, 3), (10, 10, 10), sols) == 10**7 + 2 * 10**3 * 45**2 == 14050000

    def test_degenerate(self):
        assert lincomb_count((2, 3), (4, 4), [(0, 0)]) == 1
        assert lincomb_count((7,), (10,), [(1,)]) == math.comb(10, 1) ** 7

    def test_malformed(self):
        with pytest.raises(ValueError):
            lincomb_count((2, 3), (4, 4), [(1, 1), (2, 0)])
        with pytest.raises(ValueError):
            lincomb_count((2,), (4,), [(5,)])
