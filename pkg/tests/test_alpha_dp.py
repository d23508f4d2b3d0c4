import random
from fractions import Fraction

import pytest

from siegecode import (
    build_alphabetic_optimal,
    build_exponential_huffman,
    exhaustive_alphabetic_optimum,
    normalized_penalty,
    split_monotonicity_probe,
)

from .conftest import random_rational_weights


class TestBasics:
    def test_two_symbols_single_tree(self):
        for theta in (Fraction(2, 5), Fraction(3, 4), Fraction(1), Fraction(2)):
            result = build_alphabetic_optimal((Fraction(1, 3), Fraction(2, 3)), theta)
            assert tuple(result.lengths) == (1, 1)
            assert result.code.codewords == ("0", "1")
            assert result.table.split[(1, 2)] == 1

    def test_uniform_four(self):
        result = build_alphabetic_optimal((0.25,) * 4, 0.9)
        assert tuple(result.lengths) == (2, 2, 2, 2)

    def test_root_weight_identity_n2(self):
        # sanity for the recurrence: W[1][2] == theta * (p1 + p2) == objective
        p = (Fraction(1, 3), Fraction(2, 3))
        theta = Fraction(4, 5)
        result = build_alphabetic_optimal(p, theta)
        assert result.objective == theta * (p[0] + p[1])
        assert result.table.weight[(1, 2)] == result.objective

    def test_counterexample_weights_match_enumeration(self):
        w = [Fraction(x) for x in (8, 1, 9, 6)]
        theta = Fraction(3, 5)
        result = build_alphabetic_optimal(w, theta)
        oracle = exhaustive_alphabetic_optimum(w, theta)
        assert result.objective == oracle.value
        assert tuple(result.lengths) in oracle.vectors
        assert tuple(result.lengths) == (1, 3, 3, 2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            build_alphabetic_optimal((), 0.9)

    def test_output_is_alphabetic(self):
        rng = random.Random(7)
        for _ in range(20):
            w = random_rational_weights(rng, rng.randint(1, 10))
            theta = Fraction(rng.randint(40, 200), 100)
            result = build_alphabetic_optimal(w, theta)
            assert result.code.alphabetic
            assert result.tree.leaf_symbols_inorder() == tuple(range(1, len(w) + 1))

    def test_deterministic_split_table(self):
        rng = random.Random(17)
        w = random_rational_weights(rng, 9)
        a = build_alphabetic_optimal(w, Fraction(3, 5))
        b = build_alphabetic_optimal(w, Fraction(3, 5))
        assert a.table.split == b.table.split
        assert a.code.codewords == b.code.codewords


class TestOptimality:
    def test_matches_enumeration_sweep(self):
        rng = random.Random(29)
        thetas = [Fraction(51, 100), Fraction(3, 4), Fraction(9, 10), Fraction(2)]
        for _ in range(40):
            n = rng.randint(2, 8)
            w = random_rational_weights(rng, n)
            theta = rng.choice(thetas)
            result = build_alphabetic_optimal(w, theta)
            oracle = exhaustive_alphabetic_optimum(w, theta)
            assert result.objective == oracle.value
            assert tuple(result.lengths) in oracle.vectors

    def test_subtree_optimality(self):
        # every DP cell is the enumeration optimum of its own subrange
        rng = random.Random(31)
        for _ in range(5):
            n = rng.randint(4, 10)
            w = random_rational_weights(rng, n)
            theta = rng.choice([Fraction(3, 5), Fraction(9, 10), Fraction(3, 2)])
            result = build_alphabetic_optimal(w, theta)
            for j in range(1, n + 1):
                for k in range(j + 1, n + 1):
                    sub = exhaustive_alphabetic_optimum(w[j - 1 : k], theta)
                    assert result.table.weight[(j, k)] == sub.value

    def test_linear_limit_matches_enumeration(self):
        rng = random.Random(37)
        for _ in range(15):
            n = rng.randint(2, 8)
            w = random_rational_weights(rng, n)
            result = build_alphabetic_optimal(w, 1)
            oracle = exhaustive_alphabetic_optimum(w, 1)
            assert result.objective == oracle.value
            assert tuple(result.lengths) in oracle.vectors

    def test_dominated_by_free_optimum(self):
        # the alphabetic constraint can only hurt, and costs at most one bit
        rng = random.Random(41)
        for _ in range(25):
            n = rng.randint(2, 10)
            w = random_rational_weights(rng, n)
            total = sum(w)
            p = [x / total for x in w]
            theta = Fraction(rng.randint(51, 99), 100)
            huff = build_exponential_huffman(p, theta)
            alpha = build_alphabetic_optimal(p, theta)
            s_huff = sum(pi * theta**l for pi, l in zip(p, huff.lengths))
            s_alpha = sum(pi * theta**l for pi, l in zip(p, alpha.lengths))
            assert s_alpha <= s_huff
            # penalty sandwich L_huff <= L_alpha <= 1 + L_huff
            l_h = normalized_penalty(p, huff.lengths, theta)
            l_a = normalized_penalty(p, alpha.lengths, theta)
            assert l_h <= l_a + 1e-9
            assert l_a <= 1 + l_h + 1e-9


class TestSplitProbe:
    def test_counterexample(self):
        report = split_monotonicity_probe((8, 1, 9, 6), Fraction(3, 5))
        assert report.violated
        assert report.split_full == 1
        assert (report.split_prefix, report.split_suffix) == (2, 3)

    def test_same_weights_linear_not_violated(self):
        report = split_monotonicity_probe((8, 1, 9, 6), 1)
        assert not report.violated

    def test_uniform_not_violated(self):
        for theta in (Fraction(3, 5), Fraction(9, 10), 1):
            report = split_monotonicity_probe((1, 1, 1, 1), theta)
            assert not report.violated

    def test_needs_three_symbols(self):
        with pytest.raises(ValueError):
            split_monotonicity_probe((1, 2), 0.9)
