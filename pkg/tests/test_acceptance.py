"""Acceptance gate: one test per release criterion, each printing a
PASS/FAIL line (run with -s or -v to see them).  Tolerances are fixed
here and nowhere else."""

import random
import time
from fractions import Fraction

import pytest

from siegecode import (
    benford,
    build_alphabetic_optimal,
    build_exponential_huffman,
    exhaustive_alphabetic_optimum,
    exhaustive_nonalphabetic_optimum,
    expected_windows,
    kraft_sum,
    normalized_penalty,
    penalty_bounds,
    renyi_entropy,
    alpha_order,
    shannon_like_lengths,
    short_codeword_guarantee,
    simulate_repeated_windows,
    simulate_siege,
    split_monotonicity_probe,
    success_bounds,
    success_probability,
    tightness_family,
    near_optimal_alphabetic,
)

from .conftest import random_float_probs, random_rational_weights


def _report(num: int, ok: bool, detail: str = ""):
    print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, detail


def test_criterion_1_benford_theta_09():
    start = time.monotonic()
    dist = benford()
    lengths = tuple(build_exponential_huffman(dist, 0.9).lengths)
    success = float(success_probability(dist, lengths, 0.9))
    entropy = renyi_entropy(dist, alpha_order(0.9))
    lo, hi = success_bounds(dist, 0.9)
    elapsed = time.monotonic() - start

    ok = (
        lengths == (2, 2, 3, 3, 4, 4, 4, 5, 5)
        and abs(success - 0.739) <= 5e-4
        and abs(entropy - 2.822) <= 1e-3
        and abs(lo - 0.668) <= 1e-3
        and abs(hi - 0.743) <= 1e-3
        and elapsed < 1.0
    )
    _report(
        1,
        ok,
        f"lengths={lengths} success={success:.4f} H={entropy:.4f} "
        f"bounds=({lo:.4f},{hi:.4f}) in {elapsed:.3f}s",
    )


def test_criterion_2_benford_theta_06():
    dist = benford()
    lengths = tuple(build_exponential_huffman(dist, 0.6).lengths)
    success = float(success_probability(dist, lengths, 0.6))
    entropy = renyi_entropy(dist, alpha_order(0.6))
    simple_lo, hi = success_bounds(dist, 0.6)
    from siegecode import corollary_lower_bound

    corollary = corollary_lower_bound(dist, 0.6)

    ok = (
        lengths == (1, 2, 3, 4, 5, 6, 7, 8, 8)
        and abs(success - 0.296) <= 5e-4
        and abs(entropy - 2.260) <= 1e-3
        and abs(simple_lo - 0.189) <= 1e-3
        and abs(corollary - 0.251) <= 1e-3
        and abs(hi - 0.315) <= 1e-3
    )
    _report(
        2,
        ok,
        f"lengths={lengths} success={success:.4f} H={entropy:.4f} "
        f"simple={simple_lo:.4f} corollary={corollary:.4f} upper={hi:.4f}",
    )


def test_criterion_3_risk_averse_counterexample():
    p = tuple(Fraction(x, 100) for x in (55, 15, 15, 15))
    lengths = tuple(build_exponential_huffman(p, 2).lengths)
    oracle = exhaustive_nonalphabetic_optimum(p, 2)
    ok = lengths == (2, 2, 2, 2) and not oracle.contains_short_first()
    _report(3, ok, f"lengths={lengths} optimal_vectors={oracle.vectors}")


def test_criterion_4_split_monotonicity_counterexample():
    siege = split_monotonicity_probe((8, 1, 9, 6), Fraction(3, 5))
    linear = split_monotonicity_probe((8, 1, 9, 6), 1)
    ok = siege.violated and not linear.violated
    _report(4, ok, f"theta=0.6 -> {siege} ; theta=1 -> {linear}")


def test_criterion_5_oracle_equivalence_sweep():
    start = time.monotonic()
    rng = random.Random(0xC0DE)
    thetas = [
        Fraction(51, 100),
        Fraction(3, 5),
        Fraction(3, 4),
        Fraction(9, 10),
        Fraction(99, 100),
        Fraction(3, 2),
        Fraction(2),
    ]

    for i in range(500):
        n = rng.randint(2, 8)
        theta = rng.choice(thetas)
        w = random_rational_weights(rng, n)
        policy = "top-merge" if i % 2 else "default"
        built = build_exponential_huffman(w, theta, tiebreak=policy)
        objective = sum(wi * theta**l for wi, l in zip(w, built.lengths))
        oracle = exhaustive_nonalphabetic_optimum(w, theta)
        assert objective == oracle.value, (w, theta, policy)
        assert tuple(built.lengths) in oracle.vectors

    for _ in range(500):
        n = rng.randint(2, 10)
        theta = rng.choice(thetas)
        w = random_rational_weights(rng, n)
        built = build_alphabetic_optimal(w, theta)
        oracle = exhaustive_alphabetic_optimum(w, theta)
        assert built.objective == oracle.value, (w, theta)
        assert tuple(built.lengths) in oracle.vectors

    elapsed = time.monotonic() - start
    _report(5, elapsed < 60.0, f"500+500 exact matches in {elapsed:.1f}s (< 60s)")


def _random_guaranteed_instance(rng, theta):
    """Sorted rational p with p(1) >= 2*theta/(2*theta+3), summing to 1."""
    threshold = 2 * theta / (2 * theta + 3)
    while True:
        n = rng.randint(2, 8)
        denom = rng.randint(40, 120)
        lo = -(-threshold.numerator * denom // threshold.denominator)  # ceil
        if lo >= denom - (n - 1):
            continue
        head = rng.randint(lo, denom - (n - 1))
        rest = denom - head
        parts = []
        feasible = True
        for j in range(n - 2):
            slots_left = n - 2 - j
            hi = min(head, rest - slots_left)
            if hi < 1:
                feasible = False
                break
            v = rng.randint(1, hi)
            parts.append(v)
            rest -= v
        if not feasible or not 1 <= rest <= head:
            continue
        parts.append(rest)
        parts.sort(reverse=True)
        return [Fraction(head, denom)] + [Fraction(v, denom) for v in parts]


def test_criterion_6_short_codeword_suite():
    rng = random.Random(0xBEEF)
    thetas = [Fraction(3, 5), Fraction(3, 4), Fraction(9, 10)]

    for _ in range(200):
        theta = rng.choice(thetas)
        p = _random_guaranteed_instance(rng, theta)
        assert short_codeword_guarantee(p, theta)
        oracle = exhaustive_nonalphabetic_optimum(p, theta)
        assert oracle.contains_short_first(), (p, theta, oracle.vectors)

    for theta in thetas:
        hi = (2 * theta - 1) / (8 * theta + 12)
        for _ in range(10):
            eps = hi * Fraction(rng.randint(1, 999), 1000)
            dist = tightness_family(theta, eps)
            built = tuple(build_exponential_huffman(dist, theta).lengths)
            assert built == (2, 2, 2, 2), (theta, eps)
            oracle = exhaustive_nonalphabetic_optimum(dist, theta)
            assert (2, 2, 2, 2) in oracle.vectors
            assert not oracle.contains_short_first(), (theta, eps, oracle.vectors)

    _report(6, True, "200 guaranteed instances + 30 tightness instances")


def test_criterion_7_approximation_guarantees():
    rng = random.Random(0xF00D)
    thetas = [Fraction(3, 5), Fraction(3, 4), Fraction(9, 10), Fraction(3, 2), Fraction(2)]
    fallbacks = 0

    for _ in range(500):
        n = rng.randint(2, 20)
        theta = rng.choice(thetas)
        w = random_rational_weights(rng, n)
        total = sum(w)
        p = [x / total for x in w]

        huff = build_exponential_huffman(p, theta)
        dp = build_alphabetic_optimal(p, theta)
        approx = near_optimal_alphabetic(p, theta, base="huffman")
        fallbacks += approx.fallback_used

        assert approx.code.alphabetic
        assert kraft_sum(approx.lengths) == 1

        # compare in objective space: exact, no log tolerances
        value = lambda ls: sum(pi * theta**l for pi, l in zip(p, ls))
        s_h, s_d, s_a = value(huff.lengths), value(dp.lengths), value(approx.lengths)
        if theta < 1:
            assert s_h >= s_d >= s_a > theta * s_h, (w, theta)
        else:
            assert s_h <= s_d <= s_a < theta * s_h, (w, theta)

        pf = [float(x) for x in p]
        shannon = shannon_like_lengths(pf, theta)
        assert kraft_sum(shannon) <= 1
        entropy = renyi_entropy(pf, alpha_order(theta))
        assert normalized_penalty(pf, shannon, theta) < entropy + 1

    _report(7, True, f"500 instances (canonical overflow fallback used {fallbacks}x)")


def test_criterion_8_simulation_consistency():
    start = time.monotonic()
    rng = random.Random(0x5EED)
    configs = []
    for _ in range(20):
        n = rng.randint(2, 10)
        p = random_float_probs(rng, n)
        theta = rng.uniform(0.55, 0.95)
        code = build_exponential_huffman(p, theta).code
        configs.append((p, theta, code))

    hits = 0
    for k, (p, theta, code) in enumerate(configs):
        report = simulate_siege(p, code, theta, 10**6, seed=1000 + k)
        analytic = float(success_probability(p, code.lengths(), theta))
        if abs(report.estimate - analytic) <= 4 * report.standard_error:
            hits += 1
    assert hits >= 19, f"only {hits}/20 inside 4 standard errors"

    for k, (p, theta, code) in enumerate(configs):
        for mode in ("independent", "constant"):
            target = float(expected_windows(p, code.lengths(), theta, mode))
            # keep total window draws bounded; stderr comes from the sample
            trials = max(10**4, min(10**6, int(2e6 / target)))
            report = simulate_repeated_windows(p, code, theta, trials, seed=2000 + k, mode=mode)
            assert report.censored == 0
            deviation = abs(report.mean_windows - target)
            assert deviation <= 4 * report.standard_error, (k, mode, report, target)

    elapsed = time.monotonic() - start
    ok = elapsed < 120.0
    _report(8, ok, f"{hits}/20 success sims in tolerance, windows matched; {elapsed:.1f}s (< 120s)")


def test_criterion_9_entropy_bracketing_suite():
    rng = random.Random(0xAB1E)

    for _ in range(500):
        p = random_float_probs(rng, rng.randint(2, 12))
        for theta in (0.51, 0.6, 0.75, 0.9, 0.99):
            built = build_exponential_huffman(p, theta)
            pstar = float(success_probability(p, built.lengths, theta))
            lo, hi = success_bounds(p, theta)
            assert lo < pstar, (p, theta)
            assert pstar <= hi + 1e-9, (p, theta)

    for _ in range(500):
        p = random_float_probs(rng, rng.randint(2, 12))
        for theta in (1.5, 2.0, 4.0):
            built = build_exponential_huffman(p, theta)
            lstar = normalized_penalty(p, built.lengths, theta)
            lo, hi = penalty_bounds(p, theta)
            assert lo - 1e-9 <= lstar < hi, (p, theta)

    _report(9, True, "500 bracketing + 500 penalty-gap instances")
