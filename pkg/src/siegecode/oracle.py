"""Brute-force optima for small instances; ground truth for everything else.

Nothing here shares code with the construction algorithms: the
nonalphabetic side enumerates Kraft-feasible length multisets directly,
the alphabetic side enumerates every ordered binary tree.  Exact when
weights and theta are rational.  Capped at n = 12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .model import Scalar, _dist, _theta_value

MAX_ORACLE_N = 12


@dataclass(frozen=True)
class OptimumSet:
    """Exact optimal objective value and every optimal length vector.

    For the alphabetic search each ordered tree is identified by its
    leaf-depth vector, which determines the tree uniquely.
    """

    value: Scalar
    vectors: tuple

    def contains_short_first(self) -> bool:
        """True when some optimal vector assigns one bit to symbol 1."""
        return any(v[0] == 1 for v in self.vectors)


def _check_instance(dist, n):
    if n > MAX_ORACLE_N:
        raise ValueError(f"oracle instances are capped at n = {MAX_ORACLE_N}")


def _length_multisets(n, max_len):
    """Yield all nondecreasing Kraft-feasible length tuples in [1, max_len]^n."""
    budget_unit = Fraction(1, 2**max_len)

    def recurse(remaining, min_len, budget, acc):
        if remaining == 0:
            yield tuple(acc)
            return
        for l in range(min_len, max_len + 1):
            rest = budget - Fraction(1, 2**l)
            if rest < (remaining - 1) * budget_unit:
                continue
            acc.append(l)
            yield from recurse(remaining - 1, l, rest, acc)
            acc.pop()

    yield from recurse(n, 1, Fraction(1), [])


def _tie_groups(order, weights):
    """Consecutive runs of equal weight in the sorted symbol order."""
    groups = []
    start = 0
    while start < len(order):
        end = start
        while end + 1 < len(order) and weights[order[end + 1]] == weights[order[start]]:
            end += 1
        groups.append(order[start : end + 1])
        start = end + 1
    return groups


def exhaustive_nonalphabetic_optimum(p, theta, max_len=None) -> OptimumSet:
    """Search all Kraft-feasible length vectors for the best objective.

    Only nondecreasing multisets are enumerated; within each multiset the
    sorted-by-weight assignment is optimal by the exchange argument, and
    the returned vector set is extended over weight ties so that every
    optimal assignment appears.  max_len defaults to n - 1, deep enough
    for any optimum when all weights are positive.
    """
    dist = _dist(p)
    n = dist.n
    _check_instance(dist, n)
    t = _theta_value(theta)
    if n == 1:
        return OptimumSet(dist.weights[0] * t, ((1,),))
    if max_len is None:
        max_len = n - 1
    if max_len < math.ceil(math.log2(n)):
        raise ValueError(f"max_len {max_len} cannot fit {n} codewords")

    maximize = t < 1
    w = dist.weights
    order = sorted(range(n), key=lambda i: (-w[i], i))
    powers = {l: t**l for l in range(1, max_len + 1)}

    best = None
    best_multisets = []
    for ms in _length_multisets(n, max_len):
        value = sum(w[order[i]] * powers[ms[i]] for i in range(n))
        if best is None or (value > best if maximize else value < best):
            best = value
            best_multisets = [ms]
        elif value == best:
            best_multisets.append(ms)

    groups = _tie_groups(order, w)
    vectors = set()
    for ms in best_multisets:
        # permute lengths inside every equal-weight group of symbols
        per_group = []
        pos = 0
        for g in groups:
            chunk = ms[pos : pos + len(g)]
            per_group.append((g, sorted(set(permutations(chunk)))))
            pos += len(g)

        def assemble(idx, current):
            if idx == len(per_group):
                vectors.add(tuple(current))
                return
            g, options = per_group[idx]
            for opt in options:
                for sym, l in zip(g, opt):
                    current[sym] = l
                assemble(idx + 1, current)

        assemble(0, [0] * n)
    return OptimumSet(best, tuple(sorted(vectors)))


def exhaustive_alphabetic_optimum(p, theta) -> OptimumSet:
    """Evaluate every ordered binary tree over the symbols (Catalan many).

    theta != 1 scores a tree by sum w(i) theta**depth(i); theta = 1 by the
    weighted path length, minimized.
    """
    dist = _dist(p)
    n = dist.n
    _check_instance(dist, n)
    t = _theta_value(theta)
    w = dist.weights
    if n == 1:
        return OptimumSet(w[0] * t if t != 1 else 1 * w[0], ((1,),))

    linear = t == 1
    memo = {}

    def all_trees(j, k):
        """All (value, depth tuple) pairs for ordered trees over items j..k."""
        if (j, k) in memo:
            return memo[(j, k)]
        if j == k:
            out = [(w[j] if not linear else 0 * w[j], (0,))]
        else:
            out = []
            range_weight = sum(w[j : k + 1])
            for s in range(j, k):
                for lv, ld in all_trees(j, s):
                    for rv, rd in all_trees(s + 1, k):
                        depths = tuple(d + 1 for d in ld) + tuple(d + 1 for d in rd)
                        if linear:
                            value = lv + rv + range_weight
                        else:
                            value = t * (lv + rv)
                        out.append((value, depths))
        memo[(j, k)] = out
        return out

    maximize = (not linear) and t < 1
    best = None
    vectors = []
    for value, depths in all_trees(0, n - 1):
        if best is None or (value > best if maximize else value < best):
            best = value
            vectors = [depths]
        elif value == best:
            vectors.append(depths)
    return OptimumSet(best, tuple(sorted(set(vectors))))
