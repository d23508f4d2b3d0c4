"""Optimal alphabetic codes by dynamic programming over splitting points.

An alphabetic code orders its codewords lexicographically with the
symbols, so it is an ordered binary tree: every internal node asks "is
the symbol greater than x?" for some splitting point x.  Subtrees of an
optimal tree are optimal, which gives the recurrence over item ranges

    W[j][j] = w(j)
    W[j][k] = theta * opt_{s in j..k-1} (W[j][s] + W[s+1][k])

with opt = max for theta < 1 and min for theta > 1.  W[1][n] then equals
sum w(i) theta**l(i) for the best alphabetic tree.  At theta = 1 that
recurrence carries no information, so the classic additive form
C[j][k] = opt_s(C[j][s] + C[s+1][k]) + sum(w(j..k)) is used instead and
C[1][n] is the minimum weighted path length.

O(n^3) time, O(n^2) space.  The split-range reduction that speeds up the
theta = 1 case is deliberately not applied for other theta: the optimal
split of a range is not always bracketed by the splits of its two
subranges there (see split_monotonicity_probe).
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    CodeTree,
    LengthVector,
    PrefixCode,
    Scalar,
    TreeNode,
    _dist,
    _theta_value,
)


@dataclass
class DpTable:
    """Upper-triangular range weights and chosen splits, 1-based.

    weight[(j, k)] is the optimal subtree weight for items j..k under the
    exponential recurrence (for theta = 1: the additive subtree cost, with
    zero on the diagonal).  split[(j, k)] is the chosen splitting point,
    the smallest optimal s.
    """

    n: int
    theta: Scalar
    weight: dict
    split: dict

    def entries(self):
        """(j, k, split) triples for all ranges with j < k, in row order."""
        for j in range(1, self.n + 1):
            for k in range(j + 1, self.n + 1):
                yield j, k, self.split[(j, k)]


@dataclass
class AlphabeticResult:
    tree: CodeTree
    lengths: LengthVector
    code: PrefixCode
    table: DpTable
    objective: Scalar


def _solve_exponential(w, t):
    """Fill W/split for theta != 1.  0-based arrays internally."""
    n = len(w)
    maximize = t < 1
    W = [[None] * n for _ in range(n)]
    split = [[None] * n for _ in range(n)]
    for j in range(n):
        W[j][j] = w[j]
    for span in range(1, n):
        for j in range(n - span):
            k = j + span
            best = None
            best_s = None
            for s in range(j, k):
                cand = W[j][s] + W[s + 1][k]
                if best is None or (cand > best if maximize else cand < best):
                    best = cand
                    best_s = s
            W[j][k] = t * best
            split[j][k] = best_s
    return W, split


def _solve_linear(w):
    """Classic additive table for theta = 1 (minimum weighted path length)."""
    n = len(w)
    prefix = [0]
    for x in w:
        prefix.append(prefix[-1] + x)
    C = [[None] * n for _ in range(n)]
    split = [[None] * n for _ in range(n)]
    for j in range(n):
        C[j][j] = 0 * w[j]  # preserves Fraction vs float type
    for span in range(1, n):
        for j in range(n - span):
            k = j + span
            best = None
            best_s = None
            for s in range(j, k):
                cand = C[j][s] + C[s + 1][k]
                if best is None or cand < best:
                    best = cand
                    best_s = s
            C[j][k] = best + (prefix[k + 1] - prefix[j])
            split[j][k] = best_s
    return C, split


def _build_tree(weights, W, split, j, k):
    if j == k:
        return TreeNode(weights[j], symbol=j + 1)
    s = split[j][k]
    return TreeNode(
        W[j][k],
        left=_build_tree(weights, W, split, j, s),
        right=_build_tree(weights, W, split, s + 1, k),
        split=s + 1,
    )


def build_alphabetic_optimal(p, theta) -> AlphabeticResult:
    """Best alphabetic code for the given weights, any theta > 0.

    The reported objective is W[1][n]: sum w(i) theta**l(i) for theta != 1,
    the weighted path length sum w(i) l(i) at theta = 1.
    """
    dist = _dist(p)
    t = _theta_value(theta)
    w = list(dist.weights)
    n = len(w)

    if n == 1:
        leaf = TreeNode(w[0], symbol=1)
        root = TreeNode(t * w[0], left=leaf)
        table = DpTable(1, t, {(1, 1): w[0]}, {})
        objective = t * w[0] if t != 1 else 1 * w[0]
        return AlphabeticResult(
            CodeTree(root, 1),
            LengthVector((1,)),
            PrefixCode(("0",), alphabetic=True),
            table,
            objective,
        )

    if t == 1:
        W, split = _solve_linear(w)
    else:
        W, split = _solve_exponential(w, t)

    root = _build_tree(w, W, split, 0, n - 1)
    tree = CodeTree(root, n)
    words = tree.codewords_by_symbol()
    table = DpTable(
        n,
        t,
        {(j + 1, k + 1): W[j][k] for j in range(n) for k in range(j, n)},
        {(j + 1, k + 1): split[j][k] + 1 for j in range(n) for k in range(j + 1, n)},
    )
    return AlphabeticResult(
        tree,
        LengthVector(tuple(len(cw) for cw in words)),
        PrefixCode.from_codewords(words),
        table,
        W[0][n - 1],
    )


@dataclass(frozen=True)
class SplitProbeReport:
    """Root splits of the full range and its two size n-1 subranges."""

    split_full: int
    split_prefix: int
    split_suffix: int
    violated: bool


def split_monotonicity_probe(weights, theta) -> SplitProbeReport:
    """Check whether the full-range root split lies between the subrange splits.

    For the additive theta = 1 objective the optimal root split of items
    1..n always lies between the root splits of 1..n-1 and 2..n, which is
    what makes the classic O(n^2) speedup sound.  For other theta it can
    fail; weights (8, 1, 9, 6) at theta = 0.6 are a counterexample.
    Splits are reported as 1-based symbol indices under the deterministic
    smallest-s tie-break.
    """
    dist = _dist(weights)
    if dist.n < 3:
        raise ValueError("the probe needs at least 3 symbols")
    t = _theta_value(theta)

    full = build_alphabetic_optimal(dist, t)
    prefix = build_alphabetic_optimal(dist.weights[:-1], t)
    suffix = build_alphabetic_optimal(dist.weights[1:], t)

    s_full = full.table.split[(1, dist.n)]
    s_prefix = prefix.table.split[(1, dist.n - 1)]
    s_suffix = suffix.table.split[(1, dist.n - 1)] + 1  # shift back to 1..n indexing

    lo, hi = min(s_prefix, s_suffix), max(s_prefix, s_suffix)
    return SplitProbeReport(s_full, s_prefix, s_suffix, not lo <= s_full <= hi)
