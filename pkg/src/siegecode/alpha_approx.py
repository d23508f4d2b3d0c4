"""Fast near-optimal alphabetic codes.

The O(n^3) dynamic program is overkill when an additive-1 guarantee is
enough.  Starting from any good nonalphabetic length vector l_non (the
entropy-matching lengths or the optimal merge-algorithm lengths), a valid
alphabetic code within one penalty unit of l_non is built in linear time:

  1. pick l_non,
  2. find the interior "minimal points" of the length profile,
  3. add one bit at the minimal points only and assign codewords
     canonically in symbol order,
  4. contract every one-child tree node, which restores Kraft sum 1
     without ever lengthening a codeword.

Adding one bit to every length (the simple fallback) also always works,
since a length multiset with Kraft sum <= 1/2 is achievable by an
alphabetic code in any symbol order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exp_huffman import build_exponential_huffman
from .model import (
    LengthVector,
    PrefixCode,
    _dist,
    _lengths_tuple,
    _theta_value,
    kraft_sum,
    normalized_penalty,
)
from .renyi_bounds import alpha_order

#: guard against float results sitting a hair above an exact integer
_CEIL_EPS = 1e-9


class AlphabeticOverflowError(ValueError):
    """Raised when no alphabetic code exists with the requested ordered lengths."""


def shannon_like_lengths(p, theta) -> LengthVector:
    """Entropy-matching lengths ceil(-alpha*log2 p(i) + log2 sum_j p(j)**alpha).

    Kraft-feasible by construction and within one unit of the optimal
    penalty for every theta > 1/2.  Linear time.
    """
    dist = _dist(p)
    if not dist.normalized:
        raise ValueError("Shannon-like lengths need a normalized distribution")
    a = alpha_order(_theta_value(theta))  # rejects theta <= 1/2
    probs = [float(w) for w in dist.weights]
    log_power_sum = math.log2(sum(q**a for q in probs))
    lengths = tuple(
        max(1, math.ceil(-a * math.log2(q) + log_power_sum - _CEIL_EPS)) for q in probs
    )
    return LengthVector(lengths)


def canonical_alphabetic_codewords(lengths) -> PrefixCode:
    """Assign codewords for the given ordered lengths, smallest values first.

    The first codeword is l(1) zeros.  Each following codeword comes from
    its predecessor by binary increment: truncate to l(i) bits then add 1
    when l(i) <= l(i-1), or add 1 first and append zeros when
    l(i) > l(i-1).  A carry past the top bit means no alphabetic code has
    these lengths in this order, reported as AlphabeticOverflowError.
    """
    ls = _lengths_tuple(lengths)
    values = [0]  # codeword i as an integer of width ls[i]
    for i in range(1, len(ls)):
        prev = values[-1]
        if ls[i] <= ls[i - 1]:
            word = (prev >> (ls[i - 1] - ls[i])) + 1
        else:
            word = (prev + 1) << (ls[i] - ls[i - 1])
            if prev + 1 >= (1 << ls[i - 1]):
                raise AlphabeticOverflowError(
                    f"carry overflow at codeword {i + 1}: lengths {ls} admit no alphabetic code"
                )
        if word >= (1 << ls[i]):
            raise AlphabeticOverflowError(
                f"carry overflow at codeword {i + 1}: lengths {ls} admit no alphabetic code"
            )
        values.append(word)
    words = tuple(format(v, f"0{l}b") for v, l in zip(values, ls))
    return PrefixCode(words, alphabetic=True)


def add_one_alphabetic(l_non) -> PrefixCode:
    """Alphabetic code with every length of l_non raised by one.

    Valid for any Kraft-feasible l_non: the raised lengths have Kraft sum
    at most 1/2, which is always alphabetically achievable.  Codeword i is
    the first l_non(i) + 1 bits of the running sum of 2**(-l_non(j)) over
    j < i; for nondecreasing l_non this is the canonical code of l_non
    with a zero appended.
    """
    ls = _lengths_tuple(l_non)
    if kraft_sum(ls) > 1:
        raise ValueError("l_non must satisfy the Kraft inequality")
    depth = max(ls) + 1
    running = 0  # numerator of the cumulative Kraft sum over 2**depth
    words = []
    for l in ls:
        # round the cumulative sum up to l+1 bits; the codeword's dyadic
        # interval then fits inside [running, running + 2**-l), and those
        # windows are disjoint across symbols
        shift = depth - (l + 1)
        word = (running + (1 << shift) - 1) >> shift
        words.append(format(word, f"0{l + 1}b"))
        running += 1 << (depth - l)
    return PrefixCode(tuple(words), alphabetic=True)


def minimal_points(l_non, weights) -> frozenset:
    """Interior indices whose length is strictly below both neighbors.

    On a flat run l(i-1) > l(i) = ... = l(i+k) < l(i+k+1) only the
    lightest member counts (smallest index on weight ties).  Runs touching
    either end of the alphabet never qualify.  1-based indices.
    """
    ls = _lengths_tuple(l_non)
    dist = _dist(weights)
    if len(ls) != dist.n:
        raise ValueError("lengths and weights must have matching size")
    w = dist.weights
    n = len(ls)
    points = []
    start = 0
    while start < n:
        end = start
        while end + 1 < n and ls[end + 1] == ls[start]:
            end += 1
        interior = start > 0 and end < n - 1
        if interior and ls[start - 1] > ls[start] and ls[end + 1] > ls[start]:
            best = min(range(start, end + 1), key=lambda i: (w[i], i))
            points.append(best + 1)
        start = end + 1
    return frozenset(points)


class _TrieNode:
    __slots__ = ("children", "symbol")

    def __init__(self):
        self.children = {}
        self.symbol = None


def _contract(node):
    """Splice out one-child nodes bottom-up; returns the replacement node."""
    if node.symbol is not None:
        return node
    for bit in list(node.children):
        node.children[bit] = _contract(node.children[bit])
    if len(node.children) == 1:
        return next(iter(node.children.values()))
    return node


def compact_tree(code: PrefixCode) -> PrefixCode:
    """Contract every one-child node of the code tree.

    Yields a code with Kraft sum exactly 1; no codeword ever gets longer
    and symbol order is preserved, so an alphabetic input stays
    alphabetic.
    """
    root = _TrieNode()
    for i, word in enumerate(code.codewords):
        node = root
        for bit in word:
            node = node.children.setdefault(bit, _TrieNode())
        node.symbol = i + 1
    root = _contract(root)

    if root.symbol is not None:
        # a single codeword contracts to the root; keep the one-bit minimum
        return PrefixCode(("0",), alphabetic=code.alphabetic)

    words = {}
    stack = [(root, "")]
    while stack:
        node, path = stack.pop()
        if node.symbol is not None:
            words[node.symbol] = path
            continue
        for bit, child in node.children.items():
            stack.append((child, path + bit))
    out = tuple(words[i] for i in range(1, code.n + 1))
    return PrefixCode(out, alphabetic=code.alphabetic)


@dataclass
class ApproxResult:
    """Near-optimal alphabetic code plus its cost accounting."""

    code: PrefixCode
    lengths: LengthVector
    base: str
    base_lengths: LengthVector
    minimal_points: frozenset
    fallback_used: bool
    penalty: float
    base_penalty: float


def near_optimal_alphabetic(p, theta, base: str = "huffman") -> ApproxResult:
    """Steps 1-4 composed: minimal-point raise, canonical assignment, compaction.

    base="huffman" starts from the optimal nonalphabetic lengths (any
    theta > 0); base="shannon" starts from the entropy-matching lengths
    (theta > 1/2) and skips the merge algorithm entirely.  The result is
    a valid alphabetic code whose penalty is strictly below
    base penalty + 1.  If the canonical assignment of the raised lengths
    overflows, the always-feasible add-one construction is used instead;
    compaction then restores the strict guarantee.
    """
    dist = _dist(p)
    t = _theta_value(theta)
    if base == "huffman":
        l_non = build_exponential_huffman(dist, t).lengths
    elif base == "shannon":
        l_non = shannon_like_lengths(dist.probabilities(), t)
    else:
        raise ValueError(f"unknown base {base!r}; use 'huffman' or 'shannon'")

    points = minimal_points(l_non, dist)
    raised = tuple(
        l + 1 if (i + 1) in points else l for i, l in enumerate(l_non)
    )
    fallback = False
    try:
        pre = canonical_alphabetic_codewords(raised)
    except AlphabeticOverflowError:
        pre = add_one_alphabetic(l_non)
        fallback = True
    final = compact_tree(pre)

    probs = dist.probabilities()
    return ApproxResult(
        code=final,
        lengths=final.lengths(),
        base=base,
        base_lengths=l_non,
        minimal_points=points,
        fallback_used=fallback,
        penalty=float(normalized_penalty(probs, final.lengths(), t)),
        base_penalty=float(normalized_penalty(probs, l_non, t)),
    )
