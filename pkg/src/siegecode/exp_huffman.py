"""Optimal codes for the decaying-window objective, all theta > 0.

The classic Huffman procedure, with one change: merging items of weights
w' and w'' produces an item of weight theta * (w' + w'').  Repeatedly
merging the two lightest items builds a code that maximizes
sum p(i) theta**l(i) for theta < 1 and minimizes it for theta > 1
(equivalently, minimizes the normalized penalty for every theta > 0).

Implementation is the standard two-queue trick: one queue of the sorted
original items, one of merged items.  Merged items come out in
nondecreasing order under both tie policies, so each queue stays sorted
and no heap is needed; total work is O(n log n) for the initial sort.
"""

from __future__ import annotations

from collections import deque
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

TIEBREAK_POLICIES = ("top-merge", "default")


@dataclass(frozen=True)
class MergeRecord:
    """One merge step: item ids combined and the resulting weight.

    Leaves carry ids 1..n; the item created at step t gets id n + t.
    The weight equals theta * (left weight + right weight), exact in
    rational mode.
    """

    step: int
    left: int
    right: int
    weight: Scalar


@dataclass
class HuffmanResult:
    tree: CodeTree
    lengths: LengthVector
    code: PrefixCode
    trace: tuple


class _Item:
    __slots__ = ("weight", "min_index", "item_id", "node")

    def __init__(self, weight, min_index, item_id, node):
        self.weight = weight
        self.min_index = min_index
        self.item_id = item_id
        self.node = node


def _front_is_merged(singles, merged, tiebreak) -> bool:
    """Decide which queue front is the smaller item under the policy."""
    if not merged:
        return False
    if not singles:
        return True
    s, m = singles[0], merged[0]
    if m.weight != s.weight:
        return m.weight < s.weight
    if tiebreak == "top-merge":
        return True  # merged items rank below singles of equal weight
    return m.min_index < s.min_index


def _pop_smallest(singles, merged, tiebreak) -> _Item:
    queue = merged if _front_is_merged(singles, merged, tiebreak) else singles
    return queue.popleft()


def build_exponential_huffman(p, theta, tiebreak: str = "top-merge") -> HuffmanResult:
    """Build an optimal code tree for the given weights and theta.

    tiebreak="top-merge" treats merged items as smaller than single items
    of equal weight (the policy that also minimizes expected length among
    objective-optimal codes).  tiebreak="default" breaks weight ties by
    the smallest original symbol index contained in an item, for
    reproducibility comparisons.  Both are deterministic.
    """
    if tiebreak not in TIEBREAK_POLICIES:
        raise ValueError(f"unknown tiebreak {tiebreak!r}; use one of {TIEBREAK_POLICIES}")
    dist = _dist(p)
    t = _theta_value(theta)
    n = dist.n

    if n == 1:
        # one symbol still needs one bit; kraft sum 1/2 by construction
        leaf = TreeNode(dist.weights[0], symbol=1)
        root = TreeNode(t * dist.weights[0], left=leaf)
        tree = CodeTree(root, 1)
        return HuffmanResult(tree, LengthVector((1,)), PrefixCode(("0",)), ())

    items = [
        _Item(w, i + 1, i + 1, TreeNode(w, symbol=i + 1))
        for i, w in enumerate(dist.weights)
    ]
    items.sort(key=lambda it: (it.weight, it.min_index))
    singles = deque(items)
    merged = deque()
    trace = []

    for step in range(1, n):
        a = _pop_smallest(singles, merged, tiebreak)
        b = _pop_smallest(singles, merged, tiebreak)
        w = t * (a.weight + b.weight)
        node = TreeNode(w, left=a.node, right=b.node)
        trace.append(MergeRecord(step, a.item_id, b.item_id, w))
        merged.append(_Item(w, min(a.min_index, b.min_index), n + step, node))

    root = merged.popleft().node
    tree = CodeTree(root, n)
    words = tree.codewords_by_symbol()
    return HuffmanResult(
        tree,
        LengthVector(tuple(len(w) for w in words)),
        PrefixCode.from_codewords(words),
        tuple(trace),
    )


def unary_code(n: int):
    """The chain code (0, 10, 110, ..., 11..10, 11..11), optimal for theta <= 1/2.

    Returns (LengthVector, PrefixCode) with lengths (1, 2, ..., n-1, n-1)
    and Kraft sum exactly 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return LengthVector((1,)), PrefixCode(("0",))
    words = ["1" * i + "0" for i in range(n - 1)]
    words.append("1" * (n - 1))
    lengths = LengthVector(tuple(len(w) for w in words))
    return lengths, PrefixCode.from_codewords(words)
