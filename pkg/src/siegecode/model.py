"""Core types and objective evaluators.

A message X drawn from a known distribution p is sent bit by bit over a
channel that stays open for a random number of bit slots T, where
P(T = t) = (1 - theta) * theta**t.  A codeword of length l therefore
arrives in full with probability theta**l, and a whole code succeeds with
probability sum_i p(i) * theta**l(i).  Everything else in the package is
about optimizing, bounding, or simulating that quantity.

Two arithmetic modes are supported throughout: exact `fractions.Fraction`
(weights and theta given as rationals) and IEEE doubles.  The algorithms
are written generically; whichever scalar type comes in flows through.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, float]

ARITHMETIC_ENV = "SIEGECODE_ARITHMETIC"

#: |sum(weights) - 1| tolerance for calling a float distribution normalized.
NORMALIZATION_TOL = 1e-12


def arithmetic_mode() -> str:
    """Arithmetic mode selected via the SIEGECODE_ARITHMETIC env var.

    Returns "rational" or "float" (the default).
    """
    mode = os.environ.get(ARITHMETIC_ENV, "float").strip().lower()
    if mode not in ("rational", "float"):
        raise ValueError(f"unknown arithmetic mode {mode!r}")
    return mode


def parse_scalar(token: str) -> Fraction:
    """Parse a decimal ("0.125") or ratio ("1/8") token to an exact Fraction."""
    try:
        return Fraction(token.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar {token!r}: {exc}") from None


def coerce_scalar(token: Union[str, int, float, Fraction], mode: str = "float") -> Scalar:
    """Parse and convert a scalar to the requested arithmetic mode."""
    if isinstance(token, str):
        value = parse_scalar(token)
    elif isinstance(token, bool):
        raise ValueError("booleans are not scalars")
    elif isinstance(token, int):
        value = Fraction(token)
    else:
        value = token
    if mode == "float":
        return float(value)
    if isinstance(value, float):
        # best rational reading of a float given on a rational-mode run
        return Fraction(value).limit_denominator(10**12)
    return value


@dataclass(frozen=True)
class SourceDistribution:
    """Ordered, strictly positive symbol weights for the alphabet 1..n.

    Index order is the alphabetic symbol order.  `normalized` is true when
    the weights sum to one (exactly in rational mode, within
    NORMALIZATION_TOL in float mode).
    """

    weights: tuple

    def __post_init__(self):
        weights = tuple(self.weights)
        if not weights:
            raise ValueError("a distribution needs at least one weight")
        for w in weights:
            if not w > 0:
                raise ValueError(f"weights must be strictly positive, got {w!r}")
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Scalar:
        return sum(self.weights)

    @property
    def normalized(self) -> bool:
        total = self.total
        if isinstance(total, Fraction):
            return total == 1
        return abs(total - 1.0) <= NORMALIZATION_TOL

    def probabilities(self) -> "SourceDistribution":
        """This distribution rescaled to sum to one."""
        if self.normalized:
            return self
        total = self.total
        return SourceDistribution(tuple(w / total for w in self.weights))

    @classmethod
    def from_tokens(cls, tokens: Iterable[str], mode: str = "float") -> "SourceDistribution":
        return cls(tuple(coerce_scalar(t, mode) for t in tokens))

    @classmethod
    def from_text(cls, text: str, mode: str = "float") -> "SourceDistribution":
        """Parse whitespace-separated decimal or ratio tokens."""
        tokens = text.split()
        if not tokens:
            raise ValueError("no weight tokens found")
        return cls.from_tokens(tokens, mode)


def benford() -> SourceDistribution:
    """First-digit distribution p(i) = log10(i+1) - log10(i), i = 1..9."""
    return SourceDistribution(
        tuple(math.log10(i + 1) - math.log10(i) for i in range(1, 10))
    )


def uniform(n: int, mode: str = "float") -> SourceDistribution:
    if n < 1:
        raise ValueError("uniform distribution needs n >= 1")
    w = Fraction(1, n) if mode == "rational" else 1.0 / n
    return SourceDistribution((w,) * n)


_REGIME_TRIVIAL = "trivial"
_REGIME_SIEGE = "siege"
_REGIME_LINEAR = "linear-limit"
_REGIME_RISK_AVERSE = "risk-averse"


@dataclass(frozen=True)
class DecayParameter:
    """Per-bit survival probability theta of the transmission window.

    Regimes: trivial (theta <= 1/2, a unary code is always optimal),
    siege (1/2 < theta < 1, the interesting maximization), linear-limit
    (theta = 1, plain expected length), risk-averse (theta > 1,
    minimization).  `alpha` is the matching Renyi entropy order
    1 / (1 + log2(theta)), defined only for theta > 1/2.
    """

    theta: Scalar

    def __post_init__(self):
        if not self.theta > 0:
            raise ValueError("theta must be positive")

    @property
    def regime(self) -> str:
        t = self.theta
        if t <= Fraction(1, 2):
            return _REGIME_TRIVIAL
        if t < 1:
            return _REGIME_SIEGE
        if t == 1:
            return _REGIME_LINEAR
        return _REGIME_RISK_AVERSE

    @property
    def alpha(self) -> float:
        if not self.theta > Fraction(1, 2):
            raise ValueError("alpha is undefined for theta <= 1/2 (trivial regime)")
        if self.theta == 1:
            return 1.0
        return 1.0 / (1.0 + math.log2(self.theta))


def _theta_value(theta) -> Scalar:
    """Accept a DecayParameter or a bare scalar; validate positivity."""
    value = theta.theta if isinstance(theta, DecayParameter) else theta
    if isinstance(value, int):
        value = Fraction(value)
    if not value > 0:
        raise ValueError("theta must be positive")
    return value


@dataclass(frozen=True)
class LengthVector:
    """Codeword lengths l(1..n), every entry a positive integer."""

    lengths: tuple

    def __post_init__(self):
        lengths = tuple(int(l) for l in self.lengths)
        if not lengths:
            raise ValueError("empty length vector")
        if any(l < 1 for l in lengths):
            raise ValueError("codeword lengths must be >= 1")
        object.__setattr__(self, "lengths", lengths)

    def __len__(self):
        return len(self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __getitem__(self, i):
        return self.lengths[i]

    def kraft_sum(self) -> Fraction:
        return kraft_sum(self.lengths)

    @property
    def feasible(self) -> bool:
        return self.kraft_sum() <= 1


def _lengths_tuple(lengths) -> tuple:
    if isinstance(lengths, LengthVector):
        return lengths.lengths
    out = tuple(int(l) for l in lengths)
    if not out:
        raise ValueError("empty length vector")
    if any(l < 1 for l in out):
        raise ValueError("codeword lengths must be >= 1")
    return out


def kraft_sum(lengths) -> Fraction:
    """Exact Kraft sum sum_i 2**(-l(i)) as a Fraction."""
    ls = _lengths_tuple(lengths)
    return sum(Fraction(1, 2**l) for l in ls)


def is_prefix_free(codewords: Sequence[str]) -> bool:
    """True when no codeword is a prefix of another (all distinct)."""
    words = sorted(codewords)
    for a, b in zip(words, words[1:]):
        if b.startswith(a):
            return False
    return True


def is_alphabetic(codewords: Sequence[str]) -> bool:
    """True when codewords strictly increase in lexicographic order."""
    return all(a < b for a, b in zip(codewords, codewords[1:]))


@dataclass(frozen=True)
class PrefixCode:
    """A binary prefix code; codeword i encodes symbol i (1-based)."""

    codewords: tuple
    alphabetic: bool = False

    def __post_init__(self):
        words = tuple(self.codewords)
        if not words:
            raise ValueError("a code needs at least one codeword")
        for w in words:
            if not w or set(w) - {"0", "1"}:
                raise ValueError(f"codeword {w!r} is not a nonempty bit string")
        if not is_prefix_free(words):
            raise ValueError("codewords are not prefix-free")
        if self.alphabetic and not is_alphabetic(words):
            raise ValueError("codewords are not in lexicographic symbol order")
        object.__setattr__(self, "codewords", words)

    @property
    def n(self) -> int:
        return len(self.codewords)

    def lengths(self) -> LengthVector:
        return LengthVector(tuple(len(w) for w in self.codewords))

    @classmethod
    def from_codewords(cls, words: Iterable[str]) -> "PrefixCode":
        words = tuple(words)
        return cls(words, alphabetic=is_alphabetic(words))


class TreeNode:
    """Node of a binary code tree.

    Leaves carry `symbol`; internal nodes carry the combined `weight` and,
    for alphabetic trees, the splitting point `split` (largest symbol of
    the left subtree).
    """

    __slots__ = ("weight", "symbol", "left", "right", "split")

    def __init__(self, weight, symbol=None, left=None, right=None, split=None):
        self.weight = weight
        self.symbol = symbol
        self.left = left
        self.right = right
        self.split = split

    @property
    def is_leaf(self) -> bool:
        return self.symbol is not None


@dataclass
class CodeTree:
    """A rooted binary code tree over symbols 1..n."""

    root: TreeNode
    n: int

    def _walk(self):
        # (node, path) pairs in depth-first, left-before-right order
        stack = [(self.root, "")]
        while stack:
            node, path = stack.pop()
            if node.is_leaf:
                yield node, path
                continue
            if node.right is not None:
                stack.append((node.right, path + "1"))
            if node.left is not None:
                stack.append((node.left, path + "0"))

    def codewords_by_symbol(self) -> tuple:
        words = {}
        for node, path in self._walk():
            words[node.symbol] = path or "0"  # single-leaf tree still gets one bit
        if len(words) != self.n:
            raise ValueError("tree does not carry one leaf per symbol")
        return tuple(words[i] for i in range(1, self.n + 1))

    def lengths_by_symbol(self) -> LengthVector:
        return LengthVector(tuple(len(w) for w in self.codewords_by_symbol()))

    def leaf_symbols_inorder(self) -> tuple:
        return tuple(node.symbol for node, _ in sorted(self._walk(), key=lambda t: t[1]))

    def has_one_child_nodes(self) -> bool:
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                continue
            if (node.left is None) != (node.right is None):
                return True
            stack.extend(c for c in (node.left, node.right) if c is not None)
        return False


def _dist(p) -> SourceDistribution:
    if isinstance(p, SourceDistribution):
        return p
    return SourceDistribution(tuple(p))


def _check_pair(p, lengths):
    dist = _dist(p)
    ls = _lengths_tuple(lengths)
    if dist.n != len(ls):
        raise ValueError(
            f"distribution has {dist.n} symbols but length vector has {len(ls)}"
        )
    return dist, ls


def success_probability(p, lengths, theta) -> Scalar:
    """P[l(X) <= T] = sum_i p(i) * theta**l(i) for the geometric window T.

    Requires a normalized distribution; exact when p and theta are rational.
    """
    dist, ls = _check_pair(p, lengths)
    if not dist.normalized:
        raise ValueError("success probability needs a normalized distribution")
    t = _theta_value(theta)
    return sum(w * t**l for w, l in zip(dist.weights, ls))


def normalized_penalty(p, lengths, theta) -> Scalar:
    """Penalty log_theta(sum_i p(i) theta**l(i)); expected length at theta = 1.

    Lower is better in every regime.  The theta = 1 value is the continuous
    limit of the log form.
    """
    dist, ls = _check_pair(p, lengths)
    if not dist.normalized:
        raise ValueError("penalty needs a normalized distribution")
    t = _theta_value(theta)
    if t == 1:
        return sum(w * l for w, l in zip(dist.weights, ls))
    s = sum(w * t**l for w, l in zip(dist.weights, ls))
    return math.log(s) / math.log(t)


def expected_windows(p, lengths, theta, mode: str = "independent") -> Scalar:
    """Expected number of windows until a message gets through.

    mode="independent": a fresh message every window; the count is
    geometric with success probability sum p theta**l, so the mean is its
    inverse.  mode="constant": one fixed message retransmitted from
    scratch each window, giving sum_i p(i) * theta**(-l(i)).
    """
    dist, ls = _check_pair(p, lengths)
    if not dist.normalized:
        raise ValueError("expected windows needs a normalized distribution")
    t = _theta_value(theta)
    if not 0 < t < 1:
        raise ValueError("the repeated-window model needs theta in (0, 1)")
    if mode == "independent":
        return 1 / success_probability(dist, ls, t)
    if mode == "constant":
        return sum(w * t ** (-l) for w, l in zip(dist.weights, ls))
    raise ValueError(f"unknown mode {mode!r}; use 'independent' or 'constant'")


def encode(message: Sequence[int], code: PrefixCode) -> str:
    """Concatenate the codewords of a 1-based symbol sequence."""
    out = []
    for sym in message:
        if not 1 <= sym <= code.n:
            raise ValueError(f"unknown symbol {sym}; alphabet is 1..{code.n}")
        out.append(code.codewords[sym - 1])
    return "".join(out)


def decode(bits: str, code: PrefixCode) -> tuple:
    """Split a bit string back into symbols; the inverse of encode.

    Raises on non-bit characters, on a prefix that cannot extend to any
    codeword, and on dangling bits at the end of the string.
    """
    table = {w: i + 1 for i, w in enumerate(code.codewords)}
    max_len = max(len(w) for w in code.codewords)
    symbols = []
    current = ""
    for ch in bits:
        if ch not in "01":
            raise ValueError(f"invalid bit {ch!r}")
        current += ch
        sym = table.get(current)
        if sym is not None:
            symbols.append(sym)
            current = ""
        elif len(current) >= max_len:
            raise ValueError(f"bit group {current!r} matches no codeword")
    if current:
        raise ValueError(f"dangling bits {current!r} at end of input")
    return tuple(symbols)
