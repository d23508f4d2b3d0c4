"""Renyi-entropy bounds on the optimal success probability.

For theta > 1/2 the window objective pairs with the Renyi entropy of
order alpha = 1 / (1 + log2(theta)).  The optimal success probability P*
for theta in (0.5, 1) satisfies

    theta**(H_alpha(p) + 1)  <  P*  <=  theta**H_alpha(p)

or equivalently 0 <= L* - H_alpha(p) < 1 in penalty form, which also
holds for the minimization regime theta > 1.  A sharper lower bound is
available whenever some optimal code gives the most likely symbol a
one-bit codeword, which is guaranteed once p(1) >= 2*theta/(2*theta+3).
That threshold is tight: just below it sit four-symbol distributions
whose only optimal length vector is (2, 2, 2, 2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .model import SourceDistribution, _dist, _theta_value


def alpha_order(theta) -> float:
    """Renyi order alpha = 1 / (1 + log2(theta)) = 1 / log2(2*theta).

    Defined for theta > 1/2 only; equals 1 exactly at theta = 1.
    """
    t = _theta_value(theta)
    if not t > Fraction(1, 2):
        raise ValueError("alpha is undefined for theta <= 1/2 (trivial regime)")
    if t == 1:
        return 1.0
    return 1.0 / (1.0 + math.log2(t))


def renyi_entropy(p, alpha: float) -> float:
    """H_alpha(p) = log2(sum p(i)**alpha) / (1 - alpha), in bits.

    alpha = 1 returns the Shannon limit -sum p log2 p.
    """
    dist = _dist(p)
    if not dist.normalized:
        raise ValueError("entropy needs a normalized distribution")
    if not alpha > 0:
        raise ValueError("alpha must be positive")
    probs = [float(w) for w in dist.weights]
    if alpha == 1:
        return -sum(q * math.log2(q) for q in probs)
    return math.log2(sum(q**alpha for q in probs)) / (1.0 - alpha)


def success_bounds(p, theta) -> Tuple[float, float]:
    """(theta**(H_alpha + 1), theta**H_alpha): brackets for the optimal
    success probability, theta in (0.5, 1).  The lower bound is strict,
    the upper is attained exactly when the entropy-matching lengths are
    all integers.
    """
    t = _theta_value(theta)
    if not Fraction(1, 2) < t < 1:
        raise ValueError("success bounds apply to theta in (0.5, 1)")
    h = renyi_entropy(p, alpha_order(t))
    tf = float(t)
    return tf ** (h + 1.0), tf**h


def penalty_bounds(p, theta) -> Tuple[float, float]:
    """(H_alpha, H_alpha + 1): brackets for the optimal penalty, any theta > 1/2."""
    t = _theta_value(theta)
    if not t > Fraction(1, 2):
        raise ValueError("penalty bounds apply to theta > 1/2")
    h = renyi_entropy(p, alpha_order(t))
    return h, h + 1.0


def _sorted_probs(p) -> list:
    dist = _dist(p).probabilities()
    return sorted(dist.weights, reverse=True)


def short_codeword_guarantee(p, theta) -> bool:
    """True when p(1) >= 2*theta / (2*theta + 3), p(1) the largest probability.

    In that case some optimal code for theta in (0.5, 1) assigns a
    length-1 codeword to the most probable symbol.  Rejected for
    theta >= 1, where the predicate is unsound: at theta = 2 the
    distribution (0.55, 0.15, 0.15, 0.15) has p(1) > 0.4 yet every
    optimal code uses length 2 everywhere.
    """
    t = _theta_value(theta)
    if not Fraction(1, 2) < t < 1:
        raise ValueError("the short-codeword guarantee applies to theta in (0.5, 1)")
    p1 = _sorted_probs(p)[0]
    return p1 >= 2 * t / (2 * t + 3)


def corollary_lower_bound(p, theta) -> float:
    """Improved lower bound on the optimal success probability when l(1) = 1:

        theta**2 * (theta**(alpha * H_alpha) - p(1)**alpha)**(1/alpha) + theta * p(1)

    Valid for theta in (0.5, 1) whenever some optimal code gives the most
    probable symbol one bit, in particular whenever
    short_codeword_guarantee holds.
    """
    t = _theta_value(theta)
    if not Fraction(1, 2) < t < 1:
        raise ValueError("the improved bound applies to theta in (0.5, 1)")
    probs = _sorted_probs(p)
    a = alpha_order(t)
    h = renyi_entropy(SourceDistribution(tuple(probs)), a)
    tf = float(t)
    p1 = float(probs[0])
    bracket = tf ** (a * h) - p1**a
    if bracket < 0:
        # cannot happen with n >= 2 in exact arithmetic; guards float noise
        raise ValueError("bound not applicable: bracketed quantity is negative")
    return tf**2 * bracket ** (1.0 / a) + tf * p1


@dataclass(frozen=True)
class BoundsReport:
    """Bundle of entropy bounds for one (p, theta) instance.

    `lower` is the best available lower bound on the optimal success
    probability: the improved bound when the short-codeword guarantee
    applies, otherwise the simple one.
    """

    alpha: float
    entropy: float
    lower: float
    upper: float
    simple_lower: float
    corollary_lower: Optional[float]
    theorem1_applies: bool


def bounds_report(p, theta) -> BoundsReport:
    """All bounds for theta in (0.5, 1) in one report."""
    t = _theta_value(theta)
    dist = _dist(p).probabilities()
    a = alpha_order(t)
    h = renyi_entropy(dist, a)
    simple_lower, upper = success_bounds(dist, t)
    applies = short_codeword_guarantee(dist, t)
    corollary = corollary_lower_bound(dist, t) if applies else None
    lower = corollary if corollary is not None else simple_lower
    return BoundsReport(a, h, lower, upper, simple_lower, corollary, applies)


def tightness_family(theta, epsilon) -> SourceDistribution:
    """Four-symbol family sitting just below the short-codeword threshold:

        (2*theta/(2*theta+3) - 3*eps, 1/(2*theta+3) + eps,  x3)

    for eps in (0, (2*theta-1)/(8*theta+12)).  Sums to one exactly in
    rational mode, and its optimal length vector is (2, 2, 2, 2), so no
    optimal code starts with a one-bit codeword.
    """
    t = _theta_value(theta)
    if not Fraction(1, 2) < t < 1:
        raise ValueError("the tightness family needs theta in (0.5, 1)")
    eps = epsilon if isinstance(epsilon, (Fraction, float)) else Fraction(epsilon)
    hi = (2 * t - 1) / (8 * t + 12)
    if not 0 < eps < hi:
        raise ValueError(f"epsilon must lie strictly inside (0, {hi})")
    head = 2 * t / (2 * t + 3) - 3 * eps
    tail = 1 / (2 * t + 3) + eps
    return SourceDistribution((head, tail, tail, tail))
