import random
from fractions import Fraction

import pytest

from siegecode import SourceDistribution, benford


@pytest.fixture
def benford_dist() -> SourceDistribution:
    return benford()


def random_rational_weights(rng: random.Random, n: int, hi: int = 50):
    """Raw positive integer weights as exact Fractions."""
    return [Fraction(rng.randint(1, hi)) for _ in range(n)]


def random_rational_probs(rng: random.Random, n: int, hi: int = 50):
    w = random_rational_weights(rng, n, hi)
    total = sum(w)
    return [x / total for x in w]


def random_float_probs(rng: random.Random, n: int):
    w = [rng.random() + 1e-3 for _ in range(n)]
    total = sum(w)
    return [x / total for x in w]
