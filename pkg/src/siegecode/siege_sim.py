"""Monte Carlo checks of the geometric-window model.

The window length T is geometric: P(T = t) = (1 - theta) * theta**t.
Sampling uses the inverse CDF, t = floor(ln(u) / ln(theta)) for u uniform
on (0, 1].  All randomness comes from numpy's PCG64 generator seeded with
a single 64-bit integer, so sequential runs with the same seed reproduce
bit-identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import PrefixCode, _dist, _theta_value

#: windows per trial before a repeated-window trial is declared censored
WINDOW_CAP = 10**6


@dataclass(frozen=True)
class SimReport:
    trials: int
    successes: int
    estimate: float
    standard_error: float
    seed: int


@dataclass(frozen=True)
class WindowsReport:
    """Mean windows-to-success over trials, with its standard error."""

    trials: int
    mean_windows: float
    standard_error: float
    seed: int
    mode: str
    censored: int = 0


def _check_theta(theta) -> float:
    t = float(_theta_value(theta))
    if not 0.0 < t < 1.0:
        raise ValueError("window sampling needs theta in (0, 1)")
    return t


def sample_window(theta, rng: np.random.Generator) -> int:
    """Draw one window length T with P(T = t) = (1 - theta) * theta**t."""
    t = _check_theta(theta)
    u = 1.0 - rng.random()  # uniform on (0, 1]; avoids log(0)
    return int(math.log(u) / math.log(t))


def _sample_windows(t: float, rng, size: int) -> np.ndarray:
    u = 1.0 - rng.random(size)
    return np.floor(np.log(u) / math.log(t)).astype(np.int64)


def _sample_symbols(probs: np.ndarray, rng, size: int) -> np.ndarray:
    """0-based symbol indices distributed as probs."""
    cdf = np.cumsum(probs)
    cdf[-1] = 1.0
    return np.searchsorted(cdf, rng.random(size), side="right")


def simulate_siege(p, code: PrefixCode, theta, trials: int, seed: int) -> SimReport:
    """Estimate P[l(X) <= T] by drawing messages and windows.

    The estimate should sit within a few standard errors of
    success_probability(p, lengths(code), theta).
    """
    dist = _dist(p).probabilities()
    if code.n != dist.n:
        raise ValueError(
            f"code has {code.n} codewords but the alphabet has {dist.n} symbols"
        )
    if trials < 1:
        raise ValueError("trials must be >= 1")
    t = _check_theta(theta)

    rng = np.random.default_rng(seed)
    probs = np.array([float(w) for w in dist.weights])
    lengths = np.array([len(w) for w in code.codewords], dtype=np.int64)

    symbols = _sample_symbols(probs, rng, trials)
    windows = _sample_windows(t, rng, trials)
    successes = int(np.count_nonzero(lengths[symbols] <= windows))

    estimate = successes / trials
    stderr = math.sqrt(estimate * (1.0 - estimate) / trials)
    return SimReport(trials, successes, estimate, stderr, seed)


def simulate_repeated_windows(
    p, code: PrefixCode, theta, trials: int, seed: int, mode: str = "independent"
) -> WindowsReport:
    """Count windows until a message gets through, averaged over trials.

    mode="independent" draws a fresh message every window; the mean
    approaches 1 / sum(p theta**l).  mode="constant" fixes the message per
    trial and restarts transmission each window; the mean approaches
    sum(p theta**(-l)).  Trials still running after WINDOW_CAP windows are
    censored at the cap and counted in the report.
    """
    dist = _dist(p).probabilities()
    if code.n != dist.n:
        raise ValueError(
            f"code has {code.n} codewords but the alphabet has {dist.n} symbols"
        )
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if mode not in ("independent", "constant"):
        raise ValueError(f"unknown mode {mode!r}; use 'independent' or 'constant'")
    t = _check_theta(theta)

    rng = np.random.default_rng(seed)
    probs = np.array([float(w) for w in dist.weights])
    lengths = np.array([len(w) for w in code.codewords], dtype=np.int64)

    counts = np.zeros(trials, dtype=np.int64)
    active = np.arange(trials)
    fixed_lengths = lengths[_sample_symbols(probs, rng, trials)] if mode == "constant" else None

    rounds = 0
    censored = 0
    while active.size:
        rounds += 1
        if rounds > WINDOW_CAP:
            censored = int(active.size)
            counts[active] = WINDOW_CAP
            break
        windows = _sample_windows(t, rng, active.size)
        if mode == "independent":
            need = lengths[_sample_symbols(probs, rng, active.size)]
        else:
            need = fixed_lengths[active]
        counts[active] += 1
        active = active[need > windows]

    mean = float(counts.mean())
    stderr = float(counts.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return WindowsReport(trials, mean, stderr, seed, mode, censored)
