"""siegecode: binary prefix codes optimized for a geometric deadline.

Construct optimal and near-optimal codes (free and alphabetic) for the
objective sum_i p(i) * theta**l(i), bound the optimum with Renyi-entropy
inequalities, verify against brute force, and validate by simulation.
"""

__version__ = "0.1.0"

from .alpha_approx import (
    AlphabeticOverflowError,
    add_one_alphabetic,
    canonical_alphabetic_codewords,
    compact_tree,
    minimal_points,
    near_optimal_alphabetic,
    shannon_like_lengths,
)
from .alpha_dp import build_alphabetic_optimal, split_monotonicity_probe
from .exp_huffman import build_exponential_huffman, unary_code
from .model import (
    CodeTree,
    DecayParameter,
    LengthVector,
    PrefixCode,
    SourceDistribution,
    benford,
    decode,
    encode,
    expected_windows,
    kraft_sum,
    normalized_penalty,
    success_probability,
    uniform,
)
from .oracle import exhaustive_alphabetic_optimum, exhaustive_nonalphabetic_optimum
from .renyi_bounds import (
    alpha_order,
    bounds_report,
    corollary_lower_bound,
    penalty_bounds,
    renyi_entropy,
    short_codeword_guarantee,
    success_bounds,
    tightness_family,
)
from .siege_sim import sample_window, simulate_repeated_windows, simulate_siege

__all__ = [
    "__version__",
    "AlphabeticOverflowError",
    "CodeTree",
    "DecayParameter",
    "LengthVector",
    "PrefixCode",
    "SourceDistribution",
    "add_one_alphabetic",
    "alpha_order",
    "benford",
    "bounds_report",
    "build_alphabetic_optimal",
    "build_exponential_huffman",
    "canonical_alphabetic_codewords",
    "compact_tree",
    "corollary_lower_bound",
    "decode",
    "encode",
    "exhaustive_alphabetic_optimum",
    "exhaustive_nonalphabetic_optimum",
    "expected_windows",
    "kraft_sum",
    "minimal_points",
    "near_optimal_alphabetic",
    "normalized_penalty",
    "penalty_bounds",
    "renyi_entropy",
    "sample_window",
    "shannon_like_lengths",
    "short_codeword_guarantee",
    "simulate_repeated_windows",
    "simulate_siege",
    "split_monotonicity_probe",
    "success_bounds",
    "success_probability",
    "tightness_family",
    "unary_code",
    "uniform",
]
