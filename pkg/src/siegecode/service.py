"""HTTP surface over the core package.

Every endpoint is a thin handler around the library; the CLI calls the
same handlers in process, so both surfaces always report identical
values.  Bad input surfaces as 400 (or 422 for schema violations).
"""

from __future__ import annotations

import re
from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .alpha_approx import near_optimal_alphabetic
from .alpha_dp import build_alphabetic_optimal
from .exp_huffman import build_exponential_huffman
from .model import (
    DecayParameter,
    PrefixCode,
    SourceDistribution,
    arithmetic_mode,
    benford,
    coerce_scalar,
    decode,
    encode,
    expected_windows,
    normalized_penalty,
    success_probability,
    uniform,
)
from .oracle import exhaustive_alphabetic_optimum, exhaustive_nonalphabetic_optimum
from .renyi_bounds import bounds_report
from .schemas import (
    AlphabeticRequest,
    AlphabeticResponse,
    ApproxRequest,
    ApproxResponse,
    Bounds,
    BoundsRequest,
    BoundsResponse,
    CodeResponse,
    DecodeRequest,
    DecodeResponse,
    DemoRequest,
    DemoResponse,
    EncodeRequest,
    EncodeResponse,
    HuffmanRequest,
    OracleRequest,
    OracleResponse,
    SimStats,
    SimulateRequest,
    SimulateResponse,
    SplitEntry,
)
from .siege_sim import simulate_repeated_windows, simulate_siege

app = FastAPI(
    title="siegecode",
    version=__version__,
    description="Prefix codes optimized for delivery within a geometric window",
)


@app.exception_handler(ValueError)
async def _value_error(_request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def resolve_distribution(weights, builtin, mode=None) -> SourceDistribution:
    """Turn a request's weight source into a SourceDistribution."""
    mode = mode or arithmetic_mode()
    if builtin is not None:
        name = builtin.strip().lower()
        if name == "benford":
            return benford()
        m = re.fullmatch(r"uniform:(\d+)", name)
        if m:
            return uniform(int(m.group(1)), mode)
        raise ValueError(f"unknown builtin distribution {builtin!r}")
    return SourceDistribution.from_text(weights, mode)


def resolve_theta(theta, mode=None):
    mode = mode or arithmetic_mode()
    value = coerce_scalar(theta, mode)
    if not value > 0:
        raise ValueError("theta must be positive")
    return value


def _objective_fields(dist, lengths, theta):
    probs = dist.probabilities()
    penalty = float(normalized_penalty(probs, lengths, theta))
    success = (
        float(success_probability(probs, lengths, theta)) if theta <= 1 else None
    )
    return success, penalty


@app.post("/huffman", response_model=CodeResponse)
def huffman_handler(req: HuffmanRequest) -> CodeResponse:
    dist = resolve_distribution(req.weights, req.builtin)
    theta = resolve_theta(req.theta)
    result = build_exponential_huffman(dist, theta, tiebreak=req.tiebreak)
    success, penalty = _objective_fields(dist, result.lengths, theta)
    return CodeResponse(
        lengths=list(result.lengths),
        codewords=list(result.code.codewords),
        success_probability=success,
        penalty=penalty,
        theta=float(theta),
        regime=DecayParameter(theta).regime,
    )


@app.post("/alphabetic", response_model=AlphabeticResponse)
def alphabetic_handler(req: AlphabeticRequest) -> AlphabeticResponse:
    dist = resolve_distribution(req.weights, req.builtin)
    theta = resolve_theta(req.theta)
    result = build_alphabetic_optimal(dist, theta)
    success, penalty = _objective_fields(dist, result.lengths, theta)
    return AlphabeticResponse(
        lengths=list(result.lengths),
        codewords=list(result.code.codewords),
        success_probability=success,
        penalty=penalty,
        theta=float(theta),
        regime=DecayParameter(theta).regime,
        split_table=[SplitEntry(j=j, k=k, split=s) for j, k, s in result.table.entries()],
    )


@app.post("/approx", response_model=ApproxResponse)
def approx_handler(req: ApproxRequest) -> ApproxResponse:
    dist = resolve_distribution(req.weights, req.builtin)
    theta = resolve_theta(req.theta)
    result = near_optimal_alphabetic(dist, theta, base=req.base)
    success, penalty = _objective_fields(dist, result.lengths, theta)
    return ApproxResponse(
        lengths=list(result.lengths),
        codewords=list(result.code.codewords),
        success_probability=success,
        penalty=penalty,
        theta=float(theta),
        regime=DecayParameter(theta).regime,
        base=result.base,
        base_lengths=list(result.base_lengths),
        minimal_points=sorted(result.minimal_points),
        fallback_used=result.fallback_used,
        nonalphabetic_penalty=result.base_penalty,
    )


@app.post("/bounds", response_model=BoundsResponse)
def bounds_handler(req: BoundsRequest) -> BoundsResponse:
    dist = resolve_distribution(req.weights, req.builtin).probabilities()
    theta = resolve_theta(req.theta)
    report = bounds_report(dist, theta)
    return BoundsResponse(
        theta=float(theta),
        alpha=report.alpha,
        entropy=report.entropy,
        bounds=Bounds(
            lower=report.lower,
            upper=report.upper,
            simple_lower=report.simple_lower,
            corollary_lower=report.corollary_lower,
        ),
        theorem1_applies=report.theorem1_applies,
    )


@app.post("/oracle", response_model=OracleResponse)
def oracle_handler(req: OracleRequest) -> OracleResponse:
    dist = resolve_distribution(req.weights, req.builtin)
    theta = resolve_theta(req.theta)
    if req.alphabetic:
        opt = exhaustive_alphabetic_optimum(dist, theta)
    else:
        opt = exhaustive_nonalphabetic_optimum(dist, theta, max_len=req.max_len)
    return OracleResponse(
        optimal_value=float(opt.value),
        length_vectors=[list(v) for v in opt.vectors],
        alphabetic=req.alphabetic,
    )


@app.post("/simulate", response_model=SimulateResponse)
def simulate_handler(req: SimulateRequest) -> SimulateResponse:
    dist = resolve_distribution(req.weights, req.builtin)
    theta = resolve_theta(req.theta)
    if req.alphabetic:
        code = build_alphabetic_optimal(dist, theta).code
    else:
        code = build_exponential_huffman(dist, theta).code
    lengths = code.lengths()
    probs = dist.probabilities()

    if req.mode == "success":
        report = simulate_siege(probs, code, theta, req.trials, req.seed)
        return SimulateResponse(
            mode=req.mode,
            lengths=list(lengths),
            sim=SimStats(
                estimate=report.estimate,
                stderr=report.standard_error,
                trials=report.trials,
                seed=report.seed,
            ),
            analytic=float(success_probability(probs, lengths, theta)),
        )

    report = simulate_repeated_windows(probs, code, theta, req.trials, req.seed, req.mode)
    return SimulateResponse(
        mode=req.mode,
        lengths=list(lengths),
        sim=SimStats(
            estimate=report.mean_windows,
            stderr=report.standard_error,
            trials=report.trials,
            seed=report.seed,
        ),
        mean_windows=report.mean_windows,
        expected_windows=float(expected_windows(probs, lengths, theta, req.mode)),
        censored=report.censored,
    )


@app.post("/encode", response_model=EncodeResponse)
def encode_handler(req: EncodeRequest) -> EncodeResponse:
    code = PrefixCode.from_codewords(req.code)
    return EncodeResponse(bits=encode(req.message, code))


@app.post("/decode", response_model=DecodeResponse)
def decode_handler(req: DecodeRequest) -> DecodeResponse:
    code = PrefixCode.from_codewords(req.code)
    return DecodeResponse(symbols=list(decode(req.bits, code)))


@app.post("/demo", response_model=DemoResponse)
def demo_handler(req: DemoRequest) -> DemoResponse:
    """One-stop reproduction of the worked first-digit examples."""
    dist = resolve_distribution(None, req.name)
    theta = resolve_theta(req.theta)
    probs = dist.probabilities()
    result = build_exponential_huffman(probs, theta)

    bounds = None
    alpha = entropy = None
    applies = None
    if Fraction(1, 2) < theta < 1:
        report = bounds_report(probs, theta)
        alpha, entropy, applies = report.alpha, report.entropy, report.theorem1_applies
        bounds = Bounds(
            lower=report.lower,
            upper=report.upper,
            simple_lower=report.simple_lower,
            corollary_lower=report.corollary_lower,
        )

    return DemoResponse(
        name=req.name,
        theta=float(theta),
        lengths=list(result.lengths),
        codewords=list(result.code.codewords),
        success_probability=(
            float(success_probability(probs, result.lengths, theta)) if theta <= 1 else None
        ),
        penalty=float(normalized_penalty(probs, result.lengths, theta)),
        alpha=alpha,
        entropy=entropy,
        bounds=bounds,
        theorem1_applies=applies,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}
