"""Request and response models for the HTTP service and the CLI.

Response field names are part of the stable output contract: lengths,
codewords, success_probability, penalty, bounds{lower, upper,
simple_lower, corollary_lower}, alpha, entropy, theorem1_applies,
split_table, sim{estimate, stderr, trials, seed}.
"""

from __future__ import annotations

from typing import List, Literal, Optional, Union

from pydantic import BaseModel, Field, model_validator


class WeightedRequest(BaseModel):
    """Base for requests that carry a weight source and theta.

    Exactly one weight source: `weights` (whitespace-separated decimal or
    ratio tokens) or `builtin` ("benford" or "uniform:N").
    """

    weights: Optional[str] = None
    builtin: Optional[str] = None
    theta: Union[str, float]

    @model_validator(mode="after")
    def _one_source(self):
        if (self.weights is None) == (self.builtin is None):
            raise ValueError("provide exactly one of 'weights' or 'builtin'")
        return self


class HuffmanRequest(WeightedRequest):
    tiebreak: Literal["top-merge", "default"] = "top-merge"


class AlphabeticRequest(WeightedRequest):
    pass


class ApproxRequest(WeightedRequest):
    base: Literal["huffman", "shannon"] = "huffman"


class BoundsRequest(WeightedRequest):
    pass


class OracleRequest(WeightedRequest):
    alphabetic: bool = False
    max_len: Optional[int] = None


class SimulateRequest(WeightedRequest):
    trials: int = Field(default=100_000, ge=1)
    seed: int = 0
    mode: Literal["success", "independent", "constant"] = "success"
    alphabetic: bool = False


class DemoRequest(BaseModel):
    name: str = "benford"
    theta: Union[str, float]


class EncodeRequest(BaseModel):
    code: List[str]
    message: List[int]


class DecodeRequest(BaseModel):
    code: List[str]
    bits: str


class Bounds(BaseModel):
    lower: float
    upper: float
    simple_lower: float
    corollary_lower: Optional[float] = None


class SimStats(BaseModel):
    estimate: float
    stderr: float
    trials: int
    seed: int


class SplitEntry(BaseModel):
    j: int
    k: int
    split: int


class CodeResponse(BaseModel):
    lengths: List[int]
    codewords: List[str]
    success_probability: Optional[float] = None
    penalty: float
    theta: float
    regime: str


class AlphabeticResponse(CodeResponse):
    split_table: List[SplitEntry]


class ApproxResponse(CodeResponse):
    base: str
    base_lengths: List[int]
    minimal_points: List[int]
    fallback_used: bool
    nonalphabetic_penalty: float


class BoundsResponse(BaseModel):
    theta: float
    alpha: float
    entropy: float
    bounds: Bounds
    theorem1_applies: bool


class OracleResponse(BaseModel):
    optimal_value: float
    length_vectors: List[List[int]]
    alphabetic: bool


class SimulateResponse(BaseModel):
    mode: str
    lengths: List[int]
    sim: SimStats
    analytic: Optional[float] = None
    mean_windows: Optional[float] = None
    expected_windows: Optional[float] = None
    censored: int = 0


class EncodeResponse(BaseModel):
    bits: str


class DecodeResponse(BaseModel):
    symbols: List[int]


class DemoResponse(BaseModel):
    name: str
    theta: float
    lengths: List[int]
    codewords: List[str]
    success_probability: Optional[float] = None
    penalty: float
    alpha: Optional[float] = None
    entropy: Optional[float] = None
    bounds: Optional[Bounds] = None
    theorem1_applies: Optional[bool] = None
