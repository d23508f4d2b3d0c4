"""Command-line client for the code-construction service.

Subcommands mirror the HTTP endpoints one to one and call the same
handler functions in process, so both surfaces report identical values.
Output is a human-readable table by default or the service's JSON with
--json.  Exit codes: 0 success, 1 bad input, 2 internal failure.

Weights come from exactly one of --weights "0.5 1/4 1/4",
--weights-file PATH, or --builtin benford|uniform:N.  Theta and weight
tokens accept decimals and ratios.  Arithmetic can be forced with
SIEGECODE_ARITHMETIC=rational|float (default float).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from pydantic import BaseModel, ValidationError

from . import service
from .schemas import (
    AlphabeticRequest,
    ApproxRequest,
    BoundsRequest,
    DecodeRequest,
    DemoRequest,
    EncodeRequest,
    HuffmanRequest,
    OracleRequest,
    SimulateRequest,
)

_PROB_FIELDS = {
    "success_probability",
    "penalty",
    "alpha",
    "entropy",
    "lower",
    "upper",
    "simple_lower",
    "corollary_lower",
    "estimate",
    "stderr",
    "analytic",
    "mean_windows",
    "expected_windows",
    "optimal_value",
    "nonalphabetic_penalty",
    "theta",
}


def _fmt(key: str, value) -> str:
    if isinstance(value, float) and key in _PROB_FIELDS:
        return f"{value:.3f}"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _print_human(payload: dict, indent: str = "") -> None:
    width = max((len(k) for k in payload), default=0)
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _print_human(value, indent + "  ")
        elif key == "split_table" and isinstance(value, list):
            rows = " ".join(f"({e['j']},{e['k']})->{e['split']}" for e in value)
            print(f"{indent}{key:<{width}}  {rows}")
        elif key == "length_vectors" and isinstance(value, list):
            rows = "  ".join("(" + " ".join(map(str, v)) + ")" for v in value)
            print(f"{indent}{key:<{width}}  {rows}")
        else:
            print(f"{indent}{key:<{width}}  {_fmt(key, value)}")


def _emit(response: BaseModel, as_json: bool) -> None:
    payload = response.model_dump()
    if as_json:
        print(json.dumps(payload))
    else:
        _print_human(payload)


def _weight_args(parser: argparse.ArgumentParser, theta_required: bool = True) -> None:
    parser.add_argument("--weights", help="inline weight tokens, e.g. '0.5 1/4 1/4'")
    parser.add_argument("--weights-file", help="file of whitespace-separated weight tokens")
    parser.add_argument("--builtin", help="builtin distribution: benford or uniform:N")
    parser.add_argument("--theta", required=theta_required, help="decay, decimal or ratio")


def _resolve_weights(args) -> tuple:
    sources = [
        ("weights", args.weights),
        ("weights_file", getattr(args, "weights_file", None)),
        ("builtin", args.builtin),
    ]
    given = [(name, v) for name, v in sources if v is not None]
    if len(given) != 1:
        raise ValueError(
            "provide exactly one weight source: --weights, --weights-file or --builtin"
        )
    name, value = given[0]
    if name == "weights_file":
        try:
            with open(value, encoding="utf-8") as fh:
                return fh.read(), None
        except OSError as exc:
            raise ValueError(f"cannot read weights file: {exc}") from None
    if name == "weights":
        return value, None
    return None, value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siegecode",
        description="Build, bound, approximate and simulate prefix codes "
        "for delivery within a geometric window of opportunity.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("huffman", help="optimal nonalphabetic code")
    _weight_args(p)
    p.add_argument("--tiebreak", choices=["top-merge", "default"], default="top-merge")

    p = sub.add_parser("alphabetic", help="optimal alphabetic code (dynamic program)")
    _weight_args(p)

    p = sub.add_parser("approx", help="near-optimal alphabetic code")
    _weight_args(p)
    p.add_argument("--base", choices=["huffman", "shannon"], default="huffman")

    p = sub.add_parser("bounds", help="entropy bounds on the optimal success probability")
    _weight_args(p)

    p = sub.add_parser("oracle", help="brute-force optimum for small n")
    _weight_args(p)
    p.add_argument("--alphabetic", action="store_true")
    p.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("simulate", help="Monte Carlo check of the window model")
    _weight_args(p)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["success", "independent", "constant"], default="success")
    p.add_argument("--alphabetic", action="store_true", help="simulate the alphabetic optimum")

    p = sub.add_parser("encode", help="encode a symbol sequence with a given code")
    p.add_argument("--code", required=True, help="codewords, e.g. '0 10 11'")
    p.add_argument("--message", required=True, help="1-based symbols, e.g. '1 2 1'")

    p = sub.add_parser("decode", help="decode a bit string with a given code")
    p.add_argument("--code", required=True, help="codewords, e.g. '0 10 11'")
    p.add_argument("--bits", required=True)

    p = sub.add_parser("demo", help="reproduce the worked first-digit example")
    p.add_argument("name", nargs="?", default="benford", help="builtin name (default benford)")
    p.add_argument("--theta", required=True)

    return parser


def _dispatch(args) -> BaseModel:
    if args.command == "huffman":
        weights, builtin = _resolve_weights(args)
        return service.huffman_handler(
            HuffmanRequest(weights=weights, builtin=builtin, theta=args.theta, tiebreak=args.tiebreak)
        )
    if args.command == "alphabetic":
        weights, builtin = _resolve_weights(args)
        return service.alphabetic_handler(
            AlphabeticRequest(weights=weights, builtin=builtin, theta=args.theta)
        )
    if args.command == "approx":
        weights, builtin = _resolve_weights(args)
        return service.approx_handler(
            ApproxRequest(weights=weights, builtin=builtin, theta=args.theta, base=args.base)
        )
    if args.command == "bounds":
        weights, builtin = _resolve_weights(args)
        return service.bounds_handler(
            BoundsRequest(weights=weights, builtin=builtin, theta=args.theta)
        )
    if args.command == "oracle":
        weights, builtin = _resolve_weights(args)
        return service.oracle_handler(
            OracleRequest(
                weights=weights,
                builtin=builtin,
                theta=args.theta,
                alphabetic=args.alphabetic,
                max_len=args.max_len,
            )
        )
    if args.command == "simulate":
        weights, builtin = _resolve_weights(args)
        return service.simulate_handler(
            SimulateRequest(
                weights=weights,
                builtin=builtin,
                theta=args.theta,
                trials=args.trials,
                seed=args.seed,
                mode=args.mode,
                alphabetic=args.alphabetic,
            )
        )
    if args.command == "encode":
        return service.encode_handler(
            EncodeRequest(code=args.code.split(), message=[int(s) for s in args.message.split()])
        )
    if args.command == "decode":
        return service.decode_handler(DecodeRequest(code=args.code.split(), bits=args.bits))
    if args.command == "demo":
        return service.demo_handler(DemoRequest(name=args.name, theta=args.theta))
    raise ValueError(f"unknown command {args.command!r}")


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1

    try:
        response = _dispatch(args)
    except (ValueError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal invariant failures
        print(f"internal error: {exc}", file=sys.stderr)
        return 2

    _emit(response, args.json)
    return 0


if __name__ == "__main__":
    sys.exit(main())
