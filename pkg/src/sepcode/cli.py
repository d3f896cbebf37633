"""Command line for constructing, verifying, attacking, and tracing codes.

Subcommands: construct, verify, trace, simulate, compose.  Exit codes:
0 success or property holds, 1 property fails, 2 tracer overflow, 64 usage
error, 65 malformed code file.  Codeword labels are 1-based on the command
line (library internals are 0-based).  Reports serialize to a single JSON
document with sorted keys, so identical arguments and seed give
byte-identical output.  The SEPCODE_THREADS environment variable caps
worker parallelism (the current implementation is sequential, which any
positive cap permits).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Sequence

from . import __version__
from .codes import (
    Code,
    CodeFormatError,
    format_feasible_line,
    parse_feasible_line,
    read_code_file,
    write_code_file,
)
from .construct import build_length3, one_hot_compose, optimal_s, size_defect
from .simulate import averaging_attack, correlate, embed, make_context, threshold
from .trace import TraceReport, lacc_identify, ssc_trace
from .verify import (
    AmbiguityWitness,
    CollisionWitness,
    ForbiddenPatternWitness,
    FramingWitness,
    OverlapWitness,
    Verdict,
    is_fpc,
    is_sc,
    is_ssc,
    is_ssc_naive,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_OVERFLOW = 2
EXIT_USAGE = 64
EXIT_PARSE = 65


class CliError(Exception):
    """Usage-level error; maps to exit code 64."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse's default exit code 2 is taken by overflow
        raise CliError(message)


def _thread_cap() -> int:
    raw = os.environ.get("SEPCODE_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(f"SEPCODE_THREADS must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise CliError("SEPCODE_THREADS must be a positive integer")
    return cap


def _labels(indices) -> list[int]:
    """0-based library indices to sorted 1-based labels."""
    return sorted(int(i) + 1 for i in indices)


def _witness_json(witness) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, FramingWitness):
        return {
            "kind": "framing",
            "coalition": _labels(witness.coalition),
            "framed": witness.framed + 1,
            "captured": _labels(witness.captured),
        }
    if isinstance(witness, CollisionWitness):
        return {
            "kind": "descendant-collision",
            "first": _labels(witness.first),
            "second": _labels(witness.second),
        }
    if isinstance(witness, AmbiguityWitness):
        return {
            "kind": "coalition-ambiguity",
            "coalition": _labels(witness.coalition),
            "alternative": _labels(witness.alternative),
        }
    if isinstance(witness, ForbiddenPatternWitness):
        return {
            "kind": "forbidden-pattern",
            "pair": _labels(witness.pair),
            "pattern": witness.pattern,
            "matched": _labels(witness.matched),
        }
    if isinstance(witness, OverlapWitness):
        return {
            "kind": "shortened-overlap",
            "position": witness.position + 1,
            "symbols": list(witness.symbols),
            "shared": [list(w) for w in witness.shared],
        }
    return asdict(witness)


def _trace_json(report: TraceReport) -> dict:
    return {
        "outcome": "overflow" if report.overflow else "identified",
        "message": report.message,
        "colluders": _labels(report.colluders),
        "candidates": _labels(report.candidates),
        "evidence": [
            {"position": pos + 1, "bit": bit, "codeword": idx + 1}
            for pos, bit, idx in report.evidence
        ],
        "t": report.t,
        "ops": report.ops,
    }


def _run_report(command: str, inputs: dict, result: dict) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "version": __version__,
    }


def _emit(args, report: dict, human_lines: list[str]) -> None:
    target = getattr(args, "json", None)
    if target is None:
        for line in human_lines:
            print(line)
        return
    payload = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if target == "-":
        sys.stdout.write(payload)
    else:
        Path(target).write_text(payload)
        for line in human_lines:
            print(line)


def _load_code(path: str) -> Code:
    try:
        return read_code_file(path)
    except FileNotFoundError:
        raise CliError(f"no such code file: {path}") from None


def _cmd_construct(args) -> int:
    q = args.q
    s = args.s if args.s is not None else optimal_s(q).s
    code = build_length3(q, s)
    write_code_file(args.out, code)
    result = {
        "q": q,
        "s": s,
        "m": q % 8,
        "w": size_defect(q),
        "M": code.M,
        "out": str(args.out),
    }
    report = _run_report(
        "construct", {"q": q, "s": args.s, "out": str(args.out)}, result
    )
    _emit(
        args,
        report,
        [
            f"wrote (3, {code.M}, {q}) code to {args.out}"
            f" (s={s}, m={result['m']}, w={result['w']})"
        ],
    )
    return EXIT_OK


_VERIFIERS = {"fpc": is_fpc, "sc": is_sc, "ssc": is_ssc}


def _cmd_verify(args) -> int:
    if args.oracle and args.property != "ssc":
        raise CliError("--oracle applies only to --property ssc")
    code = _load_code(args.code)
    if args.oracle:
        verdict: Verdict = is_ssc_naive(code, args.t)
    else:
        verdict = _VERIFIERS[args.property](code, args.t)
    result = {
        "property": args.property,
        "t": args.t,
        "oracle": bool(args.oracle),
        "holds": verdict.holds,
        "witness": _witness_json(verdict.witness),
    }
    report = _run_report(
        "verify",
        {"code": str(args.code), "property": args.property, "t": args.t},
        result,
    )
    if verdict.holds:
        lines = [f"{args.property} holds at t={args.t} for {args.code}"]
    else:
        lines = [
            f"{args.property} fails at t={args.t} for {args.code}: "
            f"{json.dumps(_witness_json(verdict.witness), sort_keys=True)}"
        ]
    _emit(args, report, lines)
    return EXIT_OK if verdict.holds else EXIT_FAIL


def _cmd_trace(args) -> int:
    code = _load_code(args.code)
    feasible = parse_feasible_line(args.r)
    tracer = ssc_trace if args.algorithm == "ssc" else lacc_identify
    trace_report = tracer(code, feasible, args.t)
    result = _trace_json(trace_report)
    report = _run_report(
        "trace",
        {
            "code": str(args.code),
            "r": format_feasible_line(feasible),
            "t": args.t,
            "algorithm": args.algorithm,
        },
        result,
    )
    accused = " ".join(map(str, _labels(trace_report.colluders))) or "(none)"
    if trace_report.overflow:
        lines = [f"overflow: {trace_report.message} (accused {accused})"]
    else:
        lines = [f"identified colluders: {accused}"]
    _emit(args, report, lines)
    return EXIT_OVERFLOW if trace_report.overflow else EXIT_OK


def _parse_colluders(raw: str, code: Code) -> list[int]:
    try:
        labels = [int(tok) for tok in raw.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"colluders must be comma-separated integers, got {raw!r}") from None
    if not labels:
        raise CliError("at least one colluder is required")
    indices = []
    for label in labels:
        if not 1 <= label <= code.M:
            raise CliError(f"colluder {label} out of range 1..{code.M}")
        indices.append(label - 1)
    return indices


def _cmd_simulate(args) -> int:
    if args.code is None and args.code_flag is None:
        raise CliError("a code file is required (positional or --code)")
    if args.code is not None and args.code_flag is not None:
        raise CliError("give the code file once, positionally or via --code")
    args.code = args.code if args.code is not None else args.code_flag
    code = _load_code(args.code)
    colluders = _parse_colluders(args.colluders, code)
    dim = args.dim if args.dim is not None else code.n
    ctx = make_context(dim, code.n, args.alpha, args.seed)
    signals = [embed(ctx, code.words[i]) for i in colluders]
    stats = correlate(ctx, averaging_attack(signals))
    feasible = threshold(stats, args.eps)
    r_line = format_feasible_line(feasible)
    result: dict = {
        "T": [float(v) for v in stats.values],
        "R": r_line,
        "colluders": _labels(colluders),
    }
    lines = [
        "T = " + " ".join(repr(float(v)) for v in stats.values),
        f"R = {r_line}",
    ]
    exit_code = EXIT_OK
    if args.then_trace:
        trace_report = ssc_trace(code, feasible, args.t)
        match = not trace_report.overflow and trace_report.colluders == frozenset(
            colluders
        )
        result["trace"] = _trace_json(trace_report)
        result["match"] = match
        recovered = " ".join(map(str, _labels(trace_report.colluders)))
        if trace_report.overflow:
            lines.append(f"overflow: {trace_report.message} (accused {recovered})")
            exit_code = EXIT_OVERFLOW
        else:
            lines.append(f"recovered colluders: {recovered} (match={str(match).lower()})")
    report = _run_report(
        "simulate",
        {
            "code": str(args.code),
            "colluders": _labels(colluders),
            "dim": dim,
            "alpha": args.alpha,
            "seed": args.seed,
            "eps": args.eps,
            "then_trace": bool(args.then_trace),
            "t": args.t,
        },
        result,
    )
    _emit(args, report, lines)
    return exit_code


def _cmd_compose(args) -> int:
    code = _load_code(args.code)
    composed = one_hot_compose(code)
    write_code_file(args.out, composed)
    result = {
        "n": composed.n,
        "M": composed.M,
        "q": composed.q,
        "source_q": code.q,
        "out": str(args.out),
    }
    report = _run_report(
        "compose", {"code": str(args.code), "out": str(args.out)}, result
    )
    _emit(
        args,
        report,
        [f"wrote ({composed.n}, {composed.M}, 2) code to {args.out}"],
    )
    return EXIT_OK


def _add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--json",
        nargs="?",
        const="-",
        default=None,
        metavar="PATH",
        help="write the JSON run report to PATH, or to stdout when no PATH given",
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="sepcode",
        description="Anti-collusion fingerprinting codes: construct, verify, attack, trace.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a length-3 code and write it to a file")
    p.add_argument("--q", type=int, required=True, help="alphabet size")
    p.add_argument("--s", type=int, default=None, help="marker count (default: optimal for q)")
    p.add_argument("--out", required=True, help="output code file")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", help="check a property of a code file")
    p.add_argument("code", help="code file")
    p.add_argument("--property", required=True, choices=("fpc", "sc", "ssc"))
    p.add_argument("--t", type=int, default=2, help="coalition bound (default 2)")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="use the literal exponential check (ssc only)",
    )
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("trace", help="identify colluders from a feasible-set line")
    p.add_argument("code", help="binary code file")
    p.add_argument("--r", required=True, help="feasible set, n tokens from {0,1,*}")
    p.add_argument("--t", type=int, default=2, help="coalition bound (default 2)")
    p.add_argument("--algorithm", choices=("fpc", "ssc"), default="ssc")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser(
        "simulate", help="embed, average, and detect; optionally chain into tracing"
    )
    p.add_argument("code", nargs="?", default=None, help="binary code file")
    p.add_argument("--code", dest="code_flag", default=None, help="binary code file")
    p.add_argument("--colluders", required=True, help="1-based labels, e.g. 2,3")
    p.add_argument("--dim", type=int, default=None, help="host dimension (default: code length)")
    p.add_argument("--alpha", type=float, default=0.1, help="embedding strength")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--eps", type=float, default=1e-6, help="threshold tolerance")
    p.add_argument("--then-trace", action="store_true", help="run the tracer on the detected R")
    p.add_argument("--t", type=int, default=2, help="coalition bound for --then-trace")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("compose", help="one-hot compose a q-ary code into a binary one")
    p.add_argument("code", help="q-ary code file")
    p.add_argument("--out", required=True, help="output code file")
    _add_json_flag(p)
    p.set_defaults(handler=_cmd_compose)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        _thread_cap()
        args = parser.parse_args(argv)
        return args.handler(args)
    except CliError as exc:
        print(f"sepcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CodeFormatError as exc:
        print(f"sepcode: malformed code file: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"sepcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"sepcode: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
