"""Command-line interface.

Grammar::

    pasf <subcommand> [files...] [--tol X] [--json] [--out PATH]
                      [--seed N] [--count N] [--scalars a,b,c,d]

Exit codes are a contract scripts can branch on without parsing text:
0 = the property holds / the construction succeeded, 2 = the property
fails or a contract is violated, 1 = input error (unreadable or
malformed files, incompatible spaces, bad arguments). The environment
variable ``PASF_TOL`` overrides the default tolerance (1e-9) whenever
``--tol`` is absent. With ``--json`` every invocation emits exactly one
JSON object; matrices there are raw doubles, while human output rounds
to 6 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import duality, fileio, frames, generators, orthogonality, similarity
from .errors import (
    ContractViolated,
    DimensionMismatch,
    FrameFormatError,
    GateSingular,
    GenerationFailed,
    InsufficientCoordinates,
    MixedExponents,
    NonSquare,
    NotAFrame,
    NotDual,
    NotInvertible,
    NotInvertibleWitness,
    NotOrthogonal,
    NotParseval,
    NotSimilar,
    PasfError,
    RequiresSquare,
    Singular,
    SpaceMismatch,
)
from .spaces import DEFAULT_TOL, NormBound

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAIL = 2

_INPUT_ERRORS = (FrameFormatError, SpaceMismatch, DimensionMismatch, MixedExponents, OSError)
_PROPERTY_ERRORS = (
    NotAFrame,
    NotInvertible,
    NotDual,
    GateSingular,
    NotParseval,
    NotSimilar,
    NotOrthogonal,
    ContractViolated,
    NotInvertibleWitness,
    RequiresSquare,
    Singular,
    GenerationFailed,
    InsufficientCoordinates,
    NonSquare,
)


@dataclass
class Report:
    """Structured result of one invocation.

    Every number carries its label and the tolerance it was judged
    against; matrices are emitted only when a subcommand produces
    operator output worth inspecting.
    """

    command: str
    inputs: list[str]
    verdict: str
    numbers: list[dict] = field(default_factory=list)
    matrices: dict = field(default_factory=dict)

    def add(self, label: str, value, tol: float) -> None:
        self.numbers.append({"label": label, "value": value, "tol": tol})

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "numbers": self.numbers,
            "matrices": self.matrices,
        }

    def render_human(self) -> str:
        lines = [f"command: {self.command}"]
        if self.inputs:
            lines.append(f"inputs: {', '.join(self.inputs)}")
        lines.append(f"verdict: {self.verdict}")
        for item in self.numbers:
            lines.append(f"  {item['label']} = {_fmt(item['value'])}  (tol {_fmt(item['tol'])})")
        for name, matrix in self.matrices.items():
            lines.append(f"  {name}:")
            for row in matrix:
                lines.append("    [" + ", ".join(_fmt(x) for x in row) + "]")
        return "\n".join(lines)


def _fmt(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.6g}"
    return str(x)


def _matrix(arr: np.ndarray) -> list[list[float]]:
    return np.asarray(arr, dtype=float).tolist()


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the exit-code contract reserves
    # 2 for property failures, so remap usage errors to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pasf", description="Frame pairs on finite-dimensional l^p spaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--tol", type=float, default=None, help="tolerance (default 1e-9 or $PASF_TOL)")
        sp.add_argument("--json", action="store_true", help="emit one JSON object")

    sp = sub.add_parser("validate", help="decide the p-ASF property and report bounds")
    sp.add_argument("file")
    sp.add_argument("--matrices", action="store_true", help="include S and S^-1 in the report")
    common(sp)

    sp = sub.add_parser("canonical-dual", help="compute the canonical dual")
    sp.add_argument("file")
    sp.add_argument("--out", help="write the dual as a frame file")
    common(sp)

    sp = sub.add_parser("check-dual", help="test the dual criterion for two frames")
    sp.add_argument("file1")
    sp.add_argument("file2")
    common(sp)

    sp = sub.add_parser("check-orthogonal", help="test orthogonality of two frames")
    sp.add_argument("file1")
    sp.add_argument("file2")
    common(sp)

    sp = sub.add_parser("similarity", help="decide similarity and print the witnesses")
    sp.add_argument("file1")
    sp.add_argument("file2")
    common(sp)

    sp = sub.add_parser("interpolate", help="stitch two orthogonal Parseval frames")
    sp.add_argument("file1")
    sp.add_argument("file2")
    sp.add_argument("--scalars", required=True, metavar="a,b,c,d", help="scalars with c*a + d*b = 1")
    sp.add_argument("--out", help="write the stitched frame")
    common(sp)

    sp = sub.add_parser("sample-duals", help="sample the dual family of a frame")
    sp.add_argument("file")
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out-dir", help="write each sample as a frame file here")
    common(sp)

    sp = sub.add_parser("factorize", help="emit the analysis/synthesis factorization")
    sp.add_argument("file")
    sp.add_argument("--out", help="write both matrices as a JSON file")
    common(sp)

    return parser


def _resolve_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("PASF_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise FrameFormatError(f"PASF_TOL is not a number: {env!r}")
    return DEFAULT_TOL


def _bound_numbers(report: Report, label: str, bound: NormBound, tol: float) -> None:
    if bound.exact:
        report.add(label, bound.value, tol)
    else:
        report.add(f"{label} (lower)", bound.lower, tol)
        report.add(f"{label} (upper)", bound.upper, tol)


def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_json(), allow_nan=False))
    else:
        print(report.render_human())


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args, tol: float) -> tuple[Report, int]:
    frame = fileio.load_frame(args.file)
    report = Report(command="validate", inputs=[args.file], verdict="")
    try:
        fr = frames.validate(frame, tol)
    except NotAFrame as exc:
        report.verdict = f"NotAFrame: rank {exc.rank} of {frame.dim}"
        report.add("frame operator rank", exc.rank, tol)
        return report, EXIT_FAIL
    report.verdict = "valid p-ASF" + (" (Parseval)" if fr.parseval else "")
    _bound_numbers(report, "lower bound a", fr.lower_bound, tol)
    _bound_numbers(report, "upper bound b", fr.upper_bound, tol)
    report.add("parseval", fr.parseval, tol)
    report.add("analysis injective", fr.analysis_injective, tol)
    report.add("synthesis surjective", fr.synthesis_surjective, tol)
    report.add("rcond", fr.rcond, tol)
    if args.matrices:
        report.matrices["frame_operator"] = _matrix(fr.frame_op.entries)
        report.matrices["frame_operator_inverse"] = _matrix(fr.frame_op_inv.entries)
    return report, EXIT_OK


def _cmd_canonical_dual(args, tol: float) -> tuple[Report, int]:
    frame = fileio.load_frame(args.file)
    dual = duality.canonical_dual(frame, tol)
    fr = frames.validate(frame, tol)
    lo, hi = duality.canonical_dual_bounds(fr)
    report = Report(command="canonical-dual", inputs=[args.file], verdict="canonical dual computed")
    _bound_numbers(report, "dual lower bound 1/b", lo, tol)
    _bound_numbers(report, "dual upper bound 1/a", hi, tol)
    if args.out:
        fileio.save_frame(dual, args.out)
        report.verdict = f"canonical dual written to {args.out}"
    else:
        report.matrices["dual_functionals"] = _matrix(dual.functionals)
        report.matrices["dual_vectors"] = _matrix(dual.vectors)
    return report, EXIT_OK


def _cmd_check_dual(args, tol: float) -> tuple[Report, int]:
    frame = fileio.load_frame(args.file1)
    cand = fileio.load_frame(args.file2)
    holds = duality.is_dual(frame, cand, tol)
    oracle = generators.reconstruction_oracle(frame, cand, tol)
    report = Report(
        command="check-dual",
        inputs=[args.file1, args.file2],
        verdict="dual pair" if holds else "not a dual pair",
    )
    report.add("criterion", holds, tol)
    report.add("reconstruction oracle", oracle, tol)
    return report, EXIT_OK if holds else EXIT_FAIL


def _cmd_check_orthogonal(args, tol: float) -> tuple[Report, int]:
    frame1 = fileio.load_frame(args.file1)
    frame2 = fileio.load_frame(args.file2)
    holds = orthogonality.is_orthogonal(frame1, frame2, tol)
    report = Report(
        command="check-orthogonal",
        inputs=[args.file1, args.file2],
        verdict="orthogonal" if holds else "not orthogonal",
    )
    report.add("criterion", holds, tol)
    return report, EXIT_OK if holds else EXIT_FAIL


def _cmd_similarity(args, tol: float) -> tuple[Report, int]:
    frame1 = fileio.load_frame(args.file1)
    frame2 = fileio.load_frame(args.file2)
    holds = similarity.are_similar(frame1, frame2, tol)
    witness = similarity.witness_from_frames(frame1, frame2, tol)
    report = Report(
        command="similarity",
        inputs=[args.file1, args.file2],
        verdict="similar" if holds else "not similar",
    )
    report.add("projection criterion", holds, tol)
    report.add("witnesses invertible", witness.invertible, tol)
    report.matrices["t_fg"] = _matrix(witness.t_fg.entries)
    report.matrices["t_tau_omega"] = _matrix(witness.t_tau_omega.entries)
    return report, EXIT_OK if holds else EXIT_FAIL


def _cmd_interpolate(args, tol: float) -> tuple[Report, int]:
    frame1 = fileio.load_frame(args.file1)
    frame2 = fileio.load_frame(args.file2)
    try:
        a, b, c, d = (float(s) for s in args.scalars.split(","))
    except ValueError:
        raise FrameFormatError(f"--scalars must be four comma-separated numbers, got {args.scalars!r}")
    stitched = orthogonality.scalar_interpolate(frame1, frame2, a, b, c, d, tol)
    check = frames.validate(stitched, tol)
    report = Report(
        command="interpolate",
        inputs=[args.file1, args.file2],
        verdict="Parseval frame stitched",
    )
    report.add("c*a + d*b", c * a + d * b, tol)
    report.add("stitched parseval", check.parseval, tol)
    if args.out:
        fileio.save_frame(stitched, args.out)
        report.verdict = f"Parseval frame written to {args.out}"
    else:
        report.matrices["functionals"] = _matrix(stitched.functionals)
        report.matrices["vectors"] = _matrix(stitched.vectors)
    return report, EXIT_OK


def _cmd_sample_duals(args, tol: float) -> tuple[Report, int]:
    frame = fileio.load_frame(args.file)
    report = Report(command="sample-duals", inputs=[args.file], verdict="")
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
    for i in range(args.count):
        cand = generators.random_dual(frame, args.seed + i)
        ok = duality.is_dual(frame, cand.frame, tol)
        rcond = frames.validate(cand.frame, tol).rcond
        report.add(f"sample {i} is_dual", ok, tol)
        report.add(f"sample {i} rcond", rcond, tol)
        if args.out_dir:
            fileio.save_frame(cand.frame, os.path.join(args.out_dir, f"dual_{i:03d}.json"))
    report.verdict = f"{args.count} duals sampled"
    return report, EXIT_OK


def _cmd_factorize(args, tol: float) -> tuple[Report, int]:
    frame = fileio.load_frame(args.file)
    u, v = frames.factorize(frame, tol)
    report = Report(command="factorize", inputs=[args.file], verdict="factorization computed")
    report.matrices["u"] = _matrix(u.entries)
    report.matrices["v"] = _matrix(v.entries)
    if args.out:
        doc = {
            "dim": frame.dim,
            "count": frame.count,
            "u": report.matrices["u"],
            "v": report.matrices["v"],
        }
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, allow_nan=False)
            fh.write("\n")
        report.verdict = f"factorization written to {args.out}"
    return report, EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "canonical-dual": _cmd_canonical_dual,
    "check-dual": _cmd_check_dual,
    "check-orthogonal": _cmd_check_orthogonal,
    "similarity": _cmd_similarity,
    "interpolate": _cmd_interpolate,
    "sample-duals": _cmd_sample_duals,
    "factorize": _cmd_factorize,
}


def _error_exit(command: str, inputs: list[str], exc: Exception, as_json: bool, code: int) -> int:
    payload = {
        "command": command,
        "inputs": inputs,
        "error": {"code": type(exc).__name__, "message": str(exc)},
    }
    if as_json:
        print(json.dumps(payload, allow_nan=False))
    else:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    inputs = [v for k, v in vars(args).items() if k in ("file", "file1", "file2") and v]
    try:
        tol = _resolve_tol(args)
        report, code = _COMMANDS[args.command](args, tol)
    except _INPUT_ERRORS as exc:
        return _error_exit(args.command, inputs, exc, as_json, EXIT_INPUT)
    except _PROPERTY_ERRORS as exc:
        return _error_exit(args.command, inputs, exc, as_json, EXIT_FAIL)
    except PasfError as exc:
        return _error_exit(args.command, inputs, exc, as_json, EXIT_FAIL)
    _emit(report, as_json)
    return code


if __name__ == "__main__":
    sys.exit(main())
