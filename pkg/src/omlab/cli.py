"""Command-line surface.

Exit codes: 0 when the requested property holds (valid / hypothesis holds /
witness found), 1 when mathematics says no (axiom violation, failed
hypothesis, missing witness), 2 for usage and parse problems.
"""

from __future__ import annotations

import argparse
import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from .engine import (
    DualInstance,
    HolmsenInstance,
    check_dual_hypothesis,
    check_hypothesis,
    find_dual_witness,
    find_witness,
)
from .errors import (
    AxiomViolation,
    GenerationExhausted,
    GroundMismatch,
    HypothesisUnmet,
    OmlabError,
    ParseError,
    RankMismatch,
)
from .generator import GeneratorParams, gen_random
from .realization import build_holmsen_instance, hull_membership, lift_witness_to_colorful, om_from_points
from .textio import (
    InstanceBundle,
    emit_instance,
    parse_instance,
    parse_matroid_text,
    parse_om_text,
    parse_points_text,
)
from .vertices import analyze_pairs, render_analysis


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_om(path: str):
    om, _ = parse_om_text(_read(path))
    return om


def _load_matroid(path: str):
    m, _ = parse_matroid_text(_read(path))
    return m


def _load_points(path: str):
    config, _ = parse_points_text(_read(path))
    return config


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="omlab", description=__doc__)
    parser.add_argument(
        "--format", choices=["text"], default="text", help="output format (v1 has only text)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-matroid", help="check the circuit axioms of a matroid file")
    p.add_argument("file")

    p = sub.add_parser("validate-om", help="check the signed circuit axioms of an OM file")
    p.add_argument("file")

    p = sub.add_parser("dual", help="emit the dual of a matroid or OM file")
    p.add_argument("file")

    p = sub.add_parser("from-points", help="emit the oriented matroid of a points file")
    p.add_argument("file")

    for name in ("check-holmsen", "witness"):
        p = sub.add_parser(name)
        p.add_argument("--om", required=True)
        p.add_argument("--matroid", required=True)
        p.add_argument("--mode", choices=["thm4", "thm5"], default="thm4")

    for name in ("check-dual", "dual-witness"):
        p = sub.add_parser(name)
        p.add_argument("--matroid", required=True)
        p.add_argument("--om", required=True)

    p = sub.add_parser("solve-colorful", help="full pipeline on a colored points file")
    p.add_argument("file")

    p = sub.add_parser("analyze-pairs", help="classify pairs of positive cocircuit vertices")
    p.add_argument("--om", required=True)
    p.add_argument("--matroid", required=True)
    p.add_argument("--adjacent-only", action="store_true")

    p = sub.add_parser("gen", help="emit a seeded random colored configuration")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--min-points", type=int, default=2)
    p.add_argument("--max-points", type=int, default=4)
    p.add_argument("--flat-dim", type=int, default=None)

    return parser


def _dispatch(args: argparse.Namespace, out: io.StringIO) -> int:
    cmd = args.command

    if cmd == "validate-matroid":
        m, _ = parse_matroid_text(_read(args.file))
        print(f"valid matroid: {m.ground.n} elements, rank {m.rank_full}, {len(m.circuits)} circuits", file=out)
        return 0

    if cmd == "validate-om":
        om, _ = parse_om_text(_read(args.file))
        print(
            f"valid oriented matroid: {om.ground.n} elements, rank {om.rank()}, "
            f"{len(om.circuits) // 2} circuit pairs",
            file=out,
        )
        return 0

    if cmd == "dual":
        bundle = parse_instance(Path(args.file))
        if bundle.kind() == "om":
            print(emit_instance(InstanceBundle(om=bundle.om.dual)), end="", file=out)
        elif bundle.kind() == "matroid":
            from .matroid import dual_matroid

            print(emit_instance(InstanceBundle(matroid=dual_matroid(bundle.matroid))), end="", file=out)
        else:
            raise ParseError(0, "dual expects a matroid or oriented matroid file")
        return 0

    if cmd == "from-points":
        config = _load_points(args.file)
        print(emit_instance(InstanceBundle(om=om_from_points(config))), end="", file=out)
        return 0

    if cmd in ("check-holmsen", "witness"):
        inst = HolmsenInstance(_load_om(args.om), _load_matroid(args.matroid))
        report = check_hypothesis(inst, mode=args.mode)
        if cmd == "check-holmsen" or not report.hypothesis_holds:
            print(report.render(), file=out)
            return 0 if report.hypothesis_holds else 1
        report = find_witness(inst)
        print(report.render(), file=out)
        return 0 if report.witness is not None else 1

    if cmd in ("check-dual", "dual-witness"):
        inst = DualInstance(_load_matroid(args.matroid), _load_om(args.om))
        report = check_dual_hypothesis(inst)
        if cmd == "check-dual" or not report.hypothesis_holds:
            print(report.render(), file=out)
            return 0 if report.hypothesis_holds else 1
        report = find_dual_witness(inst)
        print(report.render(), file=out)
        return 0 if report.witness is not None else 1

    if cmd == "solve-colorful":
        config = _load_points(args.file)
        om, m = build_holmsen_instance(config)
        report = find_witness(HolmsenInstance(om, m))
        if report.witness is None:
            print(report.render(), file=out)
            return 1
        transversal = lift_witness_to_colorful(report.witness, config)
        cert = hull_membership(config.points, transversal, config.anchor)
        if cert is None or not cert.verify(config.points, config.anchor):
            print("internal error: certificate failed re-verification", file=out)
            return 1
        print(f"witness: {report.witness}", file=out)
        print(f"transversal: {transversal}", file=out)
        print(f"certificate: {cert}", file=out)
        return 0

    if cmd == "analyze-pairs":
        om = _load_om(args.om)
        m = _load_matroid(args.matroid)
        results = analyze_pairs(om, m, adjacent_only=args.adjacent_only)
        text = render_analysis(results)
        if text:
            print(text, file=out)
        return 0

    if cmd == "gen":
        params = GeneratorParams(
            seed=args.seed,
            dim=args.dim,
            points_per_color=(args.min_points, args.max_points),
            flat_dim=args.flat_dim,
        )
        print(emit_instance(gen_random(params)), end="", file=out)
        return 0

    raise AssertionError(f"unhandled command {cmd}")


def run_command(argv: list[str]) -> tuple[int, str]:
    """Run one CLI invocation; returns (exit code, combined output)."""
    out = io.StringIO()
    parser = _build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(out):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return (int(exc.code or 0) and 2, out.getvalue())
    try:
        code = _dispatch(args, out)
    except (ParseError, GroundMismatch, RankMismatch, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=out)
        return 2, out.getvalue()
    except (AxiomViolation, HypothesisUnmet, GenerationExhausted) as exc:
        print(f"{type(exc).__name__}: {exc}", file=out)
        return 1, out.getvalue()
    except OmlabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=out)
        return 1, out.getvalue()
    return code, out.getvalue()


def main(argv: list[str] | None = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
