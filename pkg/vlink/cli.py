"""Command-line front end: vlink compute | verify | smooth | transform | corpus"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from vlink.corpus.vlink_corpus_manager import VlinkCorpusManager
from vlink.errors import VlinkError
from vlink.gauss.vlink_gauss_code import parse, serialize
from vlink.invariants.vlink_invariant_manager import VERIFIABLE, VlinkInvariantManager
from vlink.models import CONVENTION_PRESETS, EndpointSignConvention, VlinkSettings
from vlink.moves.vlink_fuzzer import EquivalenceFuzzer
from vlink.poly.vlink_exponent_sum import ExponentSum
from vlink.poly.vlink_laurent import LaurentPolynomial
from vlink.utils import configure_logging, load_settings

logger = logging.getLogger(__name__)

DEFAULT_VERIFY_INVARIANTS = "W,Wbar,Lts,B,Bbar,span"


def _read_code(args: argparse.Namespace) -> str:
    if args.code is not None:
        return args.code
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as e:
            raise VlinkError(f"Cannot read {args.file}: {e.strerror}")
    lines = [line for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
    return "".join(lines)


def _manager(args: argparse.Namespace) -> VlinkInvariantManager:
    return VlinkInvariantManager(EndpointSignConvention.preset(args.convention))


def _compute_command(args: argparse.Namespace) -> int:
    code = _read_code(args)
    report = _manager(args).report(parse(code), code=code)
    if args.format == "json":
        print(report.model_dump_json(indent=2))
        return 0

    lp = LaurentPolynomial.from_json
    es = ExponentSum.from_json
    lines = [
        f"input: {report.input}",
        f"components: {report.components}",
        f"spans: {report.spans}",
        f"writhe: {report.writhe}",
        f"linking writhe: {report.linking_writhe}",
        f"W: {lp(report.W).format('t')}",
        f"Wbar: {lp(report.Wbar).format('t')}",
    ]
    lines += [f"W_{i}: {lp(part).format('t')}" for i, part in enumerate(report.W_i)]
    lines.append(f"W mod span: {lp(report.W_mod_span).format('t')}")
    if report.P is not None:
        lines.append(f"P: {lp(report.P).format('t')}")
        lines.append(f"f: {lp(report.f).format('t')}")
    lines += [
        f"L(t,s): {es(report.L_ts).format()}",
        f"B(t,s): {es(report.B).format()}",
        f"Bbar(t,s): {es(report.Bbar).format()}",
        f"self crossing lower bound: {report.self_crossing_lower_bound}",
        f"real crossing lower bound: {report.real_crossing_lower_bound}",
        f"nonclassical: {str(report.nonclassical).lower()}",
        f"nontrivial flat: {str(report.nontrivial_flat).lower()}",
    ]
    print("\n".join(lines))
    return 0


def _verify_command(args: argparse.Namespace) -> int:
    settings: VlinkSettings = args.settings
    names = [name.strip() for name in args.invariants.split(",") if name.strip()]
    diagram = parse(_read_code(args))
    fuzzer = EquivalenceFuzzer.from_settings(settings)
    manager = _manager(args)
    fuzzer.moves = manager.moves
    seed = args.seed if args.seed is not None else settings.fuzz_seed
    steps = args.steps if args.steps is not None else settings.fuzz_steps
    result = manager.verify(diagram, steps, seed, names, fuzzer=fuzzer, corrupt_step=args.corrupt_step)

    if args.format == "json":
        print(result.model_dump_json(indent=2))
    else:
        for name, ok in result.verdicts.items():
            print(f"{name}: {'pass' if ok else 'FAIL'}")
        if not result.passed:
            print(result.trace.model_dump_json(indent=2, exclude_defaults=True))
    return 0 if result.passed else 1


def _smooth_command(args: argparse.Namespace) -> int:
    diagram = parse(_read_code(args))
    print(serialize(_manager(args).moves.smooth(diagram, args.chord)))
    return 0


def _transform_command(args: argparse.Namespace) -> int:
    diagram = parse(_read_code(args))
    if args.op == "mirror":
        result = diagram.mirror_all()
    else:
        result = diagram.crossing_change(args.op.split(":", 1)[1])
    print(serialize(result))
    return 0


def _corpus_command(args: argparse.Namespace) -> int:
    corpus = VlinkCorpusManager()
    if args.action == "list":
        for fixture in corpus.all():
            print(f"{fixture.name}\t{fixture.code}")
        return 0
    if not args.name:
        raise VlinkError("corpus show needs a fixture name")
    fixture = corpus.show(args.name)
    for note in fixture.notes:
        print(f"# {note}")
    print(fixture.code)
    return 0


def _transform_op(value: str) -> str:
    if value == "mirror" or (value.startswith("crossing-change:") and len(value) > len("crossing-change:")):
        return value
    raise argparse.ArgumentTypeError("expected 'mirror' or 'crossing-change:LABEL'")


def build_parser(settings: VlinkSettings) -> argparse.ArgumentParser:
    """
    Argument parser for every subcommand.

    Args:
        settings: Defaults for convention, steps and seed

    Returns:
        argparse.ArgumentParser: The parser
    """
    parser = argparse.ArgumentParser(prog="vlink", description="Invariants of virtual links from Gauss codes.")
    parser.add_argument("--log-level", type=str.upper, default=settings.log_level,
                        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"), help="Logging level")

    diagram_args = argparse.ArgumentParser(add_help=False)
    source = diagram_args.add_mutually_exclusive_group(required=True)
    source.add_argument("-c", "--code", help="Inline Gauss code")
    source.add_argument("file", nargs="?", help="File holding a Gauss code, or - for stdin")
    diagram_args.add_argument("--convention", choices=sorted(CONVENTION_PRESETS), default=settings.convention,
                              help="Endpoint sign convention")

    subparsers = parser.add_subparsers(dest="command", required=True)

    compute = subparsers.add_parser("compute", parents=[diagram_args], help="Compute every invariant")
    compute.add_argument("--format", choices=("json", "text"), default="json")
    compute.set_defaults(func=_compute_command)

    verify = subparsers.add_parser("verify", parents=[diagram_args], help="Check invariance along random moves")
    verify.add_argument("--steps", type=int, default=None, help=f"Moves to apply (default {settings.fuzz_steps})")
    verify.add_argument("--seed", type=int, default=None, help=f"Fuzzer seed (default {settings.fuzz_seed})")
    verify.add_argument("--invariants", default=DEFAULT_VERIFY_INVARIANTS,
                        help=f"Comma separated subset of {','.join(VERIFIABLE)}")
    verify.add_argument("--format", choices=("json", "text"), default="text")
    verify.add_argument("--corrupt-step", type=int, default=None, help=argparse.SUPPRESS)
    verify.set_defaults(func=_verify_command)

    smooth = subparsers.add_parser("smooth", parents=[diagram_args], help="Smooth one crossing")
    smooth.add_argument("--chord", required=True, help="Chord label as written in the input")
    smooth.set_defaults(func=_smooth_command)

    transform = subparsers.add_parser("transform", parents=[diagram_args], help="Mirror or change a crossing")
    transform.add_argument("--op", required=True, type=_transform_op, help="mirror | crossing-change:LABEL")
    transform.set_defaults(func=_transform_command)

    corpus = subparsers.add_parser("corpus", help="List or show the fixture corpus")
    corpus.add_argument("action", nargs="?", choices=("list", "show"), default="list")
    corpus.add_argument("name", nargs="?", help="Fixture name for show")
    corpus.set_defaults(func=_corpus_command)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = load_settings()
    except ValidationError as e:
        print(f"error: invalid VLINK_* setting: {e}", file=sys.stderr)
        return 1

    args = build_parser(settings).parse_args(argv)
    configure_logging(args.log_level)
    args.settings = settings
    logger.info("Running %s", args.command)
    try:
        status = int(args.func(args))
    except VlinkError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    logger.info("Finished %s with status %d", args.command, status)
    return status


if __name__ == "__main__":
    sys.exit(main())
