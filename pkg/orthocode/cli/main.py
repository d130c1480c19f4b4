"""The ``orthocode`` command line.

Every subcommand prints a plain-text report and exits with 0 when the
checked property holds, 1 when it fails and 2 on a usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from orthocode.base_exc import OrthocodeException
from orthocode.clifford.suite import form_preservation_suite
from orthocode.clifford.words import format_word
from orthocode.codes.bounds import gv_rate, gv_rate_root
from orthocode.codes.builtins import builtin
from orthocode.codes.code import StabilizerCode
from orthocode.codes.constructions import (
    css_from_classical,
    quadratic_residue_code,
)
from orthocode.codes.correctability import correctable
from orthocode.codes.distance import distance
from orthocode.codes.encoding import synthesize_encoding
from orthocode.codes.io import (
    format_code,
    read_classical,
    read_code,
    write_code,
)
from orthocode.codes.validation import validate
from orthocode.config import Settings
from orthocode.pauli.error_sets import weight_t_error_set
from orthocode.probes.probe import LOGGER_NAME, Probe, get_probe
from orthocode.statevector.codespace import codespace_basis
from orthocode.statevector.codewords import format_terms
from orthocode.statevector.kl import MAX_QUBITS as KL_MAX_QUBITS
from orthocode.statevector.kl import verify_kl_conditions

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

BUILTIN_PREFIX = "builtin:"
LOG_FORMAT = "%(asctime)s - %(levelname)s: %(message)s"

Handler = Callable[[argparse.Namespace, Probe, Settings], int]


def load_source(source: str) -> StabilizerCode:
    """``builtin:NAME`` or the path of a code file."""
    if source.startswith(BUILTIN_PREFIX):
        return builtin(source[len(BUILTIN_PREFIX) :])
    return read_code(source)


def parse_character(text: str, count: int) -> tuple[int, ...]:
    """A ``+``/``-`` string with one sign per generator.

    Raises:
        ValueError: On another length or character.
    """
    if len(text) != count or set(text) - {"+", "-"}:
        raise ValueError(
            f"character must be {count} sign(s) from '+-', got {text!r}"
        )
    return tuple(1 if c == "+" else -1 for c in text)


def _emit(text: str) -> None:
    print(text)


def _validate(args: argparse.Namespace, probe: Probe, _: Settings) -> int:
    code = load_source(args.source)
    report = validate(code, strict=args.strict, probe=probe)
    _emit(str(code))
    _emit(str(report))
    return EXIT_OK if report.valid else EXIT_FAILED


def _distance(
    args: argparse.Namespace, probe: Probe, settings: Settings
) -> int:
    code = load_source(args.source)
    workers = args.workers or settings.workers
    report = distance(code, budget=args.budget, workers=workers, probe=probe)
    if args.json:
        _emit(
            json.dumps(
                report.to_dict(args.exclude_stabilizer), sort_keys=True
            )
        )
    else:
        _emit(report.format(args.exclude_stabilizer))
    return EXIT_OK


def _construct(args: argparse.Namespace, probe: Probe, _: Settings) -> int:
    if args.family == "qr":
        code = quadratic_residue_code(args.p, probe=probe)
    else:
        matrix = read_classical(args.classical)
        code = css_from_classical(matrix, parity=args.parity, probe=probe)
    if args.output is None:
        sys.stdout.write(format_code(code))
    else:
        path = write_code(code, args.output)
        _emit(f"{code} written to {path}")
    return EXIT_OK


def _codewords(args: argparse.Namespace, _: Probe, __: Settings) -> int:
    code = load_source(args.source)
    character = None
    if args.character is not None:
        character = parse_character(args.character, len(code.generators))
    for i, psi in enumerate(codespace_basis(code, character)):
        _emit(f"# c{i}")
        _emit("\n".join(format_terms(psi)))
    return EXIT_OK


def _correctable(
    args: argparse.Namespace, probe: Probe, _: Settings
) -> int:
    code = load_source(args.source)
    errors = weight_t_error_set(code.n, args.t, code.mode)
    verdict = correctable(code, errors, probe=probe)
    _emit(f"membership criterion: {verdict}")
    if not args.statevector:
        return EXIT_OK if verdict.holds else EXIT_FAILED
    if code.n > KL_MAX_QUBITS:
        raise ValueError(
            f"--statevector supports at most {KL_MAX_QUBITS} qubits"
        )
    kl = verify_kl_conditions(code, errors, probe=probe)
    _emit(f"state-vector conditions: {kl}")
    if kl.holds != verdict.holds:
        _emit("verdicts disagree")
        return EXIT_FAILED
    return EXIT_OK if verdict.holds else EXIT_FAILED


def _gv_rate(args: argparse.Namespace, _: Probe, __: Settings) -> int:
    if args.root:
        _emit(repr(gv_rate_root()))
    else:
        _emit(repr(gv_rate(args.delta)))
    return EXIT_OK


def _clifford_check(
    args: argparse.Namespace, _: Probe, __: Settings
) -> int:
    result = form_preservation_suite(args.n, seed=args.seed)
    _emit(str(result))
    return EXIT_OK if result.passed else EXIT_FAILED


def _encode_map(args: argparse.Namespace, probe: Probe, _: Settings) -> int:
    code = load_source(args.source)
    encoder = synthesize_encoding(code, probe=probe)
    _emit(f"# {'real' if encoder.real else 'complex'} action")
    _emit(str(encoder))
    _emit("# word")
    _emit(format_word(encoder.word) or "(identity)")
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(
            f"expected an integer >= 1, got {text}"
        )
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthocode",
        description="Construct, validate and measure stabilizer codes.",
    )
    parser.add_argument(
        "--log-level", help="overrides ORTHOCODE_LOG_LEVEL (e.g. INFO)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    source_help = "code file or builtin:NAME"

    cmd = sub.add_parser("validate", help="check a code's generators")
    cmd.add_argument("source", help=source_help)
    cmd.add_argument(
        "--strict",
        action="store_true",
        help="also require the quadratic form to vanish",
    )
    cmd.set_defaults(handler=_validate)

    cmd = sub.add_parser("distance", help="minimum weights of the dual")
    cmd.add_argument("source", help=source_help)
    cmd.add_argument("--exclude-stabilizer", action="store_true")
    cmd.add_argument("--workers", type=_positive)
    cmd.add_argument("--budget", type=_positive)
    cmd.add_argument("--json", action="store_true")
    cmd.set_defaults(handler=_distance)

    cmd = sub.add_parser("construct", help="build a code file")
    families = cmd.add_subparsers(dest="family", required=True)
    family = families.add_parser("qr", help="quadratic-residue code")
    family.add_argument("--p", type=int, required=True)
    family.add_argument("--output", type=Path)
    family.set_defaults(handler=_construct)
    family = families.add_parser("css", help="CSS code of a classical code")
    family.add_argument("--classical", type=Path, required=True)
    family.add_argument(
        "--parity",
        action="store_true",
        help="the file holds a parity check matrix",
    )
    family.add_argument("--output", type=Path)
    family.set_defaults(handler=_construct)

    cmd = sub.add_parser("codewords", help="dump a codespace basis")
    cmd.add_argument("source", help=source_help)
    cmd.add_argument("--character", help="one sign per generator, e.g. +-++")
    cmd.set_defaults(handler=_codewords)

    cmd = sub.add_parser("correctable", help="weight-t error correction")
    cmd.add_argument("source", help=source_help)
    cmd.add_argument("--t", type=int, required=True)
    cmd.add_argument(
        "--statevector",
        action="store_true",
        help="cross-check on the codespace (n <= 10)",
    )
    cmd.set_defaults(handler=_correctable)

    cmd = sub.add_parser("gv-rate", help="achievable rate formula")
    group = cmd.add_mutually_exclusive_group(required=True)
    group.add_argument("--delta", type=float)
    group.add_argument("--root", action="store_true")
    cmd.set_defaults(handler=_gv_rate)

    cmd = sub.add_parser("clifford-check", help="form preservation suite")
    cmd.add_argument("--n", type=_positive, required=True)
    cmd.add_argument("--seed", type=int, default=0)
    cmd.set_defaults(handler=_clifford_check)

    cmd = sub.add_parser("encode-map", help="synthesize an encoder")
    cmd.add_argument("source", help=source_help)
    cmd.set_defaults(handler=_encode_map)
    return parser


def _handler(level: int) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler.setLevel(level)
    return handler


def run(argv: Sequence[str] | None = None) -> int:
    """Runs one command and returns its exit code.

    Examples:
        >>> run(["gv-rate", "--delta", "0"])
        1.0
        0
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    try:
        settings = Settings.from_env()
        level = settings.log_level
        if args.log_level:
            level = Settings.from_env(
                {"ORTHOCODE_LOG_LEVEL": args.log_level}
            ).log_level
    except OrthocodeException as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logger = logging.getLogger(LOGGER_NAME)
    handler = _handler(level)
    previous = logger.level
    logger.addHandler(handler)
    logger.setLevel(level)
    try:
        return args.handler(args, get_probe(logger), settings)
    except (OrthocodeException, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        logger.removeHandler(handler)
        logger.setLevel(previous)


def main() -> None:
    sys.exit(run())
