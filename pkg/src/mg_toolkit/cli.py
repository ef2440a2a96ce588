"""Command line interface for the marked Gauss toolkit."""

from __future__ import annotations

import json
import logging
from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from enum import StrEnum, auto
from pathlib import Path
from sys import stderr, stdout
from typing import TYPE_CHECKING, Final

import yaml
from braid_reps import (
    BraidWord,
    catalogue_names,
    equivalent_by_standard_conjugator,
    get_representation,
    is_virtually_symmetric,
    parse_braid,
    tilde_name,
    verify_representation,
)
from braid_reps import braid_image as automorphism_of_braid
from core_words import Word
from diagrams import (
    MarkedGaussDiagram,
    apply_move,
    connected_sum,
    find_moves,
    format_gauss_code,
    format_move_spec,
    node_invariants,
    parse_move_spec,
    reverse,
)
from laurent_linear import LinearRep, braid_matrix, kernel_check, theta_conjugate
from presentations import (
    Abelianization,
    Presentation,
    abelianization,
    format_presentation,
    group_of_braid,
    hom_count,
    named_group,
    presentation_of_diagram,
    simplify,
)
from realization import (
    check_peripheral,
    meridian_longitude,
    realize_presentation,
    realize_with_peripheral,
)

from mg_toolkit.inputs import (
    InputError,
    format_braid_file,
    load_braid,
    load_diagram,
    load_input,
    load_presentation,
)
from mg_toolkit.settings import load_settings

if TYPE_CHECKING:
    from argparse import _SubParsersAction
    from collections.abc import Callable, Iterator, Mapping, Sequence

    from laurent_linear import LaurentMatrix

    from mg_toolkit.settings import Settings

type Handler = Callable[[Namespace, Settings], Outcome]

ANY_INPUT: Final = "Gauss code, presentation or braid file"
GAUSS_INPUT: Final = "Gauss code"
BRAID_REP: Final = "Representation for braid input"
REP_NAME: Final = "Name such as phiS or w1[2]"


class Format(StrEnum):
    """Output format options."""

    JSON = auto()
    TABLE = auto()
    YAML = auto()
    PORCELAIN = auto()


class Verbosity(StrEnum):
    """Verbosity level options."""

    DEBUG = auto()
    INFO = auto()
    VERBOSE = auto()
    QUIET = auto()


LEVELS: Final = {
    Verbosity.DEBUG: logging.DEBUG,
    Verbosity.VERBOSE: logging.INFO,
    Verbosity.INFO: logging.WARNING,
    Verbosity.QUIET: logging.ERROR,
}


@dataclass(frozen=True)
class Outcome:
    """Result of a verb: structured data, its human rendering and the exit status."""

    data: dict[str, object]
    text: str
    ok: bool = True


def _scalar(value: object) -> str:
    match value:
        case bool():
            return str(value).lower()
        case None:
            return "none"
        case list():
            return ", ".join(map(_scalar, value))
        case _:
            return str(value)


def porcelain_lines(data: Mapping[str, object], prefix: str = "") -> Iterator[str]:
    """Flatten data to key=value lines; lists repeat keys, dicts nest with dots."""
    for key, value in data.items():
        name = f"{prefix}{key}"
        match value:
            case dict():
                yield from porcelain_lines(value, f"{name}.")
            case list():
                for item in value:
                    yield f"{name}={_scalar(item)}"
            case _:
                yield f"{name}={_scalar(value)}"


def output_data(
    outcome: Outcome,
    format_type: Format = Format.TABLE,
    verbosity: Verbosity = Verbosity.INFO,
) -> None:
    """Output data in the specified format."""
    if verbosity == Verbosity.QUIET and format_type in {Format.TABLE, Format.YAML}:
        return

    if format_type == Format.JSON:
        json.dump(
            outcome.data,
            stdout,
            indent=2 if verbosity == Verbosity.VERBOSE else None,
        )
        print()
    elif format_type == Format.YAML:
        text = yaml.safe_dump(outcome.data, default_flow_style=False, sort_keys=False)
        print(text, end="")
    elif format_type == Format.PORCELAIN:
        print("\n".join(porcelain_lines(outcome.data)))
    elif outcome.text:
        print(outcome.text)


def log_info(message: str, verbosity: Verbosity = Verbosity.INFO) -> None:
    """Print a progress message to stderr if not quiet."""
    if verbosity == Verbosity.QUIET:
        return
    if verbosity == Verbosity.VERBOSE:
        print(f"[VERBOSE] {message}", file=stderr)
        return
    print(message, file=stderr)


def add_common_arguments(subparser: ArgumentParser) -> None:
    """Add standardized common arguments to a subparser."""
    format_group = subparser.add_mutually_exclusive_group()
    format_group.add_argument(
        "--format",
        choices=Format.__members__.values(),
        default="table",
        help="Output format (default: %(default)s)",
    )
    for name in Format:
        format_group.add_argument(
            f"--{name}",
            dest="format",
            action="store_const",
            const=str(name),
            help=f"Output in {name} format",
        )

    verbosity_group = subparser.add_mutually_exclusive_group()
    verbosity_group.add_argument(
        "--verbosity",
        choices=Verbosity.__members__.values(),
        default="info",
        help="Set verbosity level (default: %(default)s)",
    )
    verbosity_group.add_argument(
        "--debug",
        dest="verbosity",
        action="store_const",
        const="debug",
        help="Enable debug output",
    )
    verbosity_group.add_argument(
        "--info",
        dest="verbosity",
        action="store_const",
        const="info",
        help="Enable info output",
    )
    verbosity_group.add_argument(
        "--verbose",
        dest="verbosity",
        action="store_const",
        const="verbose",
        help="Enable verbose output",
    )
    verbosity_group.add_argument(
        "--quiet",
        "-q",
        dest="verbosity",
        action="store_const",
        const="quiet",
        help="Suppress non-essential output",
    )
    subparser.add_argument(
        "--settings",
        type=Path,
        default=None,
        help="Settings file (default: the packaged settings.toml)",
    )


def add_input_argument(subparser: ArgumentParser, help_text: str) -> None:
    """Add the --in argument; stdin is read when it is omitted or `-`."""
    subparser.add_argument(
        "--in", dest="source", type=Path, default=None, help=help_text
    )


def add_braid_arguments(subparser: ArgumentParser) -> None:
    """Add a braid given as a file or as --braid WORD --n N."""
    add_input_argument(subparser, "Braid file with an n=<strands> header")
    subparser.add_argument(
        "--braid", default=None, help="Braid word such as 's1 r2 s1^-1'"
    )
    subparser.add_argument("--n", type=int, default=None, help="Number of strands")


def add_leaf(
    subparsers: _SubParsersAction[ArgumentParser],
    name: str,
    handler: Handler,
    help_text: str,
) -> ArgumentParser:
    """Add a verb with the common arguments and its handler."""
    parser = subparsers.add_parser(name, help=help_text, description=help_text)
    add_common_arguments(parser)
    parser.set_defaults(handler=handler)
    return parser


def create_parser() -> ArgumentParser:
    """Create the command line argument parser."""
    parser = ArgumentParser(
        prog="mg", description="Marked Gauss diagrams and virtual braids"
    )
    subparsers = parser.add_subparsers(dest="command", help="Commands")

    parse_parser = add_leaf(subparsers, "parse", handle_parse, "Re-serialize an input")
    add_input_argument(parse_parser, ANY_INPUT)

    group_parser = add_leaf(
        subparsers, "group", handle_group, "Group presentation of an input"
    )
    add_input_argument(group_parser, ANY_INPUT)
    group_parser.add_argument("--rep", default=None, help=BRAID_REP)
    group_parser.add_argument(
        "--simplify", action="store_true", help="Simplify by Tietze moves"
    )
    group_parser.add_argument(
        "--abelianization", action="store_true", help="Print the abelianization"
    )

    abelian_parser = add_leaf(
        subparsers,
        "abelianization",
        handle_abelianization,
        "Abelianization of the group",
    )
    add_input_argument(abelian_parser, ANY_INPUT)
    abelian_parser.add_argument("--rep", default=None, help=BRAID_REP)

    homcount_parser = add_leaf(
        subparsers,
        "homcount",
        handle_homcount,
        "Count homomorphisms into a finite group",
    )
    add_input_argument(homcount_parser, ANY_INPUT)
    homcount_parser.add_argument(
        "--target", required=True, help="s3 to s6 or table:<file> (required)"
    )
    homcount_parser.add_argument("--rep", default=None, help=BRAID_REP)
    homcount_parser.add_argument(
        "--jobs", type=int, default=None, help="Worker processes"
    )
    homcount_parser.add_argument(
        "--no-simplify",
        dest="simplify",
        action="store_false",
        help="Count on the unsimplified presentation",
    )

    invariants_parser = add_leaf(
        subparsers,
        "invariants",
        handle_invariants,
        "Node count, sign sum and sign product",
    )
    add_input_argument(invariants_parser, GAUSS_INPUT)

    move_parser = add_leaf(subparsers, "move", handle_move, "Apply or list moves")
    add_input_argument(move_parser, GAUSS_INPUT)
    move_group = move_parser.add_mutually_exclusive_group(required=True)
    move_group.add_argument(
        "--apply", default=None, help="Move such as 'r1-remove arrows=1'"
    )
    move_group.add_argument("--list", action="store_true", help="List moves")

    rep_parser = subparsers.add_parser("rep", help="Automorphism representations")
    rep_commands = rep_parser.add_subparsers(dest="rep_command", help="Commands")
    verify_parser = add_leaf(
        rep_commands, "verify", handle_rep_verify, "Check every VB_n relation"
    )
    verify_parser.add_argument("--rep", required=True, help=REP_NAME)
    verify_parser.add_argument("--n", type=int, required=True, help="Strands")
    image_parser = add_leaf(
        rep_commands, "image", handle_rep_image, "Image of a braid"
    )
    image_parser.add_argument("--rep", required=True, help=REP_NAME)
    add_braid_arguments(image_parser)
    equiv_parser = add_leaf(
        rep_commands,
        "equiv",
        handle_rep_equiv,
        "Compare with the tilde form by conjugation",
    )
    equiv_parser.add_argument("--rep", required=True, help="Base family name")
    equiv_parser.add_argument("--n", type=int, required=True, help="Strands")
    add_leaf(rep_commands, "list", handle_rep_list, "List the catalogue")

    burau_parser = subparsers.add_parser("burau", help="Laurent matrix representations")
    burau_commands = burau_parser.add_subparsers(dest="burau_command", help="Commands")
    eval_parser = add_leaf(
        burau_commands, "eval", handle_burau_eval, "Matrix of a braid"
    )
    eval_parser.add_argument(
        "--rep",
        choices=[str(rep) for rep in LinearRep],
        required=True,
        help="Matrix family",
    )
    add_braid_arguments(eval_parser)
    eval_parser.add_argument(
        "--theta",
        action="store_true",
        help="Conjugate by theta = diag(1, t1, t1 t2, ...)",
    )

    add_leaf(
        subparsers, "bigelow", handle_bigelow, "Burau images of the Bigelow elements"
    )

    realize_parser = add_leaf(
        subparsers,
        "realize",
        handle_realize,
        "Marked Gauss diagram of a C_1-presentation",
    )
    add_input_argument(realize_parser, "Presentation")
    realize_parser.add_argument(
        "--l", dest="longitude", default=None, help="Longitude word to realize"
    )
    realize_parser.add_argument(
        "--x0", default=None, help="Conjugator c of the meridian x1^c (default: 1)"
    )

    peripheral_parser = add_leaf(
        subparsers,
        "peripheral",
        handle_peripheral,
        "Meridian and longitude of a diagram",
    )
    add_input_argument(peripheral_parser, GAUSS_INPUT)
    peripheral_parser.add_argument(
        "--circle", type=int, default=1, help="Circle, 1-based"
    )
    peripheral_parser.add_argument("--arc", type=int, default=0, help="Arc, 0-based")
    peripheral_parser.add_argument(
        "--check", action="store_true", help="Check the pair commutes"
    )

    sum_parser = add_leaf(subparsers, "connectsum", handle_connectsum, "Connected sum")
    for side in ("left", "right"):
        sum_parser.add_argument(
            f"--{side}", type=Path, required=True, help=f"{side.title()} Gauss code"
        )
        sum_parser.add_argument(
            f"--{side}-circle", type=int, default=1, help=f"Circle of --{side}"
        )
        sum_parser.add_argument(
            f"--{side}-gap", type=int, default=0, help=f"Gap of the --{side} circle"
        )

    reverse_parser = add_leaf(
        subparsers, "reverse", handle_reverse, "Reverse every circle"
    )
    add_input_argument(reverse_parser, GAUSS_INPUT)

    return parser


def _gauss_outcome(d: MarkedGaussDiagram) -> Outcome:
    text = format_gauss_code(d)
    return Outcome({"gauss": text.splitlines()}, text)


def _presentation_outcome(p: Presentation) -> Outcome:
    return Outcome(
        {
            "generators": [str(gen) for gen in p.generators()],
            "relators": [str(relator) for relator in p.relators],
        },
        format_presentation(p),
    )


def _abelian_outcome(a: Abelianization) -> Outcome:
    return Outcome({"free_rank": a.free_rank, "torsion": a.torsion}, str(a))


def _matrix_outcome(m: LaurentMatrix) -> Outcome:
    return Outcome(
        {
            "variables": list(m.variables),
            "rows": [[str(entry) for entry in row] for row in m.rows],
            "identity": m.is_identity(),
        },
        str(m),
    )


def _group(args: Namespace) -> Presentation:
    """Return the group of a diagram, braid (under --rep) or presentation."""
    loaded = load_input(args.source)
    match loaded:
        case MarkedGaussDiagram():
            return presentation_of_diagram(loaded)
        case BraidWord():
            if args.rep is None:
                msg = "Braid input needs --rep"
                raise InputError(msg)
            spec = get_representation(args.rep, n=loaded.strand_count)
            return group_of_braid(spec, loaded)
        case Presentation():
            return loaded


def _braid(args: Namespace) -> BraidWord:
    if args.braid is None:
        return load_braid(args.source)
    if args.n is None:
        msg = "--braid needs --n"
        raise InputError(msg)
    return parse_braid(args.braid, args.n)


def handle_parse(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'parse' subcommand."""
    loaded = load_input(args.source)
    match loaded:
        case MarkedGaussDiagram():
            return _gauss_outcome(loaded)
        case Presentation():
            return _presentation_outcome(loaded)
        case BraidWord():
            text = format_braid_file(loaded)
            return Outcome({"strands": loaded.strand_count, "braid": str(loaded)}, text)


def handle_group(args: Namespace, settings: Settings) -> Outcome:
    """Handle the 'group' subcommand."""
    p = _group(args)
    if args.simplify:
        p = simplify(p, max_length=settings["simplify"]["max_length"])
    if args.abelianization:
        return _abelian_outcome(abelianization(p))
    return _presentation_outcome(p)


def handle_abelianization(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'abelianization' subcommand."""
    return _abelian_outcome(abelianization(_group(args)))


def handle_homcount(args: Namespace, settings: Settings) -> Outcome:
    """Handle the 'homcount' subcommand."""
    group = named_group(args.target)
    p = _group(args)
    if settings["search"]["simplify"] and args.simplify:
        p = simplify(p, max_length=settings["simplify"]["max_length"])
    jobs = args.jobs or settings["search"]["jobs"]
    log_info(f"Counting homomorphisms into {group.name}", args.verbosity)
    count = hom_count(p, group, limit=settings["search"]["limit"], jobs=jobs)
    return Outcome({"target": group.name, "count": count}, str(count))


def handle_invariants(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'invariants' subcommand."""
    nodes, sign_sum, sign_product = node_invariants(load_diagram(args.source))
    data: dict[str, object] = {
        "nodes": nodes,
        "sign_sum": sign_sum,
        "sign_product": sign_product,
    }
    return Outcome(data, " ".join(f"{key}={value}" for key, value in data.items()))


def handle_move(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'move' subcommand."""
    d = load_diagram(args.source)
    if args.list:
        moves = [format_move_spec(move) for move in find_moves(d)]
        return Outcome({"moves": moves}, "\n".join(moves))
    return _gauss_outcome(apply_move(d, parse_move_spec(args.apply)))


def handle_rep_verify(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'rep verify' subcommand."""
    spec = get_representation(args.rep, n=args.n)
    log_info(f"Checking {spec.label} on {spec.strands} strands", args.verbosity)
    report = verify_representation(spec)
    symmetric = is_virtually_symmetric(spec)
    failures = [
        f"{failure.relation.name}: {failure.generator} -> "
        f"{failure.lhs} != {failure.rhs}"
        for failure in report.failures
    ]
    status = "ok" if report.ok else "failed"
    lines = [
        f"{status} relations={report.checked} failures={len(failures)}",
        f"virtually_symmetric={str(symmetric).lower()}",
        *failures,
    ]
    data: dict[str, object] = {
        "representation": report.representation,
        "strands": report.strands,
        "relations": report.checked,
        "ok": report.ok,
        "virtually_symmetric": symmetric,
        "failures": failures,
    }
    return Outcome(data, "\n".join(lines), report.ok)


def handle_rep_image(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'rep image' subcommand."""
    word = _braid(args)
    spec = get_representation(args.rep, n=word.strand_count)
    image = automorphism_of_braid(spec, word)
    data: dict[str, object] = {
        "images": {str(gen): str(w) for gen, w in image.as_mapping().items()}
    }
    return Outcome(data, str(image))


def handle_rep_equiv(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'rep equiv' subcommand."""
    tilde = tilde_name(args.rep)
    equivalent = equivalent_by_standard_conjugator(args.rep, args.n)
    data: dict[str, object] = {
        "representation": args.rep,
        "tilde": tilde,
        "strands": args.n,
        "equivalent": equivalent,
    }
    text = f"equivalent={str(equivalent).lower()} tilde={tilde}"
    return Outcome(data, text, equivalent)


def handle_rep_list(_args: Namespace, _: Settings) -> Outcome:
    """Handle the 'rep list' subcommand."""
    names = catalogue_names()
    return Outcome({"names": names}, "\n".join(names))


def handle_burau_eval(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'burau eval' subcommand."""
    word = _braid(args)
    m = braid_matrix(LinearRep(args.rep), word)
    if args.theta:
        m = theta_conjugate(m, word.strand_count)
    return _matrix_outcome(m)


def handle_bigelow(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'bigelow' subcommand."""
    log_info("Evaluating Burau images of b1 (n=5) and b2 (n=6)", args.verbosity)
    report = kernel_check()
    data: dict[str, object] = {
        "b1_length": report.b1_length,
        "b1_identity": report.b1_identity,
        "b2_length": report.b2_length,
        "b2_identity": report.b2_identity,
    }
    text = "\n".join(
        f"{name} length={length} identity={str(identity).lower()}"
        for name, length, identity in (
            ("b1", report.b1_length, report.b1_identity),
            ("b2", report.b2_length, report.b2_identity),
        )
    )
    return Outcome(data, text, report.ok)


def handle_realize(args: Namespace, settings: Settings) -> Outcome:
    """Handle the 'realize' subcommand."""
    p = load_presentation(args.source)
    if args.longitude is None:
        if args.x0 is not None:
            msg = "--x0 needs --l"
            raise InputError(msg)
        result = realize_presentation(p)
        pair = meridian_longitude(result.diagram)
    else:
        ctx = p.context
        result, pair = realize_with_peripheral(
            p,
            Word.parse(args.x0 or "1", ctx),
            Word.parse(args.longitude, ctx),
            settings["peripheral"]["quotients"],
            limit=settings["search"]["limit"],
        )
    gauss = format_gauss_code(result.diagram)
    data: dict[str, object] = {
        "gauss": gauss.splitlines(),
        "meridian": str(pair.meridian),
        "longitude": str(pair.longitude),
        "alpha": pair.alpha,
        "origin": {str(gen): str(word) for gen, word in result.origin.items()},
    }
    lines = [
        gauss,
        f"# meridian={pair.meridian}",
        f"# longitude={pair.longitude}",
        f"# alpha={pair.alpha}",
    ]
    return Outcome(data, "\n".join(lines))


def handle_peripheral(args: Namespace, settings: Settings) -> Outcome:
    """Handle the 'peripheral' subcommand."""
    d = load_diagram(args.source)
    pair = meridian_longitude(d, args.arc, args.circle - 1)
    data: dict[str, object] = {
        "meridian": str(pair.meridian),
        "longitude": str(pair.longitude),
        "alpha": pair.alpha,
    }
    lines = [str(pair)]
    if not args.check:
        return Outcome(data, "\n".join(lines))
    report = check_peripheral(
        presentation_of_diagram(d),
        pair,
        settings["peripheral"]["quotients"],
        limit=settings["search"]["limit"],
    )
    data |= {"derivation": report.derivation, "commutes": report.commutes}
    lines.append(f"derivation={_scalar(report.derivation)}")
    lines.extend(
        f"commutes.{name}={_scalar(ok)}" for name, ok in report.commutes.items()
    )
    return Outcome(data, "\n".join(lines), report.passed)


def handle_connectsum(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'connectsum' subcommand."""
    return _gauss_outcome(
        connected_sum(
            load_diagram(args.left),
            args.left_circle - 1,
            args.left_gap,
            load_diagram(args.right),
            args.right_circle - 1,
            args.right_gap,
        )
    )


def handle_reverse(args: Namespace, _: Settings) -> Outcome:
    """Handle the 'reverse' subcommand."""
    return _gauss_outcome(reverse(load_diagram(args.source)))


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, run one verb and return its exit code."""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else 2
    handler: Handler | None = getattr(args, "handler", None)
    if handler is None:
        parser.print_help(stderr)
        return 2
    verbosity = Verbosity(args.verbosity)
    logging.getLogger().setLevel(LEVELS[verbosity])
    try:
        outcome = handler(args, load_settings(args.settings))
    except (ValueError, OSError) as error:
        print(f"error: {error}", file=stderr)
        return 1
    output_data(outcome, Format(args.format), verbosity)
    return 0 if outcome.ok else 1


def main() -> None:
    """Entry point for the CLI."""
    raise SystemExit(run())
