"""Command-line interface for f-edge-color."""

import argparse
import os
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence, Tuple

from . import __version__
from .config import OUTPUT_FORMATS, Config
from .core.classifier import (
    ClassifyOptions,
    VerdictClass,
    classify,
    classify_any,
)
from .core.coloring import (
    FColoring,
    SearchStatus,
    search_coloring,
    upper_color_f,
    verify_coloring,
)
from .core.errors import CoverageMismatchError, FColoringError
from .core.generators import family_names, gen_family
from .core.graph import FInstance, is_connected
from .core.oracle import exact_chi_f, is_f_critical
from .core.reporting.dot import export_dot
from .core.reporting.explain import explain, explain_aggregate
from .formats.coloring_json import (
    dumps_stable,
    read_coloring_json,
    serialize_coloring_json,
    write_coloring_json,
)
from .formats.fgr import read_fgr, serialize_fgr, write_fgr
from .utils.logging import get_logger, setup_logging
from .utils.validation import (
    ValidationError,
    validate_choice,
    validate_non_negative_int,
    validate_positive_int,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CLASS2 = 2
EXIT_UNKNOWN = 3
EXIT_USAGE = 64
EXIT_NOINPUT = 66

CLASS_EXIT_CODES = {
    VerdictClass.CLASS1: EXIT_OK,
    VerdictClass.CLASS2: EXIT_CLASS2,
    VerdictClass.UNKNOWN: EXIT_UNKNOWN,
}


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with 64."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _use_style() -> bool:
    """ANSI styling only on a terminal and only when NO_COLOR is unset or empty."""
    if os.environ.get("NO_COLOR"):
        return False
    return sys.stdout.isatty()


def _load_config(args: argparse.Namespace) -> Config:
    if args.config:
        return Config.from_file(args.config)
    return Config()


def _classify_options(config: Config, args: argparse.Namespace) -> ClassifyOptions:
    opts = ClassifyOptions.from_config(config.classifier)
    if getattr(args, "exact_limit", None) is not None:
        opts = replace(
            opts,
            exact_edge_limit=validate_non_negative_int(args.exact_limit, "--exact-limit"),
        )
    if getattr(args, "cut_budget", None) is not None:
        opts = replace(opts, cut_budget=validate_positive_int(args.cut_budget, "--cut-budget"))
    return opts


def _output_format(config: Config, args: argparse.Namespace) -> str:
    fmt = getattr(args, "format", None) or config.output.format
    return validate_choice(fmt, "--format", OUTPUT_FORMATS)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def classify_command(args: argparse.Namespace, config: Config) -> int:
    """Classify one instance and exit with its class."""
    inst = read_fgr(args.file)
    opts = _classify_options(config, args)
    fmt = _output_format(config, args)

    if is_connected(inst.graph):
        verdict = classify(inst, opts)
        verdict_class = verdict.verdict_class
        if fmt == "json":
            _emit(dumps_stable(verdict.to_dict()))
        else:
            _emit(explain(verdict, styled=_use_style()))
    else:
        aggregate = classify_any(inst, opts)
        verdict_class = aggregate.verdict_class
        if fmt == "json":
            _emit(dumps_stable(aggregate.to_dict()))
        else:
            _emit(explain_aggregate(aggregate, styled=_use_style()))
    return CLASS_EXIT_CODES[verdict_class]


def _color_with(
    inst: FInstance, colors: Optional[int], config: Config
) -> Tuple[int, Optional[FColoring]]:
    if inst.m == 0:
        return EXIT_OK, FColoring(colors or 0, {})
    upper = upper_color_f(inst)
    if colors is None:
        return EXIT_OK, upper
    if colors < inst.delta_f:
        print(
            f"Error: no f-coloring with {colors} colors exists (delta_f = {inst.delta_f})",
            file=sys.stderr,
        )
        return EXIT_CLASS2, None
    if upper.k <= colors:
        return EXIT_OK, FColoring(colors, upper.assignment)

    result = search_coloring(inst, colors, budget=config.classifier.exact_budget)
    if result.status is SearchStatus.FOUND:
        return EXIT_OK, result.coloring
    if result.status is SearchStatus.PROVED_NONE:
        print(f"Error: no f-coloring with {colors} colors exists", file=sys.stderr)
        return EXIT_CLASS2, None
    print(
        f"Error: search for a {colors}-coloring ran out of budget "
        f"after {result.nodes_expanded} nodes",
        file=sys.stderr,
    )
    return EXIT_UNKNOWN, None


def color_command(args: argparse.Namespace, config: Config) -> int:
    """Print or write an f-coloring."""
    inst = read_fgr(args.file)
    if args.colors is not None:
        validate_positive_int(args.colors, "--colors")
    code, coloring = _color_with(inst, args.colors, config)
    if coloring is None:
        return code
    if args.output:
        write_coloring_json(args.output, coloring)
        logger.info("wrote %d-coloring to %s", coloring.k, args.output)
    else:
        _emit(serialize_coloring_json(coloring))
    return code


def verify_command(args: argparse.Namespace, config: Config) -> int:
    """Check a coloring document against an instance."""
    inst = read_fgr(args.file)
    coloring = read_coloring_json(args.coloring, n=inst.n)
    try:
        report = verify_coloring(inst, coloring)
    except CoverageMismatchError as e:
        _emit(f"invalid: {e}")
        return EXIT_CLASS2
    if report.valid:
        _emit(f"valid: {len(coloring.assignment)} edges, {coloring.k} colors")
        return EXIT_OK
    _emit(f"invalid: {report.summary()}")
    return EXIT_CLASS2


def oracle_command(args: argparse.Namespace, config: Config) -> int:
    """Exact f-chromatic index of a small instance."""
    inst = read_fgr(args.file)
    fmt = _output_format(config, args)
    max_edges = config.oracle.max_edges
    result = exact_chi_f(inst, max_edges=max_edges)
    verdict_class = VerdictClass.CLASS2 if result.exhausted_at_delta_f else VerdictClass.CLASS1
    critical = is_f_critical(inst, max_edges=max_edges) if args.critical else None

    if fmt == "json":
        payload = {"class": verdict_class.value, "delta_f": inst.delta_f, **result.to_dict()}
        if critical is not None:
            payload["critical"] = critical
        _emit(dumps_stable(payload))
    else:
        lines = [
            f"chi_f: {result.chi_f}",
            f"delta_f: {inst.delta_f}",
            f"class: {verdict_class.value}",
            f"nodes: {result.nodes_expanded}",
        ]
        if critical is not None:
            lines.append(f"critical: {'yes' if critical else 'no'}")
        _emit("\n".join(lines))
    return CLASS_EXIT_CODES[verdict_class]


def gen_command(args: argparse.Namespace, config: Config) -> int:
    """Write a generated family member as .fgr."""
    inst = gen_family(args.family, args.params, args.f)
    described = " ".join([args.family] + list(args.params) + ([args.f] if args.f else []))
    comments = [f"gen {described}"]
    if args.output:
        write_fgr(args.output, inst, comments)
        logger.info("wrote %s to %s", described, args.output)
    else:
        _emit(serialize_fgr(inst, comments))
    return EXIT_OK


def _classify_file(path: str, opts: ClassifyOptions, fmt: str) -> Tuple[str, bool]:
    """One batch output line for ``path`` and whether it was classified."""
    name = Path(path).name
    try:
        inst = read_fgr(path)
        if is_connected(inst.graph):
            verdict = classify(inst, opts)
            payload = verdict.to_dict()
            summary = f"{verdict.verdict_class.value} {verdict.rule.code} {verdict.rule.value}"
        else:
            aggregate = classify_any(inst, opts)
            payload = aggregate.to_dict()
            summary = f"{aggregate.verdict_class.value} components={len(aggregate.components)}"
    except (FColoringError, OSError) as e:
        if fmt == "json":
            return dumps_stable({"file": name, "error": str(e)}).rstrip("\n"), False
        return f"{name}: error: {e}", False
    if fmt == "json":
        return dumps_stable({"file": name, **payload}).rstrip("\n"), True
    return f"{name}: {summary}", True


def batch_command(args: argparse.Namespace, config: Config) -> int:
    """Classify every .fgr file of a directory, one line per file in name order."""
    directory = Path(args.directory)
    if not directory.is_dir():
        raise FileNotFoundError(f"not a directory: {directory}")
    opts = _classify_options(config, args)
    fmt = _output_format(config, args)
    jobs = validate_positive_int(args.jobs, "--jobs")
    paths = [str(p) for p in sorted(directory.glob("*.fgr"))]
    logger.info("classifying %d files with %d job(s)", len(paths), jobs)

    if jobs == 1 or len(paths) < 2:
        results = [_classify_file(p, opts, fmt) for p in paths]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_file, paths, [opts] * len(paths), [fmt] * len(paths)))

    for line, _ in results:
        _emit(line)
    return EXIT_OK if all(ok for _, ok in results) else EXIT_ERROR


def export_dot_command(args: argparse.Namespace, config: Config) -> int:
    """DOT text, edge colors taken from an optional coloring that must verify."""
    inst = read_fgr(args.file)
    coloring = None
    if args.coloring:
        coloring = read_coloring_json(args.coloring, n=inst.n)
        report = verify_coloring(inst, coloring)
        if not report.valid:
            _emit(f"invalid: {report.summary()}")
            return EXIT_CLASS2
    _emit(export_dot(inst, coloring))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """The full argument parser."""
    # flags accepted after any subcommand
    parent_parser = _ArgumentParser(add_help=False)
    parent_parser.add_argument("--verbose", action="store_true", help="Enable debug logging and tracebacks")
    parent_parser.add_argument("--log-file", type=str, help="Path to log file")
    parent_parser.add_argument("--config", type=str, help="Path to YAML or JSON config file")

    format_parser = _ArgumentParser(add_help=False)
    format_parser.add_argument("--format", choices=OUTPUT_FORMATS, help="Output format (default from config: text)")

    parser = _ArgumentParser(
        prog="f-edge-color",
        description="f-edge-color - f-colorings, f-class classification and exact checks for simple graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"f-edge-color {__version__}")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    classify_parser = subparsers.add_parser(
        "classify", help="Decide f-Class 1 / f-Class 2", parents=[parent_parser, format_parser]
    )
    classify_parser.add_argument("file", help="Instance in .fgr format")
    classify_parser.add_argument("--exact-limit", type=int, help="Largest edge count for exhaustive search")
    classify_parser.add_argument("--cut-budget", type=int, help="Node budget of the matching-cut search")
    classify_parser.set_defaults(func=classify_command)

    color_parser = subparsers.add_parser("color", help="Construct an f-coloring", parents=[parent_parser])
    color_parser.add_argument("file", help="Instance in .fgr format")
    color_parser.add_argument("--colors", type=int, help="Palette size (default: constructive bound)")
    color_parser.add_argument("-o", "--output", type=str, help="Write the coloring JSON here instead of stdout")
    color_parser.set_defaults(func=color_command)

    verify_parser = subparsers.add_parser("verify", help="Verify a coloring", parents=[parent_parser])
    verify_parser.add_argument("file", help="Instance in .fgr format")
    verify_parser.add_argument("coloring", help="Coloring JSON document")
    verify_parser.set_defaults(func=verify_command)

    oracle_parser = subparsers.add_parser(
        "oracle", help="Exact f-chromatic index (small instances)", parents=[parent_parser, format_parser]
    )
    oracle_parser.add_argument("file", help="Instance in .fgr format")
    oracle_parser.add_argument("--critical", action="store_true", help="Also decide f-criticality")
    oracle_parser.set_defaults(func=oracle_command)

    gen_parser = subparsers.add_parser(
        "gen",
        help="Generate a family member",
        parents=[parent_parser],
        epilog=f"families: {', '.join(family_names())}",
    )
    gen_parser.add_argument("family", help="Family name")
    gen_parser.add_argument("params", nargs="*", help="Family parameters")
    gen_parser.add_argument("--f", type=str, help="f spec: const:k, hub:k or list:v1,...,vn")
    gen_parser.add_argument("-o", "--output", type=str, help="Write the .fgr here instead of stdout")
    gen_parser.set_defaults(func=gen_command)

    batch_parser = subparsers.add_parser(
        "batch", help="Classify every .fgr file in a directory", parents=[parent_parser, format_parser]
    )
    batch_parser.add_argument("directory", help="Directory of .fgr files")
    batch_parser.add_argument("--exact-limit", type=int, help="Largest edge count for exhaustive search")
    batch_parser.add_argument("--cut-budget", type=int, help="Node budget of the matching-cut search")
    batch_parser.add_argument("--jobs", type=int, default=1, help="Worker processes (default: 1)")
    batch_parser.set_defaults(func=batch_command)

    dot_parser = subparsers.add_parser("export-dot", help="Graphviz DOT export", parents=[parent_parser])
    dot_parser.add_argument("file", help="Instance in .fgr format")
    dot_parser.add_argument("--coloring", type=str, help="Coloring JSON used for edge colors")
    dot_parser.set_defaults(func=export_dot_command)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    # bare invocation: usage error
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    verbose = args.verbose
    try:
        config = _load_config(args)
        setup_logging(
            level=config.logging.level,
            log_file=args.log_file or config.logging.log_file,
            verbose=verbose,
        )
        return args.func(args, config)
    except ValidationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        if verbose:
            traceback.print_exc()
        return EXIT_NOINPUT
    except FColoringError as e:
        print(f"Error: {e}", file=sys.stderr)
        if verbose:
            traceback.print_exc()
        return EXIT_ERROR


def cli() -> None:
    """f-edge-color console entry point."""
    sys.exit(main())


if __name__ == "__main__":
    cli()
