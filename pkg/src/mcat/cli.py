from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import __version__
from .adjchains import build_Adj, build_Bnd
from .chiralcalc import ChiralMC, PMorphism, PQCube, validate_chiral, validate_pmorphism, validate_pqcube
from .config import KernelConfig
from .core2cat import FiniteTwoCategory, TwoFunctorSequence, validate_sequence, validate_two_category
from .database import RunArchive
from .documents import DocumentError, encode, load_path, report_json, save_path
from .genquintets import build_GQ
from .logging_config import get_logger, setup_logging
from .models import (
    ArgumentError,
    BoundaryError,
    BudgetExceededError,
    RejectedInputError,
    StructuralError,
    ValidationReport,
)
from .monitoring import SweepMonitor
from .multicat import TruncatedMultipleCategory, coskeletal_dimension, validate_multiple_category
from .psalg import (
    CatGraph,
    PseudoAlgebra,
    WeakDoubleCategory,
    free_double,
    validate_cat_graph,
    validate_pseudo_algebra,
    validate_weak_double_category,
)
from .quintets import build_Q, default_directions
from .suites import SUITES, SuiteRunner, SuiteSettings, default_suites

logger = get_logger("cli")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2

INPUT_ERRORS = (DocumentError, StructuralError, BoundaryError, ArgumentError, BudgetExceededError)

VALIDATORS: Tuple[Tuple[type, Callable[[Any], ValidationReport]], ...] = (
    (FiniteTwoCategory, validate_two_category),
    (TruncatedMultipleCategory, validate_multiple_category),
    (TwoFunctorSequence, validate_sequence),
    (ChiralMC, validate_chiral),
    (PMorphism, validate_pmorphism),
    (PQCube, validate_pqcube),
    (CatGraph, validate_cat_graph),
    (WeakDoubleCategory, validate_weak_double_category),
    (PseudoAlgebra, validate_pseudo_algebra),
)

BUILD_TARGETS = ("quintets", "gq", "adj", "bnd", "free-double")


class Outcome:
    """A report plus extra top-level fields, and the document a build produced"""

    def __init__(self, report: ValidationReport, extra: Optional[Dict[str, Any]] = None, document: Any = None):
        self.report = report
        self.extra = extra or {}
        self.document = document


def validate_structure(obj: Any) -> ValidationReport:
    for cls, validator in VALIDATORS:
        if isinstance(obj, cls):
            return validator(obj)
    raise ArgumentError(f"nothing validates {type(obj).__name__}")


def _expect(obj: Any, cls: type, what: str) -> Any:
    if not isinstance(obj, cls):
        raise ArgumentError(f"{what} needs a {cls.__name__} document, got {type(obj).__name__}")
    return obj


def _dim(args: argparse.Namespace, cfg: KernelConfig) -> int:
    return cfg.dim_bound if args.dim is None else args.dim


def _depth(args: argparse.Namespace, cfg: KernelConfig) -> int:
    return cfg.nest_depth if args.depth is None else args.depth


def _length(args: argparse.Namespace, cfg: KernelConfig) -> int:
    return cfg.word_length if args.len is None else args.len


def _build(target: str, path: str, args: argparse.Namespace, cfg: KernelConfig) -> Outcome:
    obj = load_path(path)
    if target == "free-double":
        G = _expect(obj, CatGraph, "build free-double")
        T = free_double(G, _length(args, cfg))
        return Outcome(validate_cat_graph(T.graph), document=T.graph)
    dim = _dim(args, cfg)
    dirs = default_directions(dim, cfg.directions)
    if target == "gq":
        seq = _expect(obj, TwoFunctorSequence, "build gq")
        M = build_GQ(seq, dim, directions=dirs, max_cells=cfg.max_cells)
    else:
        C = _expect(obj, FiniteTwoCategory, f"build {target}")
        if target == "quintets":
            M = build_Q(C, dim, directions=dirs, max_cells=cfg.max_cells)
        elif target == "adj":
            M = build_Adj(C, _depth(args, cfg), dim, directions=dirs, max_cells=cfg.max_cells)
        else:
            M = build_Bnd(C, _depth(args, cfg), dim, directions=dirs, max_cells=cfg.max_cells)
    return Outcome(validate_multiple_category(M), document=M)


def _coskdim(path: str, args: argparse.Namespace, cfg: KernelConfig) -> Outcome:
    obj = load_path(path)
    if isinstance(obj, FiniteTwoCategory):
        obj = build_Q(obj, _dim(args, cfg), max_cells=cfg.max_cells)
    M = _expect(obj, TruncatedMultipleCategory, "coskdim")
    report = validate_multiple_category(M)
    if not report.ok:
        return Outcome(report)
    res = coskeletal_dimension(M)
    rec = report.check("coskdim", f"coskeletal dimension within dimension bound {res.dim_bound}")
    rec.observe(True, (M.name, res.dimension))
    return Outcome(report, res.to_dict())


def _check(suite: str, paths: Sequence[str], args: argparse.Namespace, cfg: KernelConfig,
           monitor: SweepMonitor) -> Outcome:
    settings = replace(
        SuiteSettings.from_config(cfg),
        dim_bound=_dim(args, cfg),
        word_length=_length(args, cfg),
        depth=_depth(args, cfg),
    )
    inputs = [load_path(p) for p in paths]
    runner = SuiteRunner(default_suites(), settings, monitor)
    names = list(SUITES) if suite == "all" else [suite]
    return Outcome(runner.run(names, inputs))


def run(args: argparse.Namespace, cfg: KernelConfig, monitor: SweepMonitor) -> Outcome:
    """Dispatch one command; input problems raise, axiom failures come back in the report."""
    if args.verb == "validate":
        return Outcome(validate_structure(load_path(args.file)))
    if args.verb == "build":
        return _build(args.target, args.file, args, cfg)
    if args.verb in ("adj", "bnd"):
        return _build(args.verb, args.file, args, cfg)
    if args.verb == "coskdim":
        return _coskdim(args.file, args, cfg)
    if args.verb == "check":
        return _check(args.suite, args.files, args, cfg, monitor)
    raise ArgumentError(f"unknown command {args.verb!r}")


def _summary_text(report: ValidationReport, extra: Dict[str, Any]) -> str:
    lines = [f"{report.structure} (mcat {report.tool_version})"]
    for name in sorted(report.checks):
        rec = report.checks[name]
        line = f"  {rec.status.upper():5} {name} [{rec.instances}]"
        if rec.status != "pass":
            if rec.witness:
                line += f" witness: {', '.join(rec.witness)}"
            if rec.detail:
                line += f" ({rec.detail})"
        lines.append(line)
    for key in sorted(extra):
        lines.append(f"  {key}: {extra[key]}")
    counts = report.summary()
    lines.append(f"{counts['pass']} passed, {counts['fail']} failed, {counts['error']} errors")
    return "\n".join(lines) + "\n"


def _emit(outcome: Outcome, args: argparse.Namespace) -> None:
    extra = dict(outcome.extra)
    if outcome.document is not None:
        if args.out:
            save_path(outcome.document, args.out)
            logger.info(f"Wrote {type(outcome.document).__name__} to {args.out}")
        else:
            extra["document"] = encode(outcome.document)
    elif args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report_json(outcome.report, extra))
    if args.json or (outcome.document is not None and not args.out):
        sys.stdout.write(report_json(outcome.report, extra))
    else:
        sys.stdout.write(_summary_text(outcome.report, outcome.extra))


def _add_bounds(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dim", type=int, default=None, help="Dimension bound (default MCAT_DIM_BOUND)")
    p.add_argument("--depth", type=int, default=None, help="Chain or sequence depth (default MCAT_NEST_DEPTH)")
    p.add_argument("--len", type=int, default=None, help="Word length bound (default MCAT_WORD_LENGTH)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=str, default=None, help="Write the document or report here")
    common.add_argument("--json", action="store_true", help="Print the JSON report to stdout")
    common.add_argument(
        "--log-level", type=str.upper, default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], help="Log level (default MCAT_LOG_LEVEL)",
    )
    common.add_argument("--db-url", type=str, default=None, help="Archive the run (default MCAT_DB_URL)")

    parser = argparse.ArgumentParser(prog="mcat", description="Verification kernel for multiple categories")
    parser.add_argument("--version", action="version", version=f"mcat {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", parents=[common], help="Check the axioms of a structure document")
    p.add_argument("file")

    p = sub.add_parser("build", parents=[common], help="Construct a structure from a document")
    p.add_argument("target", choices=BUILD_TARGETS)
    p.add_argument("file")
    _add_bounds(p)

    for verb, what in (("adj", "adjunction chains"), ("bnd", "bundles")):
        p = sub.add_parser(verb, parents=[common], help=f"Build the multiple category of {what} of a 2-category")
        p.add_argument("file")
        _add_bounds(p)

    p = sub.add_parser("coskdim", parents=[common], help="Coskeletal dimension within the dimension bound")
    p.add_argument("file")
    _add_bounds(p)

    p = sub.add_parser("check", parents=[common], help="Run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("files", nargs="*")
    _add_bounds(p)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        cfg = KernelConfig.load()
    except ValueError as e:
        sys.stderr.write(f"mcat: configuration error: {e}\n")
        return EXIT_INPUT

    setup_logging(
        log_dir=cfg.log_dir,
        log_level=args.log_level or cfg.log_level,
        log_to_file=cfg.log_to_file,
        log_to_console=True,
    )

    db_url = args.db_url or cfg.db_url
    archive = RunArchive(db_url) if db_url else None
    monitor = SweepMonitor(archive=archive)
    command = " ".join(argv if argv is not None else sys.argv[1:])

    try:
        try:
            outcome = run(args, cfg, monitor)
        except RejectedInputError as e:
            if e.report is None:
                raise
            logger.warning(f"Input rejected: {e}")
            outcome = Outcome(e.report)
        _emit(outcome, args)
        if archive is not None:
            archive.save_report(command, outcome.report)
    except INPUT_ERRORS + (RejectedInputError,) as e:
        sys.stderr.write(f"mcat: {e}\n")
        return EXIT_INPUT
    except OSError as e:
        sys.stderr.write(f"mcat: {e}\n")
        return EXIT_INPUT
    finally:
        if archive is not None:
            archive.close()

    return EXIT_PASS if outcome.report.ok else EXIT_FAIL
