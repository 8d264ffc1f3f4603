#!/usr/bin/env python3
"""
shadow-invar - shadow module enhanced birack counting invariants of knots and links
"""

import argparse
import asyncio
import json
import sys
from typing import Optional, Sequence

import structlog
from pydantic import ValidationError

from src.algebra.shadow_algebra import verify_module
from src.diagrams.pd import diagram_summary, mirror
from src.errors import (
    AxiomViolation,
    MalformedPD,
    NonOrientable,
    NonPlanar,
    NotAUnit,
    PreconditionFailed,
    StructureFileError,
    UnknownLink,
)
from src.invariants.modules import shadow_module_invariant
from src.loaders.link_table import build_table, load_link_table, resolve_link, select_links
from src.loaders.structure_files import (
    load_birack,
    load_link_file,
    load_module,
    load_shadow,
    load_expected,
    module_to_json,
)
from src.logging_config import configure_logging
from src.models import LinkDiagram, RunConfig
from src.orchestrator import group_rows, run_search, run_table

logger = structlog.get_logger()

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SEMANTIC_ERRORS = (AxiomViolation, NotAUnit)
USAGE_ERRORS = (StructureFileError, UnknownLink, PreconditionFailed, MalformedPD, NonOrientable, NonPlanar)


class UsageError(Exception):
    pass


def _need(config: RunConfig, *fields: str) -> None:
    missing = [f for f in fields if getattr(config, f) is None]
    if missing:
        raise UsageError(f"{config.subcommand} needs --{missing[0].replace('_', '-')}")


def _emit(config: RunConfig, text: str, payload) -> None:
    if config.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _diagram(config: RunConfig) -> LinkDiagram:
    if config.pd is not None:
        d = load_link_file(config.pd)
    elif config.link is not None:
        d = resolve_link(config.link)
    else:
        raise UsageError(f"{config.subcommand} needs --link or --pd")
    return mirror(d) if config.mirror else d


# ---------------------------------------------------------------- commands

def cmd_check(config: RunConfig) -> int:
    _need(config, "check_kind", "birack")
    b = load_birack(config.birack)
    if config.check_kind in ("shadow", "module"):
        _need(config, "shadow")
        sh = load_shadow(config.shadow, b)
    if config.check_kind == "module":
        _need(config, "module")
        ok, failing = verify_module(load_module(config.module), b, sh)
        if not ok:
            _emit(config, f"FAIL relation family {failing.family} at {failing.params}: {failing} != 0",
                  {"pass": False, "family": failing.family, "params": list(failing.params),
                   "relation": str(failing)})
            return EXIT_FAIL
    _emit(config, "PASS", {"pass": True})
    return EXIT_OK


def cmd_rank(config: RunConfig) -> int:
    _need(config, "birack")
    b = load_birack(config.birack)
    _emit(config,
          f"alpha: {' '.join(map(str, b.alpha.images))}\n"
          f"pi: {' '.join(map(str, b.pi.images))}\n"
          f"N: {b.rank}",
          {"alpha": list(b.alpha.images), "pi": list(b.pi.images), "N": b.rank})
    return EXIT_OK


def cmd_search_modules(config: RunConfig) -> int:
    _need(config, "birack", "shadow", "ring")
    b = load_birack(config.birack)
    sh = load_shadow(config.shadow, b)

    def show(ms) -> None:
        print(json.dumps(module_to_json(ms), sort_keys=True), flush=True)

    found = asyncio.run(run_search(b, sh, config.ring, config.limit, config.workers, on_found=show))
    _emit(config, f"count: {len(found)}", {"count": len(found)})
    return EXIT_OK


def cmd_invariant(config: RunConfig) -> int:
    _need(config, "birack", "shadow", "module")
    b = load_birack(config.birack)
    sh = load_shadow(config.shadow, b)
    ms = load_module(config.module)
    value = shadow_module_invariant(_diagram(config), b, sh, ms)
    _emit(config, value.to_text(), value.to_json())
    return EXIT_OK


def _match_line(row) -> str:
    if row.matched:
        return f"{row.name}: matched {'mirror' if row.mirror else 'bundled'} chirality"
    return f"{row.name}: MISMATCH, got {row.value.to_text()} and {row.other_value.to_text()}"


def cmd_table(config: RunConfig) -> int:
    _need(config, "birack", "shadow", "module")
    b = load_birack(config.birack)
    sh = load_shadow(config.shadow, b)
    ms = load_module(config.module)
    expected = load_expected(config.expect) if config.expect is not None else None
    entries = select_links(load_link_table(), config.max_crossings, config.include_links,
                           config.max_link_crossings, config.extra)
    rows = asyncio.run(run_table(entries, b, sh, ms, config.mirror, config.workers, expected))
    groups = group_rows(rows)
    lines = [f"{value.to_text()} | {', '.join(names)}" for value, names in groups]
    lines += [_match_line(r) for r in rows if r.matched is not None]
    _emit(config, "\n".join(lines), {
        "groups": [{"value": value.to_json(), "links": names} for value, names in groups],
        "rows": [{"name": r.name, "value": r.value.to_json(), "mirror": r.mirror, "matched": r.matched}
                 for r in rows],
    })
    return EXIT_FAIL if any(r.matched is False for r in rows) else EXIT_OK


def cmd_diagram(config: RunConfig) -> int:
    summary = diagram_summary(_diagram(config))
    text = "\n".join(f"{k}: {v}" for k, v in summary.items())
    _emit(config, text, summary)
    return EXIT_OK


def cmd_build_table(config: RunConfig) -> int:
    _need(config, "output")
    count = build_table(config.output)
    _emit(config, f"wrote {count} entries to {config.output}", {"entries": count, "path": config.output})
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "rank": cmd_rank,
    "search-modules": cmd_search_modules,
    "invariant": cmd_invariant,
    "table": cmd_table,
    "diagram": cmd_diagram,
    "build-table": cmd_build_table,
}


# ---------------------------------------------------------------- parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--birack", metavar="PATH")
    common.add_argument("--shadow", metavar="PATH")
    common.add_argument("--module", metavar="PATH")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")

    link = argparse.ArgumentParser(add_help=False)
    link.add_argument("--link", metavar="NAME", help="name in the bundled table, or 'unknot'")
    link.add_argument("--pd", metavar="PATH", help="link JSON file with a PD code")
    link.add_argument("--mirror", action="store_true")

    parser = argparse.ArgumentParser(
        prog="shadow-invar",
        description="Shadow module enhanced birack counting invariants.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    check = sub.add_parser("check", parents=[common], help="verify structure axioms")
    check.add_argument("check_kind", choices=("birack", "shadow", "module"))
    sub.add_parser("rank", parents=[common], help="kink maps and birack rank")

    search = sub.add_parser("search-modules", parents=[common], help="all module structures over Z_k")
    search.add_argument("--ring", type=int, metavar="K")
    search.add_argument("--limit", type=int, metavar="N")
    search.add_argument("--workers", type=int, help="default $SHADOW_INVAR_WORKERS or 1")

    sub.add_parser("invariant", parents=[common, link], help="invariant of one link")

    table = sub.add_parser("table", parents=[common], help="invariants of the bundled table")
    table.add_argument("--max-crossings", type=int, default=8)
    table.add_argument("--max-link-crossings", type=int)
    table.add_argument("--include-links", action="store_true")
    table.add_argument("--extra", action="append", default=[], metavar="NAME",
                       help="also compute NAME (repeatable), e.g. 9_24")
    table.add_argument("--mirror", action="store_true", help="use mirror images of every entry")
    table.add_argument("--expect", metavar="PATH",
                       help="expected values by name; each entry is matched in either chirality")
    table.add_argument("--workers", type=int, help="default $SHADOW_INVAR_WORKERS or 1")

    sub.add_parser("diagram", parents=[common, link], help="summary of a diagram")

    build = sub.add_parser("build-table", parents=[common], help="write a table with every PD code filled in")
    build.add_argument("output", metavar="OUT")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.model_fields and v is not None}
    return RunConfig(**fields)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging("INFO" if args.verbose else None)
    try:
        config = config_from_args(args)
        return COMMANDS[config.subcommand](config)
    except SEMANTIC_ERRORS as e:
        logger.warning("structure rejected", error=str(e))
        print(f"FAIL {e}")
        return EXIT_FAIL
    except (UsageError, ValidationError) + USAGE_ERRORS as e:
        logger.error("command failed", subcommand=args.subcommand, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
