# src/loaders/link_table.py
"""The bundled table of prime knots and links.

Entries are kept in table order (Rolfsen knots, then Thistlethwaite links).
Most entries carry a PD code, a braid word, Conway notation or pretzel
columns; the few shipped with none are completed from the SnapPy census
on first use.
"""
from __future__ import annotations
import json
import os
from functools import lru_cache
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

import structlog
from pydantic import ValidationError

from src.diagrams.moves import diagram_from_braid, pretzel_diagram, rational_diagram
from src.diagrams.pd import diagram_from_pd, unknot
from src.errors import StructureFileError, UnknownLink
from src.models import LinkDiagram, LinkTableEntry
from src.validators.json_validator import JSONValidator, load_json

logger = structlog.get_logger()

DEFAULT_TABLE = Path(__file__).resolve().parents[2] / "data" / "link_table.json"
UNKNOT_NAMES = ("unknot", "0_1")


def table_path() -> str:
    return os.environ.get("SHADOW_INVAR_TABLE") or str(DEFAULT_TABLE)


def load_link_table(path: Optional[str] = None) -> List[LinkTableEntry]:
    path = path or table_path()
    data = JSONValidator("link_table").require(load_json(path), path)
    try:
        entries = [LinkTableEntry(**entry) for entry in data["links"]]
    except ValidationError as e:
        raise StructureFileError(path, str(e))
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        raise StructureFileError(path, "duplicate link names")
    logger.debug("link table loaded", path=path, entries=len(entries),
                 bundled=sum(e.bundled for e in entries))
    return entries


@lru_cache(maxsize=None)
def census_pd(name: str) -> Tuple[Tuple[int, int, int, int], ...]:
    """PD code of a named knot or link from the SnapPy census."""
    try:
        import snappy
    except ImportError:
        raise UnknownLink(name)
    try:
        link = snappy.Link(name)
    except (ValueError, KeyError, IndexError):
        raise UnknownLink(name)
    logger.info("census lookup", name=name)
    return tuple(tuple(int(v) for v in x) for x in link.PD_code(min_strand_index=1))


def entry_pd(entry: LinkTableEntry) -> Sequence[Sequence[int]]:
    if entry.pd is not None:
        return entry.pd
    if entry.braid is not None:
        return diagram_from_braid(entry.braid, entry.strands, entry.name).pd
    if entry.conway is not None:
        return rational_diagram(entry.conway, entry.name).pd
    if entry.pretzel is not None:
        return pretzel_diagram(entry.pretzel, entry.name).pd
    return census_pd(entry.name)


def resolve_link(name: str, table: Optional[List[LinkTableEntry]] = None) -> LinkDiagram:
    if name in UNKNOT_NAMES:
        return unknot(name)
    table = table if table is not None else load_link_table()
    for entry in table:
        if entry.name == name:
            return diagram_from_pd(entry_pd(entry), name)
    raise UnknownLink(name)


def select_links(
    table: List[LinkTableEntry],
    max_crossings: int,
    include_links: bool = False,
    max_link_crossings: Optional[int] = None,
    extra: Iterable[str] = (),
) -> List[LinkTableEntry]:
    """Knots up to `max_crossings`, links if asked, plus named extras, in table order."""
    link_bound = max_crossings if max_link_crossings is None else max_link_crossings
    extra = set(extra)
    unknown = extra - {e.name for e in table}
    if unknown:
        raise UnknownLink(sorted(unknown)[0])
    chosen = []
    for entry in table:
        if entry.name in extra:
            chosen.append(entry)
        elif entry.is_knot and entry.crossings <= max_crossings:
            chosen.append(entry)
        elif not entry.is_knot and include_links and entry.crossings <= link_bound:
            chosen.append(entry)
    return chosen


def build_table(out_path: str, path: Optional[str] = None) -> int:
    """Write a copy of the table with every PD code filled in; returns the entry count."""
    entries = load_link_table(path)
    links = []
    for entry in entries:
        pd = [list(x) for x in entry_pd(entry)]
        d = diagram_from_pd(pd, entry.name)
        if len(d.components) != entry.components:
            raise StructureFileError(out_path, f"{entry.name}: PD has {len(d.components)} components, expected {entry.components}")
        links.append({"name": entry.name, "crossings": entry.crossings,
                      "components": entry.components, "pd": pd})
    with open(out_path, "w") as f:
        json.dump({"description": "prime knots and links with PD codes", "links": links}, f, indent=1)
        f.write("\n")
    logger.info("link table written", path=out_path, entries=len(links))
    return len(links)
