# src/orchestrator.py
from __future__ import annotations
import asyncio, time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import structlog

from src.algebra.shadow_algebra import iter_modules, root_values, search_branch
from src.diagrams.pd import diagram_from_pd, mirror as mirror_diagram
from src.invariants.modules import shadow_module_invariant
from src.loaders.link_table import entry_pd
from src.models import Birack, InvariantValue, LinkTableEntry, Shadow, ShadowModuleStructure, TableRow

logger = structlog.get_logger()


def _compact(value: InvariantValue) -> str:
    return value.to_text().replace(" ", "")


def _invariant_for(
    name: str,
    pd: Sequence[Sequence[int]],
    b: Birack,
    sh: Shadow,
    ms: ShadowModuleStructure,
    mirror: bool,
    expected: Optional[str] = None,
) -> Tuple[TableRow, float]:
    """Invariant of one entry; a mismatch with `expected` retries the other chirality."""
    t0 = time.perf_counter()
    d = diagram_from_pd(pd, name)
    first = shadow_module_invariant(mirror_diagram(d) if mirror else d, b, sh, ms)
    row = TableRow(name=name, value=first, mirror=mirror)
    if expected is not None:
        if _compact(first) == expected:
            row = row.model_copy(update={"matched": True})
        else:
            other = shadow_module_invariant(d if mirror else mirror_diagram(d), b, sh, ms)
            if _compact(other) == expected:
                row = TableRow(name=name, value=other, mirror=not mirror, matched=True)
            else:
                row = row.model_copy(update={"matched": False, "other_value": other})
    return row, time.perf_counter() - t0


async def _fan_out(jobs: List[tuple], fn, workers: int) -> list:
    """Run fn(*job) for every job; results come back in job order."""
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return await asyncio.gather(*[loop.run_in_executor(pool, fn, *job) for job in jobs])


async def run_table(
    entries: List[LinkTableEntry],
    b: Birack,
    sh: Shadow,
    ms: ShadowModuleStructure,
    mirror: bool = False,
    workers: int = 1,
    expected: Optional[Dict[str, str]] = None,
) -> List[TableRow]:
    t0 = time.perf_counter()
    expected = expected or {}
    for name in sorted(set(expected) - {e.name for e in entries}):
        logger.warning("expected value for a link outside the table", name=name)
    # census lookups stay in this process so the cache is shared
    jobs = [(e.name, entry_pd(e), b, sh, ms, mirror, expected.get(e.name)) for e in entries]
    results = await _fan_out(jobs, _invariant_for, workers)
    rows = []
    for row, seconds in results:
        logger.info("invariant computed", name=row.name, value=row.value.to_text(),
                    mirror=row.mirror, matched=row.matched, timing_ms=int(seconds * 1000))
        rows.append(row)
    logger.info("table finished", links=len(rows), workers=workers,
                mismatches=sum(1 for r in rows if r.matched is False),
                timing_ms=int((time.perf_counter() - t0) * 1000))
    return rows


def group_rows(rows: List[TableRow]) -> List[Tuple[InvariantValue, List[str]]]:
    """Rows with equal values, groups ordered by first appearance."""
    groups: Dict[str, Tuple[InvariantValue, List[str]]] = {}
    for row in rows:
        key = row.value.to_text()
        groups.setdefault(key, (row.value, []))[1].append(row.name)
    return list(groups.values())


async def run_search(
    b: Birack,
    sh: Shadow,
    k: int,
    limit: Optional[int] = None,
    workers: int = 1,
    on_found: Optional[Callable[[ShadowModuleStructure], None]] = None,
) -> List[ShadowModuleStructure]:
    """Module search split over the values of t_{1,1,1}; merged in lexicographic order.

    `on_found` sees each structure as soon as every lexicographically
    smaller one has been reported.
    """
    t0 = time.perf_counter()
    found: List[ShadowModuleStructure] = []

    def report(ms: ShadowModuleStructure) -> None:
        found.append(ms)
        if on_found is not None:
            on_found(ms)

    if workers <= 1:
        for ms in iter_modules(b, sh, k, limit=limit):
            report(ms)
    else:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            branches = [loop.run_in_executor(pool, search_branch, b, sh, k, (v,), limit)
                        for v in root_values(k)]
            for branch in branches:
                if limit is not None and len(found) >= limit:
                    branch.cancel()
                    continue
                for ms in (await branch)[:None if limit is None else limit - len(found)]:
                    report(ms)
    logger.info("module search finished", ring=k, found=len(found), workers=workers,
                timing_ms=int((time.perf_counter() - t0) * 1000))
    return found
