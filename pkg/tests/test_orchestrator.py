import asyncio

from src.algebra.biracks import shadow_from_table
from src.algebra.shadow_algebra import search_modules
from src.invariants.modules import invariant_from_counts
from src.loaders.link_table import load_link_table, select_links
from src.models import TableRow
from src.orchestrator import group_rows, run_search, run_table


def test_group_rows_keeps_first_appearance_order():
    a, b = invariant_from_counts([5] * 4), invariant_from_counts([25] * 4)
    rows = [TableRow(name="3_1", value=a), TableRow(name="4_1", value=b), TableRow(name="5_2", value=a)]
    groups = group_rows(rows)
    assert [(v.to_text(), names) for v, names in groups] == [("4u^5", ["3_1", "5_2"]), ("4u^25", ["4_1"])]


def test_parallel_search_is_deterministic(x2_birack):
    sh = shadow_from_table(x2_birack, [[1, 1]])
    serial = search_modules(x2_birack, sh, 3)
    assert asyncio.run(run_search(x2_birack, sh, 3, workers=2)) == serial
    assert asyncio.run(run_search(x2_birack, sh, 3, limit=1, workers=2)) == serial[:1]


def test_parallel_table_matches_serial(x2_birack, x2_shadow2, x2_module_z5):
    entries = select_links(load_link_table(), 4, include_links=True, max_link_crossings=2)
    serial = asyncio.run(run_table(entries, x2_birack, x2_shadow2, x2_module_z5, workers=1))
    parallel = asyncio.run(run_table(entries, x2_birack, x2_shadow2, x2_module_z5, workers=2))
    assert [r.name for r in serial] == ["3_1", "4_1", "L2a1"]
    assert serial == parallel


def test_search_reports_structures_in_order(x2_birack):
    sh = shadow_from_table(x2_birack, [[1, 1]])
    serial = search_modules(x2_birack, sh, 3)
    for workers in (1, 2):
        seen = []
        found = asyncio.run(run_search(x2_birack, sh, 3, limit=2, workers=workers, on_found=seen.append))
        assert seen == found == serial[:2]


def test_table_rows_record_the_matching_chirality(x2_birack, x2_shadow2, x2_module_z5):
    entries = select_links(load_link_table(), 3)
    plain = asyncio.run(run_table(entries, x2_birack, x2_shadow2, x2_module_z5))[0]
    mirrored = asyncio.run(run_table(entries, x2_birack, x2_shadow2, x2_module_z5, mirror=True))[0]
    target = mirrored.value.to_text().replace(" ", "")
    row = asyncio.run(run_table(entries, x2_birack, x2_shadow2, x2_module_z5, expected={"3_1": target}))[0]
    assert row.matched is True
    assert row.value == mirrored.value
    assert row.mirror is (plain.value != mirrored.value)
    miss = asyncio.run(run_table(entries, x2_birack, x2_shadow2, x2_module_z5, expected={"3_1": "0"}))[0]
    assert miss.matched is False
    assert (miss.value, miss.other_value) == (plain.value, mirrored.value)
