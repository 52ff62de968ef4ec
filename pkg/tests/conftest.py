from functools import lru_cache

import pytest

from htwrank.catalog import shipped_catalog
from htwrank.chartab import character_table
from htwrank.permgroup import generate_group
from htwrank.ranks import analyze

_criteria = {}


@lru_cache(maxsize=None)
def catalog_groups(name):
    return tuple((label, generate_group(gens)) for label, gens in shipped_catalog(name))


@lru_cache(maxsize=None)
def all_catalog_groups():
    return catalog_groups("order_lt24.grp") + catalog_groups("families.grp")


@lru_cache(maxsize=None)
def cached_table(name):
    return character_table(dict(all_catalog_groups())[name])


@lru_cache(maxsize=None)
def cached_report(name):
    return analyze(dict(all_catalog_groups())[name], name)


@pytest.fixture(scope="session")
def lt24():
    return catalog_groups("order_lt24.grp")


@pytest.fixture(scope="session")
def families():
    return catalog_groups("families.grp")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True})
    if call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {entry['title']}")
