import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dgxbar import Arc, DepType, Token, build_tree  # noqa: E402

DATA = Path(__file__).parent / "data"
ROLES = {"comp": DepType.COMPLEMENT, "mod": DepType.MODIFIER, "spec": DepType.SPECIFIER}


def make_tree(rows):
    """rows: (form, category, head, role) with head 0 for the root."""
    tokens = [Token(i, form, cat) for i, (form, cat, _, _) in enumerate(rows, start=1)]
    arcs = [Arc(i, head, ROLES[role])
            for i, (_, _, head, role) in enumerate(rows, start=1) if head]
    return build_tree(tokens, arcs)


FIG1 = [
    ("the", "D", 3, "spec"),
    ("old", "Adj", 3, "mod"),
    ("dog", "N", 4, "comp"),
    ("chased", "V", 0, "root"),
    ("the", "D", 6, "spec"),
    ("cat", "N", 4, "comp"),
    ("into", "P", 4, "mod"),
    ("the", "D", 9, "spec"),
    ("garden", "N", 7, "comp"),
]
BIG_RED_HOUSE = [
    ("the", "D", 4, "spec"),
    ("big", "Adj", 4, "mod"),
    ("red", "Adj", 4, "mod"),
    ("house", "N", 0, "root"),
]
YOUNG_STUDENT = [
    ("young", "Adj", 3, "mod"),
    ("long-haired", "Adj", 3, "mod"),
    ("student", "N", 0, "root"),
]
CAMBRIDGE = [
    ("the", "D", 3, "spec"),
    ("long-haired", "Adj", 3, "mod"),
    ("student", "N", 0, "root"),
    ("from", "P", 3, "mod"),
    ("Cambridge", "N", 4, "comp"),
]
KNOCKED = [
    ("intentionally", "Adv", 2, "mod"),
    ("knocked", "V", 0, "root"),
    ("twice", "Adv", 2, "mod"),
]
TYPICAL_HOUSE = [
    ("typical", "Adj", 3, "mod"),
    ("French", "Adj", 3, "mod"),
    ("house", "N", 0, "root"),
]
CROSSING = [
    ("A", "N", 3, "mod"),
    ("B", "V", 0, "root"),
    ("C", "N", 2, "comp"),
]


@pytest.fixture
def fig1():
    return make_tree(FIG1)


@pytest.fixture
def dog():
    return build_tree([Token(1, "dog", "N")], [])


@pytest.fixture
def crossing():
    return make_tree(CROSSING)


# -- acceptance reporting ---------------------------------------------------

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        _ACCEPTANCE.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line("%s  %d. %s" % (status, number, title))
