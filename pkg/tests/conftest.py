import pytest

from doreyrule.qchar import fm_qcharacter
from doreyrule.root_system import build_root_system

ALL_ALGEBRAS = [("A", n) for n in range(1, 7)] + [("D", n) for n in (4, 5, 6)] + [("E", n) for n in (6, 7, 8)]
DESK_ALGEBRAS = [("A", n) for n in range(1, 7)] + [("D", n) for n in (4, 5, 6)] + [("E", 6)]

_RS: dict = {}
_CHARS: dict = {}


def root_system(family, rank):
    key = (family, rank)
    if key not in _RS:
        _RS[key] = build_root_system(family, rank)
    return _RS[key]


def characters(family, rank):
    """All fundamental q-characters, computed once per session."""
    key = (family, rank)
    if key not in _CHARS:
        rs = root_system(family, rank)
        _CHARS[key] = {i: fm_qcharacter(rs, i) for i in rs.nodes}
    return _CHARS[key]


@pytest.fixture(params=ALL_ALGEBRAS, ids=lambda p: f"{p[0]}{p[1]}")
def any_rs(request):
    return root_system(*request.param)


@pytest.fixture(params=DESK_ALGEBRAS, ids=lambda p: f"{p[0]}{p[1]}")
def desk(request):
    return root_system(*request.param), characters(*request.param)


ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
