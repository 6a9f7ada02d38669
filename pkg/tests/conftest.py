import csv
from pathlib import Path

import pytest
from hypothesis import strategies as st

from geocodes.grid import Macrobond

DATA = Path(__file__).parent / "data"


def load_table(name):
    with open(DATA / name, newline="") as fh:
        return list(csv.DictReader(fh))


@st.composite
def macrobonds(draw, min_n=1, max_n=13, min_w=1, max_w=None):
    n = draw(st.integers(min_n, max_n))
    cells = n * n
    hi = cells if max_w is None else min(cells, max_w)
    w = draw(st.integers(min(min_w, hi), hi))
    idx = draw(st.lists(st.integers(0, cells - 1), min_size=w, max_size=w, unique=True))
    return Macrobond(n, [(i // n, i % n) for i in idx])


@st.composite
def macrobond_pairs(draw, max_n=13, min_w=1):
    a = draw(macrobonds(max_n=max_n, min_w=min_w, max_w=max_n))
    n = a.n
    w = draw(st.integers(min(min_w, n), n))
    idx = draw(st.lists(st.integers(0, n * n - 1), min_size=w, max_size=w, unique=True))
    return a, Macrobond(n, [(i // n, i % n) for i in idx])


@pytest.fixture
def m_x2():
    # graph of x^2 over F_5
    return Macrobond(5, [(0, 0), (1, 1), (2, 4), (3, 4), (4, 1)])


@pytest.fixture
def m_2x2():
    return Macrobond(5, [(0, 0), (1, 2), (2, 3), (3, 3), (4, 2)])


ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0][1:])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
