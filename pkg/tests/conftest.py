import pytest

from bcolor.generators import random_max_outerplanar, random_max_planar, sparsify


def small_planar_corpus(count=60, seed0=0):
    out = []
    for s in range(count):
        n = 4 + s % 9
        g = random_max_planar(n, seed0 + s)
        if s % 2:
            g = sparsify(g, 0.7, seed0 + s)
        out.append(g)
    return out


def small_outerplanar_corpus(count=60, seed0=0):
    out = []
    for s in range(count):
        n = 3 + s % 10
        g = random_max_outerplanar(n, seed0 + s)
        if s % 2:
            g = sparsify(g, 0.75, seed0 + s)
        out.append(g)
    return out


@pytest.fixture(scope="session")
def planar_small():
    return small_planar_corpus()


@pytest.fixture(scope="session")
def outerplanar_small():
    return small_outerplanar_corpus()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
