import pathlib

import pytest
from hypothesis import settings

from graal import PolyRing, build_presentation, build_tower, gr_presentation
from graal.cli import parse_problem

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %d: %s  %s" % (k, "PASS" if ok else "FAIL", detail))


class Case:
    """A tower together with both presentations."""

    def __init__(self, names, H, J, I=None):
        self.Q = PolyRing(names)
        g = dict(zip(names, self.Q.gens))
        self.vars = g
        self.H = [eval(h, {}, g) if isinstance(h, str) else h for h in H]
        self.J = [eval(f, {}, g) if isinstance(f, str) else f for f in J]
        self.I = [eval(f, {}, g) for f in I] if I else None
        self.tower = build_tower(names, self.H, self.J)
        self.local = build_presentation(self.tower)
        self.gr = gr_presentation(self.local)


@pytest.fixture(scope="session")
def surface():
    return Case(["x", "y", "z"], ["y**2 + x**3 - x**2*z**2"], ["x", "y"])


@pytest.fixture(scope="session")
def parabola():
    return Case(["x", "y", "z"], ["y**2 + x**3 - x**2*z**2"], ["x - z**2", "y"])


DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


class FileCase(Case):
    """A case read from a problem file in ``data/``."""

    def __init__(self, name):
        pf = parse_problem((DATA / name).read_text())
        self.problem = pf
        self.Q = pf.ring
        self.vars = dict(zip(pf.variables, self.Q.gens))
        self.H, self.J = pf.H, pf.J
        self.I = pf.ideal_I()
        self.tower = build_tower(pf.variables, self.H, self.J)
        self.local = build_presentation(self.tower)
        self.gr = gr_presentation(self.local)


@pytest.fixture(scope="session")
def final():
    return FileCase("twisted.graal")


@pytest.fixture(scope="session")
def line():
    return Case(["x"], [], ["x"], ["x"])
