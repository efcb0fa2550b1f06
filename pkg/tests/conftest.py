import itertools

import numpy as np
import pytest

from ivrough import InformationSystem, Interval, load_fixture


@pytest.fixture(scope="session")
def table1():
    return load_fixture("table1")


@pytest.fixture(scope="session")
def face27():
    return load_fixture("face27")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_interval(rng, scale=1.0, decimals=2):
    a, b = np.round(rng.uniform(0, scale, size=2), decimals)
    lo, hi = min(a, b), max(a, b)
    return Interval(float(lo), float(hi))


def random_system(rng, n=None, m=None, decimals=2):
    n = n or int(rng.integers(2, 13))
    m = m or int(rng.integers(1, 5))
    objects = [f"o{i}" for i in range(n)]
    attributes = [f"c{j}" for j in range(m)]
    cells = [[random_interval(rng, decimals=decimals) for _ in attributes] for _ in objects]
    return InformationSystem(objects, attributes, cells)


def random_reflexive(rng, n, density=None):
    density = rng.uniform(0.1, 0.7) if density is None else density
    m = rng.random((n, n)) < density
    np.fill_diagonal(m, True)
    return m


def all_reflexive(n):
    """Every reflexive boolean matrix of order n."""
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in itertools.product((False, True), repeat=len(off)):
        m = np.eye(n, dtype=bool)
        for (i, j), b in zip(off, bits):
            m[i, j] = b
        yield m


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if report.when != "call":
                continue
            props = dict(report.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL", props.get("detail", "")))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, status, detail in sorted(lines, key=lambda t: _criterion_key(t[0])):
        terminalreporter.write_line(f"{status}  criterion {criterion}  {detail}".rstrip())


def _criterion_key(label):
    head, _, tail = label.partition(".")
    return (int(head) if head.isdigit() else 99, tail)
