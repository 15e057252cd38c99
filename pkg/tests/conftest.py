import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dichromatic.digraph import Digraph, is_acyclic, induced
from dichromatic.generators import GenConfig, random_in_class

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

PROBS = (0.2, 0.3, 0.45)


@st.composite
def digraphs(draw, min_n=0, max_n=6, oriented=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    # 0 none, 1 forward, 2 backward, 3 digon
    states = draw(st.lists(st.integers(0, 2 if oriented else 3), min_size=len(pairs), max_size=len(pairs)))
    arcs = []
    for (u, v), s in zip(pairs, states):
        if s in (1, 3):
            arcs.append((u, v))
        if s in (2, 3):
            arcs.append((v, u))
    return Digraph(range(n), arcs)


def class_members(spec, count, n_max, seed0=0, n_min=4):
    """Seeded class members with n cycling through n_min..n_max."""
    span = n_max - n_min + 1
    return [
        random_in_class(GenConfig(n_min + i % span, PROBS[i % len(PROBS)], seed0 + i), spec)
        for i in range(count)
    ]


def chi_by_enumeration(D):
    """Dichromatic number by trying every coloring; independent of the oracle."""
    vs = D.vertices
    if not vs:
        return 0
    for k in range(1, len(vs) + 1):
        for cols in itertools.product(range(k), repeat=len(vs)):
            if all(is_acyclic(induced(D, [v for v, c in zip(vs, cols) if c == col]))
                   for col in set(cols)):
                return k


C3 = Digraph(range(3), [(0, 1), (1, 2), (2, 0)])
TT3 = Digraph(range(3), [(0, 1), (0, 2), (1, 2)])
C4 = Digraph(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = Digraph(range(5), [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def c3():
    return C3


@pytest.fixture
def tt3():
    return TT3


@pytest.fixture
def c4():
    return C4


@pytest.fixture
def c5():
    return C5


_acceptance_lines = []


@pytest.fixture(scope="session")
def acceptance_report():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
