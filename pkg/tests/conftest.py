import random

import pytest
from hypothesis import settings, strategies as st

from lotcert import make_log
from lotcert.log_model import Log

settings.register_profile("ci", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("ci")

# One-vertex LOT, no edges.
TRIV = make_log(["x"], [])

# The unique reduced shape on a 3-vertex path.
PATH3 = make_log(["x", "y", "z"], [("e1", "x", "y", "z"), ("e2", "z", "y", "x")])

# PATH3 with its second edge reversed; the plus and minus link sides are trees.
PATH3_RHO = make_log(["x", "y", "z"], [("e1", "x", "y", "z"), ("e2", "y", "z", "x")])

# Violates compression: the label equals the target.
NONCOMP = make_log(["x", "y"], [("e", "x", "y", "y")])

# Reduced injective LOT whose subtree {e1,e2,e3} is a sub-LOT that is not
# boundary reduced (d is a leaf there and only labeled outside it).
BADSUB = make_log(
    ["a", "b", "c", "d", "p", "q", "r", "s"],
    [
        ("e1", "a", "b", "c"),
        ("e2", "b", "c", "a"),
        ("e3", "c", "d", "b"),
        ("e4", "b", "p", "r"),
        ("e5", "p", "q", "d"),
        ("e6", "q", "r", "s"),
        ("e7", "q", "s", "p"),
    ],
)


@pytest.fixture
def triv() -> Log:
    return TRIV


@pytest.fixture
def path3() -> Log:
    return PATH3


@pytest.fixture
def path3_rho() -> Log:
    return PATH3_RHO


@pytest.fixture
def noncomp() -> Log:
    return NONCOMP


@pytest.fixture
def badsub() -> Log:
    return BADSUB


@st.composite
def logs(draw, max_vertices=6, max_edges=8):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    names = [f"v{i}" for i in range(n)]
    m = draw(st.integers(min_value=0, max_value=max_edges))
    idx = st.integers(min_value=0, max_value=n - 1)
    edges = []
    for i in range(m):
        u, v, lab = draw(idx), draw(idx), draw(idx)
        edges.append((f"e{i + 1}", names[u], names[v], names[lab]))
    return make_log(names, edges)


@st.composite
def lofs(draw, max_vertices=7):
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    names = [f"v{i}" for i in range(n)]
    edges = []
    k = 0
    for i in range(1, n):
        if draw(st.booleans()) and draw(st.booleans()):
            continue  # leave i in a new component
        parent = draw(st.integers(min_value=0, max_value=i - 1))
        u, v = (parent, i) if draw(st.booleans()) else (i, parent)
        lab = draw(st.integers(min_value=0, max_value=n - 1))
        k += 1
        edges.append((f"e{k}", names[u], names[v], names[lab]))
    return make_log(names, edges)


def seeded_rng(*key) -> random.Random:
    return random.Random(":".join(str(k) for k in key))
