from __future__ import annotations

import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from multipath.digraph import MULTIGRAPH, SIMPLE, Digraph  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def digraphs(draw, max_vertices: int = 6, max_edges: int = 6, multigraph: bool | None = None):
    n = draw(st.integers(1, max_vertices))
    multi = draw(st.booleans()) if multigraph is None else multigraph
    pairs = [(s, t) for s in range(n) for t in range(n) if s != t]
    if not pairs:
        return Digraph(n, (), SIMPLE)
    if multi:
        edges = draw(st.lists(st.sampled_from(pairs), max_size=max_edges))
    else:
        edges = draw(st.lists(st.sampled_from(pairs), max_size=max_edges, unique=True))
    return Digraph(n, tuple(edges), MULTIGRAPH if multi else SIMPLE)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
