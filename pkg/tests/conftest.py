import functools
import random

import pytest
from hypothesis import strategies as st

from topotutte.corpus import CorpusConfig, plane_corpus, random_ribbon_graph, relative_corpus, ribbon_corpus

SMALL = CorpusConfig(max_edges=6, max_vertices=3)


@functools.lru_cache(maxsize=None)
def ribbon_graphs(size=200, max_edges=10, seed=0):
    return tuple(ribbon_corpus(CorpusConfig(size=size, max_edges=max_edges, seed=seed)))


@functools.lru_cache(maxsize=None)
def plane_graphs(size=200, max_edges=10, seed=0):
    return tuple(plane_corpus(size, max_edges, seed))


@functools.lru_cache(maxsize=None)
def relative_graphs(size=100, max_edges=10, seed=0):
    return tuple(relative_corpus(size, max_edges, seed))


@st.composite
def small_ribbon_graphs(draw, cfg=SMALL):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_ribbon_graph(random.Random(seed), cfg)


@pytest.fixture(scope="session")
def corpus():
    return ribbon_graphs()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, msg = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {msg}")
