from __future__ import annotations

import sys

import pytest

from kgraphs import fixture, all_fixtures
from kgraphs.generate import generate_kgraph

CORPUS_SEEDS = tuple(range(1, 101))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # surface the acceptance-gate lines even under output capture
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "SUMMARY", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def corpus_rank(seed: int) -> int:
    return 1 if seed % 2 else 2


def build_corpus():
    return [(seed, generate_kgraph(seed, corpus_rank(seed), 4, 3)) for seed in CORPUS_SEEDS]


@pytest.fixture(scope="session")
def corpus():
    """The pinned random corpus: 100 seeds, rank 1 on odd seeds and rank 2
    on even ones, at most 4 vertices and 3 parallel edges."""
    return build_corpus()


@pytest.fixture(scope="session")
def graphs():
    return {name: fixture(name) for name in all_fixtures()}


@pytest.fixture(scope="session")
def g_loop(graphs):
    return graphs["g_loop"]


@pytest.fixture(scope="session")
def g_o2(graphs):
    return graphs["g_o2"]


@pytest.fixture(scope="session")
def g_t2(graphs):
    return graphs["g_t2"]


@pytest.fixture(scope="session")
def g_flip(graphs):
    return graphs["g_flip"]


@pytest.fixture(scope="session")
def g_src(graphs):
    return graphs["g_src"]


@pytest.fixture(scope="session")
def g_2v(graphs):
    return graphs["g_2v"]
