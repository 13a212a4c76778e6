"""Shared fixtures: the seeded decomposition corpus used by the round-trip
and step-bound acceptance checks."""

import time
from types import SimpleNamespace

import pytest

from picard31.decomposer import decompose_traced, random_element
from picard31.words import evaluate


@pytest.fixture(scope="session")
def corpus7():
    """1000 random words from consecutive seeds starting at 7, their
    matrices, and their traced decompositions (self-verified on
    construction). elapsed covers only the decomposition work."""
    words = [random_element(7 + i, 40) for i in range(1000)]
    matrices = [evaluate(w) for w in words]
    start = time.perf_counter()
    results = [decompose_traced(g) for g in matrices]
    elapsed = time.perf_counter() - start
    return SimpleNamespace(words=words, matrices=matrices, results=results,
                           elapsed=elapsed)
