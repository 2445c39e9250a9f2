"""Shared test helpers: independent oracles and small-instance generators.

The degree-sequence oracle enumerates *every* labeled graph on n vertices
with numpy bit tricks and collects the sorted degree sequences that actually
occur; it shares no code with the lay-off recursion it is used to check.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

import numpy as np
import pytest

from jpart import build_graph, degree_sequence


@lru_cache(maxsize=None)
def degree_sequence_set(n: int) -> frozenset[tuple[int, ...]]:
    """All degree sequences of graphs on n labeled vertices, by brute force."""
    if n == 0:
        return frozenset({()})
    pairs = list(combinations(range(n), 2))
    n_masks = 1 << len(pairs)
    masks = np.arange(n_masks, dtype=np.uint32)
    degs = np.zeros((n_masks, n), dtype=np.int8)
    for idx, (u, v) in enumerate(pairs):
        bit = ((masks >> np.uint32(idx)) & 1).astype(np.int8)
        degs[:, u] += bit
        degs[:, v] += bit
    degs[:, ::-1].sort(axis=1)  # in-place descending sort of each row
    unique = np.unique(degs, axis=0)
    return frozenset(tuple(int(x) for x in row) for row in unique)


def all_nonincreasing_tuples(n: int, max_value: int):
    """Every nonincreasing tuple of length n with entries in 0..max_value."""

    def rec(prefix, remaining, cap):
        if remaining == 0:
            yield tuple(prefix)
            return
        for v in range(min(cap, max_value), -1, -1):
            prefix.append(v)
            yield from rec(prefix, remaining - 1, v)
            prefix.pop()

    yield from rec([], n, max_value)


def random_graph(rng: random.Random, n: int, p: float):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return build_graph(n, edges)


def random_graphic_sequence(rng: random.Random, n: int):
    """Graphic by construction: the degree sequence of a random graph."""
    return degree_sequence(random_graph(rng, n, rng.random()))


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = [(u + 1, v + 1) for u, v in combinations(range(n), 2)]
    for mask in range(1 << len(pairs)):
        yield build_graph(
            n, [e for i, e in enumerate(pairs) if mask >> i & 1]
        )


def compositions_of(total: int):
    """All compositions of ``total`` into positive parts."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions_of(total - first):
            yield (first,) + rest


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
