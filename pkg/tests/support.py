"""Shared helpers for the test modules."""

import random

from nilorder.harness.catalog import build, catalog


def small_catalog(limit=1000):
    return [e.name for e in catalog() if e.expected_order <= limit]


def random_pairs(count, seed, names=None):
    """``count`` random (group name, a, b) triples drawn across catalog groups."""
    rng = random.Random(seed)
    names = names or small_catalog()
    out = []
    for _ in range(count):
        G = build(rng.choice(names))
        out.append((G.name, rng.choice(G.elements), rng.choice(G.elements)))
    return out
