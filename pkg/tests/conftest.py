"""Shared exhaustive-enumeration caches and independent oracles."""

from functools import lru_cache

import pytest

from partition_paths import (
    contains_pattern,
    generate_partitions,
    generate_paths,
    parse_partition,
)


@lru_cache(maxsize=None)
def _partitions(m):
    return tuple(generate_partitions(m, limit=m))


@lru_cache(maxsize=None)
def _avoiders(m, pattern):
    pat = parse_partition(pattern)
    return tuple(p for p in _partitions(m) if not contains_pattern(p, pat))


@lru_cache(maxsize=None)
def _paths(n, path_class):
    return tuple(generate_paths(n, path_class, limit=n))


def _bell_triangle(order):
    # Independent oracle: B(n) by the Bell triangle, no partition generation.
    out = [1]
    row = [1]
    for _ in range(order):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
        out.append(row[0])
    return out


@pytest.fixture(scope="session")
def partitions_of():
    return _partitions


@pytest.fixture(scope="session")
def avoiders_of():
    return _avoiders


@pytest.fixture(scope="session")
def paths_of():
    return _paths


@pytest.fixture(scope="session")
def bell_oracle():
    return _bell_triangle
