"""Shared fixtures: face tables and matchings are expensive, build them once."""

import pytest

from hcomplex.complexes import enumerate_faces
from hcomplex.matching import build_matching


@pytest.fixture(scope="session")
def table():
    cache = {}

    def get(n: int):
        if n not in cache:
            cache[n] = enumerate_faces(n, max_n=9)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def matching(table):
    cache = {}

    def get(n: int, dual: bool = False):
        if (n, dual) not in cache:
            cache[n, dual] = build_matching(table(n), dual=dual)
        return cache[n, dual]

    return get
