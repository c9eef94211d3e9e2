"""Every docstring example in the package must hold."""

import doctest

import pytest

import hcomplex
from hcomplex import (
    cache,
    cli,
    complexes,
    homology,
    matching,
    morse,
    perms,
    reports,
    snf,
    witnesses,
)

MODULES = [
    hcomplex,
    cache,
    cli,
    complexes,
    homology,
    matching,
    morse,
    perms,
    reports,
    snf,
    witnesses,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
    if module not in (cache, cli):  # pure plumbing keeps no examples
        assert result.attempted > 0
