import doctest

import pytest

from permutads import (
    bruhat,
    chains,
    derivations,
    linalg,
    permutad,
    shuffles,
    surjections,
    trees,
)

MODULES = [bruhat, chains, derivations, linalg, permutad, shuffles, surjections, trees]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__.split(".")[-1])
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0
    assert result.attempted > 0
