"""Run every docstring example shipped with the package."""

import doctest

import planeperm.distances
import planeperm.enumeration
import planeperm.partitions
import planeperm.perm
import planeperm.plane
import planeperm.report
import planeperm.serialize

MODULES = [
    planeperm.partitions,
    planeperm.perm,
    planeperm.plane,
    planeperm.distances,
    planeperm.enumeration,
    planeperm.report,
    planeperm.serialize,
]


def test_doctests():
    total = 0
    for module in MODULES:
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
        total += result.attempted
    assert total >= 20
