"""Shared fixtures: fields are built once per session."""

import pytest

from dts_ldpc.code import CodeSpec
from dts_ldpc.dts import DifferenceTriangleSet
from dts_ldpc.gf import GaloisField


@pytest.fixture(scope="session")
def gf32():
    return GaloisField(2, 5)


@pytest.fixture(scope="session")
def gf7():
    return GaloisField(7, 1)


@pytest.fixture(scope="session")
def dts_126_124():
    return DifferenceTriangleSet(((1, 2, 6), (1, 2, 4)))


@pytest.fixture(scope="session")
def dts_126_235():
    return DifferenceTriangleSet(((1, 2, 6), (2, 3, 5)))


@pytest.fixture(scope="session")
def ref_spec_a(dts_126_124, gf32):
    return CodeSpec(dts_126_124, gf32, 3)


@pytest.fixture(scope="session")
def ref_spec_b(dts_126_235, gf32):
    return CodeSpec(dts_126_235, gf32, 3)
