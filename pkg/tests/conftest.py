from fractions import Fraction

import pytest

from dunklsb.coxeter import build_root_system, generate_group, make_multiplicity, orbit_partition
from dunklsb.dunklkernel import build_kernel_blocks
from dunklsb.hermite import build_orthogonal_basis
from dunklsb.polyring import DunklContext


def make_ctx(family, N, mu, m=None):
    rs = build_root_system(family, N, m)
    group = generate_group(rs)
    mult = make_multiplicity(orbit_partition(rs, group), [Fraction(v) for v in mu])
    return DunklContext(rs, mult, group)


@pytest.fixture(scope="session")
def b2():
    return make_ctx("B", 2, ["1/2", "3/2"])


@pytest.fixture(scope="session")
def a1a1():
    return make_ctx("A1^N", 2, [1, 2])


@pytest.fixture(scope="session")
def z2():
    return make_ctx("A1^N", 1, ["1"])


@pytest.fixture(scope="session")
def z2_half():
    return make_ctx("A1^N", 1, ["1/2"])


@pytest.fixture(scope="session")
def classical1():
    return make_ctx("A1^N", 1, [0])


@pytest.fixture(scope="session")
def classical2():
    return make_ctx("A1^N", 2, [0, 0])


@pytest.fixture(scope="session")
def b2_basis(b2):
    return build_orthogonal_basis(b2, 6)


@pytest.fixture(scope="session")
def z2_basis(z2):
    return build_orthogonal_basis(z2, 8)


@pytest.fixture(scope="session")
def b2_table(b2):
    return build_kernel_blocks(b2, 24)


@pytest.fixture(scope="session")
def z2_table(z2):
    return build_kernel_blocks(z2, 24)


@pytest.fixture(scope="session")
def classical1_table(classical1):
    return build_kernel_blocks(classical1, 30)


@pytest.fixture(scope="session")
def classical1_basis(classical1):
    return build_orthogonal_basis(classical1, 6)
