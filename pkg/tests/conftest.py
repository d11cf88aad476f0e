import pytest

from k3bv import (IntegerLattice, Sublattice, check_admissible,
                  construct_mirror, direct_sum, hyperbolic_plane, k3_lattice,
                  orthogonal_complement)


@pytest.fixture(scope="session")
def U():
    return hyperbolic_plane(1)


@pytest.fixture(scope="session")
def UU():
    u = hyperbolic_plane(1)
    return direct_sum(u, u)


@pytest.fixture(scope="session")
def K3():
    return k3_lattice()


@pytest.fixture(scope="session")
def uu_split(UU):
    """The m = 1 split of T = U + U with E = e1, E' = f1."""
    t = Sublattice.full(UU)
    return construct_mirror(check_admissible(t, (1, 0, 0, 0), (0, 1, 0, 0), 1))


@pytest.fixture(scope="session")
def k3_split(K3):
    """M = first U of the K3 lattice; the admissible pair sits in the
    second U with m = 1."""
    m = Sublattice(K3, ((1,) + (0,) * 21, (0, 1) + (0,) * 20))
    t = orthogonal_complement(m)
    # e2, f2 of the ambient lattice, rewritten in T coordinates.
    from k3bv import coordinates_in
    e = coordinates_in(t, tuple(1 if i == 2 else 0 for i in range(22)))
    ep = coordinates_in(t, tuple(1 if i == 3 else 0 for i in range(22)))
    return m, t, construct_mirror(check_admissible(t, e, ep, 1))


def basis_vector(n: int, i: int, c: int = 1) -> tuple:
    return tuple(c if j == i else 0 for j in range(n))
