"""Lattice involutions, the mirror involution, the symplectic transpose
identity, and real fiber dualization."""

import pytest

from k3bv import (K3BVError, LatticeInvolution, RealFiberType, Sublattice,
                  SymplecticSpace, coordinates_in, invariant_sublattices,
                  k3_lattice, mirror_involution, orthogonal_complement,
                  real_fiber_dual, same_sublattice, transpose_defect)
from k3bv import matrixops as mo
from k3bv.involution import reflection_through
from k3bv.mirror import check_admissible, construct_mirror


def diag_involution(lattice, signs):
    matrix = tuple(tuple(signs[i] if i == j else 0 for j in range(lattice.rank))
                   for i in range(lattice.rank))
    return LatticeInvolution(lattice, matrix)


@pytest.fixture(scope="module")
def standard_rho():
    l = k3_lattice()
    return diag_involution(l, (1, 1) + (-1,) * 20)


class TestLatticeInvolution:
    def test_rejects_non_involutive(self, K3):
        bad = tuple(tuple(2 if i == j else 0 for j in range(22)) for i in range(22))
        with pytest.raises(K3BVError, match="square"):
            LatticeInvolution(K3, bad)

    def test_rejects_non_isometry(self, UU):
        # Swapping e1 and e2 does not preserve the block form pairing
        # with f1.
        perm = ((0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1))
        with pytest.raises(K3BVError, match="form"):
            LatticeInvolution(UU, perm)


class TestInvariantSublattices:
    def test_identity(self, UU):
        rho = diag_involution(UU, (1, 1, 1, 1))
        plus, minus = invariant_sublattices(rho)
        assert plus.rank == 4 and minus.rank == 0

    def test_minus_identity(self, UU):
        rho = diag_involution(UU, (-1, -1, -1, -1))
        plus, minus = invariant_sublattices(rho)
        assert plus.rank == 0 and minus.rank == 4

    def test_block_involution(self, standard_rho, K3):
        plus, minus = invariant_sublattices(standard_rho)
        first_u = Sublattice(K3, ((1,) + (0,) * 21, (0, 1) + (0,) * 20))
        assert same_sublattice(plus, first_u)
        assert same_sublattice(minus, orthogonal_complement(first_u))

    def test_swap_involution_saturated_kernels(self, U):
        rho = LatticeInvolution(U, ((0, 1), (1, 0)))
        plus, minus = invariant_sublattices(rho)
        assert same_sublattice(plus, Sublattice(U, ((1, 1),)))
        assert same_sublattice(minus, Sublattice(U, ((1, -1),)))


class TestMirrorInvolution:
    def test_invariant_is_mcheck(self, standard_rho, k3_split):
        m, t, split = k3_split
        checked = mirror_involution(standard_rho, split)
        plus, minus = invariant_sublattices(checked)
        assert same_sublattice(plus, t.compose(split.m_check))
        p_in_l = t.compose(split.p)
        pm = Sublattice(standard_rho.lattice, p_in_l.basis + m.basis)
        assert same_sublattice(minus, pm)

    def test_squares_to_identity(self, standard_rho, k3_split):
        _, _, split = k3_split
        checked = mirror_involution(standard_rho, split)
        n = checked.lattice.rank
        assert mo.mat_mul(checked.matrix, checked.matrix) == mo.identity(n)

    def test_twice_returns_original(self, standard_rho, k3_split):
        m, t, split = k3_split
        checked = mirror_involution(standard_rho, split)
        # The back-split lives in the anti-invariant lattice of checked,
        # which is P + M, with the same P.
        p_in_l = t.compose(split.p)
        t2 = Sublattice(standard_rho.lattice, p_in_l.basis + m.basis)
        e = coordinates_in(t2, p_in_l.basis[0])
        ep = coordinates_in(t2, p_in_l.basis[1])
        split2 = construct_mirror(check_admissible(t2, e, ep, 1))
        back = mirror_involution(checked, split2)
        assert back.matrix == standard_rho.matrix

    def test_m_not_one_rejected(self, standard_rho):
        from k3bv import direct_sum, hyperbolic_plane
        t = Sublattice.full(direct_sum(hyperbolic_plane(2), hyperbolic_plane(1)))
        split = construct_mirror(check_admissible(t, (1, 0, 0, 0), (0, 1, 0, 0), 2))
        with pytest.raises(K3BVError, match="m = 1"):
            mirror_involution(standard_rho, split)

    def test_reflection_matrix(self, UU):
        p = Sublattice(UU, ((1, 0, 0, 0), (0, 1, 0, 0)))
        r = reflection_through(p)
        assert r == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))


class TestTransposeDefect:
    def test_dim2_seed(self):
        space = SymplecticSpace.standard(2)
        defect = transpose_defect(space, space, ((1, 0), (0, -1)))
        assert defect == ((0, 0), (0, 0))

    def test_symplectic_map_rejected(self):
        space = SymplecticSpace.standard(2)
        with pytest.raises(K3BVError, match="anti-symplectic"):
            transpose_defect(space, space, ((1, 0), (0, 1)))

    def test_dim4_block_seed(self):
        space = SymplecticSpace.standard(4)
        phi = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))
        defect = transpose_defect(space, space, phi)
        assert all(x == 0 for row in defect for x in row)

    def test_form_must_be_skew(self):
        with pytest.raises(K3BVError):
            SymplecticSpace(((1, 0), (0, 1)))

    def test_form_must_be_nondegenerate(self):
        with pytest.raises(K3BVError):
            SymplecticSpace(((0, 0), (0, 0)))


class TestRealFiberDual:
    def test_interchange(self):
        assert real_fiber_dual(RealFiberType.FIGURE_EIGHT) is RealFiberType.CIRCLE_POINT
        assert real_fiber_dual(RealFiberType.CIRCLE_POINT) is RealFiberType.FIGURE_EIGHT

    def test_singular_circle_fixed(self):
        assert real_fiber_dual(RealFiberType.SINGULAR_CIRCLE) is RealFiberType.SINGULAR_CIRCLE

    def test_smooth_types_rejected(self):
        with pytest.raises(K3BVError):
            real_fiber_dual(RealFiberType.SMOOTH_ONE_CIRCLE)

    def test_involution(self):
        for t in (RealFiberType.FIGURE_EIGHT, RealFiberType.CIRCLE_POINT,
                  RealFiberType.SINGULAR_CIRCLE):
            assert real_fiber_dual(real_fiber_dual(t)) is t
