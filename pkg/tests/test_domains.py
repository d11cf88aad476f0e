"""Tube domains, period domains, the discriminant, primed slices."""

from fractions import Fraction

import pytest

from k3bv import (K3BVError, PeriodVector, Sublattice, TubePoint, in_delta,
                  in_period_domain, in_primed, in_tube, pairing, phi)


@pytest.fixture
def m_u(U):
    return Sublattice.full(U)


class TestInTube:
    def test_positive_norm(self, m_u):
        assert in_tube(TubePoint(m_u, (0, 0), (1, 1)))

    def test_isotropic(self, m_u):
        assert not in_tube(TubePoint(m_u, (0, 0), (1, 0)))

    def test_negative_norm(self, m_u):
        assert not in_tube(TubePoint(m_u, (0, 0), (1, -1)))

    def test_rational_coordinates(self, m_u):
        p = TubePoint(m_u, (Fraction(1, 2), 0), (Fraction(1, 3), Fraction(1, 3)))
        assert p.omega_sq() == Fraction(2, 9)
        assert in_tube(p)


class TestInPeriodDomain:
    def test_standard_period(self, UU):
        t = Sublattice.full(UU)
        assert in_period_domain(PeriodVector(t, (1, 1, 0, 0), (0, 0, 1, 1)))

    def test_zero_imaginary_part(self, UU):
        t = Sublattice.full(UU)
        assert not in_period_domain(PeriodVector(t, (1, 0, 0, 0), (0, 0, 0, 0)))

    def test_nonzero_re_dot_im(self, U):
        t = Sublattice.full(U)
        assert not in_period_domain(PeriodVector(t, (1, 0), (0, 1)))


class TestInDelta:
    def test_period_on_first_block(self, UU):
        t = Sublattice.full(UU)
        om = PeriodVector(t, (1, 1, 0, 0), (1, -1, 0, 0))
        hit, witness = in_delta(om)
        assert hit
        assert witness is not None and any(x != 0 for x in witness)
        assert pairing(UU, witness, (1, 1, 0, 0)) == 0
        assert pairing(UU, witness, (1, -1, 0, 0)) == 0

    def test_rank_two_generic_period_misses(self, U):
        t = Sublattice.full(U)
        hit, witness = in_delta(PeriodVector(t, (1, 0), (0, 1)))
        assert not hit and witness is None

    def test_zero_period_rejected(self, U):
        t = Sublattice.full(U)
        with pytest.raises(K3BVError):
            in_delta(PeriodVector(t, (0, 0), (0, 0)))

    def test_rational_periods_over_higher_rank_always_hit(self, UU):
        # Two linear conditions cannot cut Z^4 down to zero, so every
        # rational period of a rank >= 3 lattice has a witness.
        t = Sublattice.full(UU)
        om = PeriodVector(t, (1, 1, 1, 0), (0, 0, 1, 1))
        hit, witness = in_delta(om)
        assert hit and witness is not None


class TestInPrimed:
    def test_zero_b_field(self, uu_split):
        p = TubePoint(uu_split.m_check, (0, 0), (1, 1))
        assert in_primed(p, uu_split)

    def test_period_with_im_in_mcheck(self, uu_split):
        om = PeriodVector(uu_split.t, (1, 1, 0, 0), (0, 0, 1, 1))
        assert in_primed(om, uu_split)

    def test_period_with_im_in_p(self, uu_split):
        om = PeriodVector(uu_split.t, (0, 0, 1, 1), (0, 1, 0, 0))
        assert not in_primed(om, uu_split)

    def test_rejects_other_types(self, uu_split):
        with pytest.raises(K3BVError):
            in_primed((1, 2), uu_split)


def test_phi_lands_in_period_domain(uu_split):
    for b, omega in (((0, 0), (1, 1)), ((1, 0), (2, 1)),
                     ((Fraction(1, 2), Fraction(-1, 3)), (1, 2))):
        p = TubePoint(uu_split.m_check, b, omega)
        assert in_period_domain(phi(uu_split, p))
