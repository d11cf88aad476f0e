"""The explicit K3 mirror map, its inverse, and the elliptic-curve case.

phi sends a complexified Kahler class B + i*omega over M-check to a
period over T:

    re = B + E'/m + ((omega.omega - B.B)/2) E
    im = omega - (omega.B) E

For m > 1 the output has rational coordinates (the E'/m term); the
bilinear form extends rationally without change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import matrixops as mo
from .cnum import QC
from .domains import PeriodVector, TubePoint, in_period_domain, in_tube
from .errors import K3BVError, NormalizationError
from .matrixops import Vector
from .mirror import MirrorSplit

__all__ = ["EllipticPeriod", "phi", "phi_inverse", "elliptic_phi"]


@dataclass(frozen=True)
class EllipticPeriod:
    """Normalized elliptic period s_x + tau * s_y with tau = B + i*omega."""

    sx_coeff: Fraction
    sy_coeff: QC

    def __post_init__(self):
        if self.sy_coeff.im <= 0:
            raise K3BVError("tau must lie in the upper half plane")

    @property
    def tau(self) -> QC:
        return self.sy_coeff


def phi(split: MirrorSplit, p: TubePoint) -> PeriodVector:
    """Mirror map: tube point over M-check to period vector over T."""
    if p.lattice != split.m_check:
        raise K3BVError("tube point must live over the M-check of the split")
    if not in_tube(p):
        raise K3BVError("point is not in the tube domain: omega.omega <= 0")
    m = split.m
    e = tuple(Fraction(x) for x in split.pair.e)
    ep = tuple(Fraction(x) for x in split.pair.e_prime)
    # Coordinates of B and omega inside T.
    b_t = tuple(Fraction(x) for x in mo.vec_mat(p.b, split.m_check.basis))
    w_t = tuple(Fraction(x) for x in mo.vec_mat(p.omega, split.m_check.basis))
    w_sq = p.omega_sq()
    b_sq = p.b_sq()
    wb = p.b_dot_omega()
    re = mo.add_vec(mo.add_vec(b_t, mo.scale_vec(Fraction(1, m), ep)),
                    mo.scale_vec((w_sq - b_sq) / 2, e))
    im = mo.sub_vec(w_t, mo.scale_vec(wb, e))
    return PeriodVector(split.t, re, im)


def phi_inverse(split: MirrorSplit, om: PeriodVector) -> TubePoint:
    """Inverse mirror map: rescale so Omega.E = 1, project onto M-check.

    Raises when Omega.E = 0, which certifies Omega is not in the period
    domain of M-polarized surfaces.
    """
    if om.lattice != split.t:
        raise K3BVError("period vector must live over the T of the split")
    gram = split.t.gram()
    e = split.pair.e
    ge = mo.mat_vec(gram, e)
    c = QC(mo.dot(om.re, ge), mo.dot(om.im, ge))
    if c.is_zero():
        raise NormalizationError(
            "Omega.E = 0: the period cannot be normalized, Omega is not in D_M")
    if not in_period_domain(om):
        raise K3BVError("vector does not satisfy the period-domain conditions")
    one = QC(1)
    scale = one / c
    norm = [QC(r, i) * scale for r, i in zip(om.re, om.im)]
    # Exact decomposition T (x) Q = P (x) Q + M-check (x) Q.
    basis = (split.pair.e, split.pair.e_prime) + split.m_check.basis
    bt = mo.transpose(basis)
    re_coords = mo.solve_rational(bt, tuple(z.re for z in norm))
    im_coords = mo.solve_rational(bt, tuple(z.im for z in norm))
    if re_coords is None or im_coords is None:
        raise NormalizationError("period does not lie in the span of P + M-check")
    b = tuple(re_coords[2:])
    w = tuple(im_coords[2:])
    return TubePoint(split.m_check, b, w)


def elliptic_phi(b, omega) -> EllipticPeriod:
    """Elliptic-curve mirror map: (B, omega) -> s_x + (B + i*omega) s_y."""
    b = Fraction(b)
    omega = Fraction(omega)
    if omega <= 0:
        raise K3BVError(f"omega must be positive, got {omega}")
    return EllipticPeriod(Fraction(1), QC(b, omega))
