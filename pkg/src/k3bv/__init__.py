"""Exact arithmetic for lattice-polarized K3 mirror symmetry and
Borcea-Voisin Calabi-Yau invariants.

Everything is computed over Z and Q with arbitrary precision; there is
no floating point anywhere in the library.
"""

from .bv import (BVData, HodgePair, SelfMirrorLocus, euler_characteristic,
                 hodge_numbers, mirror_swap)
from .catalog import e8_minus, hyperbolic_plane, k3_lattice, lattice_by_name
from .census import (BasePoint, FiberCensus, FiberRecord, KodairaType,
                     base_embed, census_slack, dualize_census,
                     fiber_contribution, total_euler, validate_census)
from .cnum import QC
from .domains import (PeriodVector, TubePoint, in_delta, in_period_domain,
                      in_primed, in_tube)
from .errors import (AdmissibilityError, CensusError, DimensionMismatch,
                     K3BVError, NormalizationError, NotInLattice,
                     SplittingError)
from .hyperkahler import (RotationRow, RotationTable, UnitPhase, phase_rotate,
                          rotation_table)
from .involution import (LatticeInvolution, RealFiberType, SymplecticSpace,
                         invariant_sublattices, mirror_involution,
                         real_fiber_dual, reflection_through, transpose_defect)
from .lattice import (IntegerLattice, Sublattice, coordinates_in, contains,
                      det_and_signature, direct_sum, divisibility,
                      is_primitive, is_saturated, orthogonal_complement,
                      pairing, same_sublattice, saturation)
from .leray import (Filtration, SpectralTable, TensorPeriod, bv_mirror_period,
                    bv_table, check_degeneration, elliptic_table,
                    filtration_dims, k3_table, recover_period_inputs,
                    swap_rows, y_betti)
from .matrixops import SmithDecomposition, smith_normal_form
from .mirror import (AdmissiblePair, MirrorSplit, check_admissible,
                     construct_mirror, find_isotropic)
from .mirrormap import EllipticPeriod, elliptic_phi, phi, phi_inverse

__version__ = "0.1.0"
