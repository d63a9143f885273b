"""Additive angles (bingles, tringles) of the cubic Berwald-Moor metric on H3."""
from .bingles import (
    FamilyParams,
    MoebiusParams,
    affine_bingle,
    euclid_phi1,
    euclid_phi2,
    family_bingle,
    fig1_section,
    intermediate_affine,
    intermediate_orthogonal,
    intermediate_scaling,
    nonlinear_bingle,
    ortho_bingle_log,
    ortho_bingle_moebius,
    ortho_log_phi,
    pseudo_phi1,
    pseudo_phi2,
    psi_moebius,
    solve_conic_intermediate,
)
from .errors import PolyAngleError
from .hyper import ExponentialForm, HyperNumber, exp_bingles, from_exponential, to_exponential
from .invariants import PairInvariants, QuadInvariantTable, pair_invariants, quad_table, w4
from .metric import bm3, circ, ortho3_residual
from .tringles import reconstruct_ratio_triples, solve_cubic_real, tringle_AB
from .verify import EquationId, VerificationReport, run_all, run_check

__version__ = "0.1.0"
