"""Exact lattice arithmetic for free positive-entropy K3 surface automorphisms.

Subpackages:
  golden    -- arithmetic in Z[eta], eta the golden number
  lattice   -- rank-2 integral bilinear forms, isometries, representation
  discgroup -- Smith normal form and discriminant groups
  surface   -- Lefschetz numbers and dynamical degree of surface models
  certifier -- the C1-C8 certificate and the q-family scan
  cli       -- command-line front end
"""

from .golden import ETA, GoldenInt, eta_pow, fib
from .lattice import (
    GramForm,
    LatticeMap,
    charpoly,
    entropy,
    eval_form,
    form_scale_under,
    golden_family,
    is_even,
    is_isometry,
    represents,
    signature,
    spectral_radius,
)
from .discgroup import DiscGroup, SnfResult, acts_as_minus_id, discriminant_group, induced_disc_action, snf
from .surface import (
    K3Model,
    SurfaceHodgeCase,
    blowup_extension,
    charpoly_constraint,
    dynamical_degree,
    holomorphic_lefschetz,
    ns_trace_required,
    topological_lefschetz,
)
from .certifier import Certificate, certify, certify_explicit, family_scan, fixed_point_count_power

__version__ = "0.1.0"

__all__ = [
    "ETA", "GoldenInt", "eta_pow", "fib",
    "GramForm", "LatticeMap", "charpoly", "entropy", "eval_form",
    "form_scale_under", "golden_family", "is_even", "is_isometry",
    "represents", "signature", "spectral_radius",
    "DiscGroup", "SnfResult", "acts_as_minus_id", "discriminant_group",
    "induced_disc_action", "snf",
    "K3Model", "SurfaceHodgeCase", "blowup_extension", "charpoly_constraint",
    "dynamical_degree", "holomorphic_lefschetz", "ns_trace_required",
    "topological_lefschetz",
    "Certificate", "certify", "certify_explicit", "family_scan",
    "fixed_point_count_power",
]
