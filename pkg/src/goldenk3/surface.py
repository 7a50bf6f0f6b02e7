"""Arithmetic models of surface automorphisms and their Lefschetz numbers.

A K3Model carries the Neron-Severi data (rank-2 Gram form plus isometry)
and a scalar +-1 action on the transcendental lattice; that is enough to
evaluate topological Lefschetz numbers and the dynamical degree exactly.
Holomorphic Lefschetz numbers are handled per minimal-model case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .lattice import (
    GramForm,
    LatticeMap,
    is_isometry,
    spectral_radius,
    spectral_radius_from_charpoly,
)

K3_B2 = 22  # second Betti number of a K3 surface

RATIONAL_OR_ENRIQUES = "rational-or-enriques"
TORUS = "torus"
K3 = "k3"

_UNIT_CIRCLE_TOL = 1e-12


def trace_power(M: LatticeMap, k: int) -> int:
    """tr(M^k) by exact matrix power, cross-checked by Cayley-Hamilton.

    tr(M^{j+1}) = tr(M) tr(M^j) - det(M) tr(M^{j-1}); the two exact paths
    must agree, anything else is an implementation bug.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    direct = (M ** k).trace
    t_prev, t_cur = 2, M.trace  # tr(M^0), tr(M^1)
    if k == 0:
        rec = 2
    elif k == 1:
        rec = t_cur
    else:
        tr, det = M.trace, M.det
        for _ in range(k - 1):
            t_prev, t_cur = t_cur, tr * t_cur - det * t_prev
        rec = t_cur
    if rec != direct:
        raise RuntimeError(f"trace recurrence disagreed with matrix power at k={k}")
    return direct


@dataclass(frozen=True)
class K3Model:
    """(S, g) in arithmetic form: NS lattice action plus scalar on T(S)."""

    ns_gram: GramForm
    ns_action: LatticeMap
    eps: int  # scalar action on the transcendental lattice, +1 or -1
    rho: int = 2  # Picard number; rank T(S) = 22 - rho
    omega_scalar: complex = field(default=None)  # action on the 2-form

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if not 1 <= self.rho <= 20:
            raise ValueError("rho must be between 1 and 20")
        if not is_isometry(self.ns_gram, self.ns_action):
            raise ValueError("ns_action is not an isometry of ns_gram")
        if self.omega_scalar is None:
            object.__setattr__(self, "omega_scalar", complex(self.eps))
        elif complex(self.omega_scalar) != complex(self.eps):
            # eps = -1 forces g*omega = -omega and vice versa in this family
            raise ValueError("omega_scalar must equal eps for this model family")

    @property
    def transcendental_rank(self) -> int:
        return K3_B2 - self.rho


def topological_lefschetz(model: K3Model, k: int = 1) -> int:
    """Alternating trace sum of g^k on H*(S, Z) for a K3: b1 = b3 = 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    eps_k = model.eps if k % 2 else 1
    return 2 + trace_power(model.ns_action, k) + eps_k * model.transcendental_rank


def dynamical_degree(model: K3Model) -> float:
    """Largest |eigenvalue| on H^2; the transcendental block contributes 1."""
    return max(spectral_radius(model.ns_action), 1.0)


def model_entropy(model: K3Model) -> float:
    return math.log(dynamical_degree(model))


@dataclass(frozen=True)
class SurfaceHodgeCase:
    """Minimal-model case data for the holomorphic Lefschetz number."""

    kind: str  # RATIONAL_OR_ENRIQUES, TORUS or K3
    alpha: Optional[complex] = None  # torus: eigenvalue on 1-forms; K3: on the 2-form
    beta: Optional[complex] = None  # torus only

    def __post_init__(self):
        if self.kind not in (RATIONAL_OR_ENRIQUES, TORUS, K3):
            raise ValueError(f"unknown case {self.kind!r}")
        need = {RATIONAL_OR_ENRIQUES: (), TORUS: ("alpha", "beta"), K3: ("alpha",)}
        for name in need[self.kind]:
            v = getattr(self, name)
            if v is None:
                raise ValueError(f"{self.kind} case needs {name}")
            if abs(abs(complex(v)) - 1.0) > _UNIT_CIRCLE_TOL:
                raise ValueError(f"{name} must lie on the unit circle")


def holomorphic_lefschetz(case: SurfaceHodgeCase) -> complex:
    """Alternating trace on H*(O_S) per minimal-model case."""
    if case.kind == RATIONAL_OR_ENRIQUES:
        return complex(1)
    if case.kind == TORUS:
        a = complex(case.alpha).conjugate()
        b = complex(case.beta).conjugate()
        return (1 - a) * (1 - b)
    return 1 + 1 / complex(case.alpha)


def ns_trace_required(rho: int, eps: int) -> int:
    """Trace forced on the NS action by a vanishing topological Lefschetz number."""
    if not 1 <= rho <= 20:
        raise ValueError("rho must be between 1 and 20")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return -2 - eps * (K3_B2 - rho)


@dataclass(frozen=True)
class CharpolyCandidate:
    trace: int
    det: int  # +1 or -1
    spectral_radius: float

    def __str__(self) -> str:
        sign = "+" if self.det > 0 else "-"
        return f"t^2 - {self.trace}t {sign} {abs(self.det)}"


def charpoly_constraint(trace: int) -> list[CharpolyCandidate]:
    """The two GL_2(Z) characteristic polynomials t^2 - trace*t +- 1."""
    return [
        CharpolyCandidate(trace, det, spectral_radius_from_charpoly(trace, det))
        for det in (1, -1)
    ]


def _perm_fixed_points(perm: tuple[int, ...], k: int) -> int:
    n = len(perm)
    count = 0
    for i in range(n):
        j = i
        for _ in range(k):
            j = perm[j]
        if j == i:
            count += 1
    return count


@dataclass(frozen=True)
class BlowupExtension:
    """Action on the blow-up: NS block plus a permutation of exceptional classes."""

    model: K3Model
    exc_perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.exc_perm) != list(range(len(self.exc_perm))):
            raise ValueError("exc_perm must be a permutation of 0..m-1")

    def dynamical_degree(self) -> float:
        # the permutation block is orthogonal, spectral radius 1
        return max(dynamical_degree(self.model), 1.0)

    def lefschetz(self, k: int = 1) -> int:
        return topological_lefschetz(self.model, k) + _perm_fixed_points(self.exc_perm, k)


def blowup_extension(model: K3Model, exc_perm) -> BlowupExtension:
    return BlowupExtension(model, tuple(exc_perm))
