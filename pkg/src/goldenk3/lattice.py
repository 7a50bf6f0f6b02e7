"""Rank-2 integral symmetric bilinear forms and their isometries.

Everything here is exact integer arithmetic; floating point appears only
in spectral_radius / entropy, which are reporting-boundary values.

Matrices use the column-as-image convention throughout the package: the
first column of a LatticeMap is the image of e1, the second the image of
e2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

HYPERBOLIC = "hyperbolic"
POSITIVE_DEFINITE = "positive-definite"
NEGATIVE_DEFINITE = "negative-definite"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class LatticeMap:
    """2x2 integer matrix acting on the lattice basis (columns = images)."""

    m11: int
    m12: int
    m21: int
    m22: int

    @staticmethod
    def identity() -> "LatticeMap":
        return LatticeMap(1, 0, 0, 1)

    def rows(self):
        return ((self.m11, self.m12), (self.m21, self.m22))

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def trace(self) -> int:
        return self.m11 + self.m22

    def transpose(self) -> "LatticeMap":
        return LatticeMap(self.m11, self.m21, self.m12, self.m22)

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        return LatticeMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def inverse(self) -> "LatticeMap":
        d = self.det
        if d not in (1, -1):
            raise ValueError(f"not invertible over Z: det = {d}")
        return LatticeMap(self.m22 * d, -self.m12 * d, -self.m21 * d, self.m11 * d)

    def __pow__(self, n: int) -> "LatticeMap":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = LatticeMap.identity()
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def apply(self, v):
        """Image of the column vector v = (x, y); works on ints or Fractions."""
        x, y = v
        return (self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)

    def __neg__(self) -> "LatticeMap":
        return LatticeMap(-self.m11, -self.m12, -self.m21, -self.m22)


@dataclass(frozen=True)
class GramForm:
    """Symmetric Gram matrix [[p, q], [q, r]] of a rank-2 bilinear form."""

    p: int
    q: int
    r: int

    @property
    def det(self) -> int:
        return self.p * self.r - self.q * self.q

    def as_map(self) -> LatticeMap:
        return LatticeMap(self.p, self.q, self.q, self.r)

    def entries(self):
        return (self.p, self.q, self.r)


def golden_family(q: int) -> GramForm:
    """The even hyperbolic family [[2q, q], [q, -2q]], q a nonzero integer."""
    if q == 0:
        raise ValueError("golden family requires a nonzero parameter")
    return GramForm(2 * q, q, -2 * q)


def family_parameter(G: GramForm) -> Optional[int]:
    """Recover q if G = golden_family(q), else None."""
    q = G.q
    if q != 0 and G.p == 2 * q and G.r == -2 * q:
        return q
    return None


def is_even(G: GramForm) -> bool:
    return G.p % 2 == 0 and G.r % 2 == 0


def signature(G: GramForm) -> str:
    d = G.det
    if d < 0:
        return HYPERBOLIC
    if d == 0:
        return DEGENERATE
    return POSITIVE_DEFINITE if G.p > 0 else NEGATIVE_DEFINITE


def eval_form(G: GramForm, x, y) -> int:
    """x^T G y for column vectors x, y."""
    gx = G.as_map().apply(x)
    return y[0] * gx[0] + y[1] * gx[1]


def form_scale_under(G: GramForm, M: LatticeMap) -> Optional[int]:
    """Integer lambda with M^T G M = lambda * G, or None if no such integer."""
    S = M.transpose() @ G.as_map() @ M
    got = (S.m11, S.m12, S.m22)
    want = G.entries()
    lam = None
    for s, g in zip(got, want):
        if g == 0:
            continue
        if s % g != 0:
            return None
        cand = s // g
        if lam is None:
            lam = cand
        elif cand != lam:
            return None
    if lam is None:
        return None
    if all(s == lam * g for s, g in zip(got, want)):
        return lam
    return None


def is_isometry(G: GramForm, M: LatticeMap) -> bool:
    return form_scale_under(G, M) == 1


def charpoly(M: LatticeMap) -> tuple[int, int]:
    """Coefficients (trace, det) of t^2 - trace*t + det."""
    return (M.trace, M.det)


def spectral_radius_from_charpoly(tr: int, det: int) -> float:
    """Largest |eigenvalue| of a matrix with char poly t^2 - tr*t + det.

    Double-precision at the reporting boundary; the exact data is (tr, det).
    """
    disc = tr * tr - 4 * det
    if disc >= 0:
        s = math.sqrt(disc)
        return max(abs(tr + s), abs(tr - s)) / 2.0
    # complex-conjugate pair, |lambda|^2 = det
    return math.sqrt(det)


def spectral_radius(M: LatticeMap) -> float:
    return spectral_radius_from_charpoly(M.trace, M.det)


def entropy(M: LatticeMap) -> float:
    return math.log(spectral_radius(M))


def has_eigenvalue_one(M: LatticeMap) -> bool:
    # char poly evaluated at t = 1
    return 1 - M.trace + M.det == 0


def positive_entropy_exact(M: LatticeMap) -> bool:
    """Exact test for spectral radius > 1, assuming det(M) = +-1.

    For det = 1 the radius exceeds 1 iff |tr| > 2; for det = -1 the roots
    are real with product -1, so radius > 1 iff tr != 0. Both cases are
    |tr| > |1 + det|.
    """
    if M.det not in (1, -1):
        raise ValueError("exact entropy test requires det = +-1")
    return abs(M.trace) > abs(1 + M.det)


# --- representation of integers by the form -------------------------------

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Representation:
    """Outcome of asking whether b(x, x) = c has a nonzero solution."""

    status: str  # YES / NO / UNKNOWN
    witness: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.status == YES


def _witness_key(sol):
    a, b = sol
    return (abs(a), abs(b), a < 0, b < 0)


def norm_form_solutions(m: int, bmax: int):
    """All (a, b) with a^2 + ab - b^2 = m, (a, b) != 0, |b| <= bmax."""
    out = []
    for b in range(-bmax, bmax + 1):
        disc = 5 * b * b + 4 * m
        if disc < 0:
            continue
        s = math.isqrt(disc)
        if s * s != disc:
            continue
        for root in {s, -s}:
            if (root - b) % 2 == 0:
                a = (root - b) // 2
                if (a, b) != (0, 0):
                    out.append((a, b))
    return out


def norm_form_represents(m: int) -> Optional[tuple[int, int]]:
    """Decide a^2 + ab - b^2 = m over nonzero integer pairs.

    Any solution can be pushed into a fundamental domain of the unit
    group action (multiplication by powers of the fundamental unit of
    norm +1), where |b| <= phi * sqrt(|m|); isqrt(3|m|) + 2 covers that.
    Returns the witness minimal under (|a|, |b|, sign) ordering, or None.
    """
    if m == 0:
        return None  # the form is anisotropic: disc 5 is not a square
    bound = math.isqrt(3 * abs(m)) + 2
    sols = norm_form_solutions(m, bound)
    if not sols:
        return None
    # widen once so the reported witness is minimal under the tie rule,
    # not just the first found in the decision bound
    sols = norm_form_solutions(m, 2 * bound + 4)
    return min(sols, key=_witness_key)


def represents(G: GramForm, c: int, search_radius: int = 100) -> Representation:
    """Does G represent c by a nonzero vector?

    Golden-family forms get an exact decision through the norm equation
    (b(x,x) = 2q * (a^2 + ab - b^2)). Other forms get a bounded search:
    a found witness is a proof, exhaustion is only UNKNOWN.
    """
    qfam = family_parameter(G)
    if qfam is not None:
        if c == 0:
            return Representation(NO)
        if c % (2 * qfam) != 0:
            return Representation(NO)
        w = norm_form_represents(c // (2 * qfam))
        if w is None:
            return Representation(NO)
        return Representation(YES, w)
    best = None
    for a in range(-search_radius, search_radius + 1):
        for b in range(-search_radius, search_radius + 1):
            if (a, b) == (0, 0):
                continue
            if eval_form(G, (a, b), (a, b)) == c:
                if best is None or _witness_key((a, b)) < _witness_key(best):
                    best = (a, b)
    if best is not None:
        return Representation(YES, best)
    return Representation(UNKNOWN)
