"""Discriminant groups N*/N of rank-2 forms, via Smith normal form.

Generator coordinates live in N (x) Q as exact Fractions; membership in
N is tested by exact integrality, never by floating comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .lattice import GramForm, LatticeMap, family_parameter, form_scale_under


@dataclass(frozen=True)
class SnfResult:
    """U * G * V = diag(d) with U, V unimodular and d[0] | d[1], d >= 0."""

    U: LatticeMap
    d: tuple[int, int]
    V: LatticeMap


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, dst, src, f):
    m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]


def _add_col(m, dst, src, f):
    for row in m:
        row[dst] += f * row[src]


def _scale_row(m, i, s):
    m[i] = [s * x for x in m[i]]


def snf(G: GramForm) -> SnfResult:
    """Smith normal form of the Gram matrix with transformation witnesses.

    Pivot rule: smallest absolute value among nonzero entries, ties broken
    row-major, so the result is deterministic.
    """
    if G.det == 0:
        raise ValueError("Smith normal form of a degenerate form is not supported")
    A = [[G.p, G.q], [G.q, G.r]]
    U = [[1, 0], [0, 1]]
    V = [[1, 0], [0, 1]]
    while True:
        entries = [(abs(A[i][j]), i, j) for i in range(2) for j in range(2) if A[i][j]]
        _, pi, pj = min(entries)
        if pi != 0:
            _swap_rows(A, 0, 1)
            _swap_rows(U, 0, 1)
        if pj != 0:
            _swap_cols(A, 0, 1)
            _swap_cols(V, 0, 1)
        p = A[0][0]
        if A[1][0] % p != 0:
            f = -(A[1][0] // p)
            _add_row(A, 1, 0, f)
            _add_row(U, 1, 0, f)
            continue
        if A[0][1] % p != 0:
            f = -(A[0][1] // p)
            _add_col(A, 1, 0, f)
            _add_col(V, 1, 0, f)
            continue
        f = -(A[1][0] // p)
        _add_row(A, 1, 0, f)
        _add_row(U, 1, 0, f)
        f = -(A[0][1] // p)
        _add_col(A, 1, 0, f)
        _add_col(V, 1, 0, f)
        if A[1][1] % A[0][0] != 0:
            _add_col(A, 0, 1, 1)
            _add_col(V, 0, 1, 1)
            continue
        break
    for i in range(2):
        if A[i][i] < 0:
            _scale_row(A, i, -1)
            _scale_row(U, i, -1)
    return SnfResult(
        U=LatticeMap(U[0][0], U[0][1], U[1][0], U[1][1]),
        d=(A[0][0], A[1][1]),
        V=LatticeMap(V[0][0], V[0][1], V[1][0], V[1][1]),
    )


@dataclass(frozen=True)
class DiscGroup:
    """N*/N with invariant factors > 1 and matching rational generators."""

    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[Fraction, Fraction], ...]
    order: int


def _is_integral(v) -> bool:
    return all(Fraction(x).denominator == 1 for x in v)


def _generator_order(g) -> int:
    d1 = Fraction(g[0]).denominator
    d2 = Fraction(g[1]).denominator
    return d1 * d2 // math.gcd(d1, d2)


def discriminant_group(G: GramForm) -> DiscGroup:
    """Invariant factors of N*/N, with explicit generators.

    For golden-family forms the generators are e2/q and (e1 - 2e2)/(5q);
    otherwise they are read off the SNF transformation (columns of V
    scaled by the invariant factors).
    """
    res = snf(G)
    order = abs(G.det)
    qfam = family_parameter(G)
    factors = []
    gens = []
    if qfam is not None:
        candidates = [
            (abs(qfam), (Fraction(0), Fraction(1, qfam))),
            (abs(5 * qfam), (Fraction(1, 5 * qfam), Fraction(-2, 5 * qfam))),
        ]
    else:
        cols = ((res.V.m11, res.V.m21), (res.V.m12, res.V.m22))
        candidates = [
            (d, (Fraction(c[0], d), Fraction(c[1], d)))
            for d, c in zip(res.d, cols)
        ]
    for d, g in candidates:
        if d > 1:
            if _generator_order(g) != d:
                raise RuntimeError(f"generator {g} does not have order {d}")
            factors.append(d)
            gens.append(g)
    snf_factors = sorted(d for d in res.d if d > 1)
    if sorted(factors) != snf_factors:
        raise RuntimeError("generator orders disagree with SNF invariant factors")
    return DiscGroup(tuple(factors), tuple(gens), order)


def _require_isometry(G: GramForm, M: LatticeMap):
    lam = form_scale_under(G, M)
    if lam != 1:
        raise ValueError(f"map is not an isometry of the form (scale = {lam})")


def induced_disc_action(G: GramForm, M: LatticeMap) -> tuple[tuple[int, ...], ...]:
    """Action of an isometry on the discriminant group generators.

    Row i gives the coefficients (mod the invariant factors) expressing
    M(g_i) in the generator basis.
    """
    _require_isometry(G, M)
    D = discriminant_group(G)
    rows = []
    for g in D.generators:
        img = M.apply(g)
        for coeffs in product(*(range(d) for d in D.invariant_factors)):
            diff = list(img)
            for c, h in zip(coeffs, D.generators):
                diff[0] -= c * h[0]
                diff[1] -= c * h[1]
            if _is_integral(diff):
                rows.append(coeffs)
                break
        else:
            raise RuntimeError("image of generator not in the generator span")
    return tuple(rows)


def acts_as_minus_id(G: GramForm, M: LatticeMap) -> bool:
    """True iff M(g) + g lies in N for every discriminant-group generator."""
    _require_isometry(G, M)
    D = discriminant_group(G)
    for g in D.generators:
        img = M.apply(g)
        if not _is_integral((img[0] + g[0], img[1] + g[1])):
            return False
    return True
