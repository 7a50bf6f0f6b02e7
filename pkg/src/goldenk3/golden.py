"""Exact arithmetic in Z[eta], eta = (1 + sqrt(5))/2 the golden number.

An element a + b*eta is stored as the integer pair (a, b); all ring
operations reduce by eta^2 = eta + 1 and stay exact (Python ints are
arbitrary precision). eta is the fundamental unit, with inverse eta - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .lattice import LatticeMap

_PHI = (1.0 + math.sqrt(5.0)) / 2.0
_PHI_CONJ = (1.0 - math.sqrt(5.0)) / 2.0


@dataclass(frozen=True)
class GoldenInt:
    a: int  # coefficient of 1
    b: int  # coefficient of eta

    def __add__(self, other: "GoldenInt") -> "GoldenInt":
        return GoldenInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "GoldenInt") -> "GoldenInt":
        return GoldenInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "GoldenInt":
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        return GoldenInt(
            self.a * other.a + self.b * other.b,
            self.a * other.b + other.a * self.b + self.b * other.b,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GoldenInt":
        if n < 0:
            raise ValueError("negative powers only defined for units; use eta_pow")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GoldenInt":
        """Galois conjugate: eta maps to 1 - eta = -1/eta."""
        return GoldenInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        """x * conj(x) = a^2 + ab - b^2; multiplicative."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def mult_matrix(self) -> LatticeMap:
        """Matrix of multiplication by self on the basis (1, eta).

        Columns are images: 1 -> a + b*eta, eta -> b + (a+b)*eta.
        """
        return LatticeMap(self.a, self.b, self.b, self.a + self.b)

    def embed(self) -> tuple[float, float]:
        """The two real Galois embeddings a + b*(1 +- sqrt 5)/2.

        IEEE-754 doubles; relative error is a few ulps (~1e-15) for
        coefficients within double range.
        """
        return (self.a + self.b * _PHI, self.a + self.b * _PHI_CONJ)

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"


ZERO = GoldenInt(0, 0)
ONE = GoldenInt(1, 0)
ETA = GoldenInt(0, 1)
ETA_INV = GoldenInt(-1, 1)  # eta^-1 = eta - 1


def fib(n: int) -> int:
    """Fibonacci numbers a_0 = 0, a_1 = 1, a_{n+2} = a_{n+1} + a_n."""
    if n < 0:
        raise ValueError("fib is defined for n >= 0")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def eta_pow(n: int) -> GoldenInt:
    """eta^n exactly, any integer n; eta^n = fib(n)*eta + fib(n-1) for n >= 1."""
    if n == 0:
        return ONE
    if n > 0:
        return GoldenInt(fib(n - 1), fib(n))
    return ETA_INV ** (-n)
