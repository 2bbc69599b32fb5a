"""Hirzebruch-Riemann-Roch on Grassmannians.

The Euler characteristic of a bundle is the exact rational
``integral(ch(E) * td(T))``; it is an integer whenever the Chern data comes
from an actual bundle, and the value is returned unreduced as a Fraction so
integrality filters can see a failure.  ``euler_polynomial`` packages
chi(E(k)) as a polynomial in the twist k, produced by exact forward-
difference interpolation of direct evaluations.  Everything is stateless
given the immutable ring inputs; evaluations at distinct twists commute.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .charclass import ChernVector, RankTwoData, exp_nilpotent, rank_two_chern, tangent_bundle
from .chow import ChowClass, GrassmannRing, Scalar


@lru_cache(maxsize=None)
def tangent_todd(ring: GrassmannRing) -> ChowClass:
    return tangent_bundle(ring).todd()


@lru_cache(maxsize=None)
def _twist_kernels(ring: GrassmannRing) -> tuple[ChowClass, ...]:
    # exp(k*h) * td(T) for k = 0..dim: twisting by O(k) multiplies the Chern
    # character by exp(k*h), so chi(E(k)) is one pairing against these.
    td = tangent_todd(ring)
    h = ring.hyperplane()
    return tuple(
        exp_nilpotent(Fraction(k) * h) * td for k in range(ring.dimension + 1)
    )


def euler_characteristic(v: ChernVector) -> Fraction:
    """chi(E) = integral of ch(E) * td(T)."""
    return (v.ch() * tangent_todd(v.ring)).integrate()


@dataclass(frozen=True)
class EulerPolynomial:
    """chi(E(k)) as a polynomial in the integer twist k, low coefficients first."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, k: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * k + c
        return acc

    def is_integer_valued(self) -> bool:
        """Integrality at degree+1 consecutive integers, which (by the
        binomial-basis theorem for integer-valued polynomials) settles
        integrality at every integer."""
        return all(self(k).denominator == 1 for k in range(self.degree + 1))


def euler_polynomial(v: ChernVector) -> EulerPolynomial:
    """Interpolate chi of the twists of ``v`` at k = 0..dimension."""
    character = v.ch()
    values = [(character * kernel).integrate() for kernel in _twist_kernels(v.ring)]
    return EulerPolynomial(_interpolate(values))


def _interpolate(values: list[Fraction]) -> tuple[Fraction, ...]:
    """Monomial coefficients of the polynomial through (i, values[i])."""
    n = len(values)
    deltas = []
    layer = [Fraction(v) for v in values]
    for _ in range(n):
        deltas.append(layer[0])
        layer = [layer[i + 1] - layer[i] for i in range(len(layer) - 1)]
    coeffs = [Fraction(0)] * n
    falling = [Fraction(1)]  # coefficients of x(x-1)...(x-j+1)
    for j, delta in enumerate(deltas):
        scale = delta / factorial(j)
        for i, fc in enumerate(falling):
            coeffs[i] += scale * fc
        falling = [Fraction(0)] + falling
        for i in range(len(falling) - 1):
            falling[i] -= j * falling[i + 1]
    return tuple(coeffs)


PROJECTIVE_3_SPACE = GrassmannRing(0, 3)


def chi_p3(c1: int, c2: int, t: int) -> Fraction:
    """chi on P^3 of rank-two Chern data (c1, c2) twisted by t, i.e. of the
    data (c1 + 2t, c2 + t*c1 + t^2)."""
    v = rank_two_chern(PROJECTIVE_3_SPACE, RankTwoData(c1, c2, 0))
    return euler_characteristic(v.twist(t))
