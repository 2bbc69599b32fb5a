"""Characteristic-class calculus over a Grassmann Chow ring.

A bundle is represented by its :class:`ChernVector` (rank plus the graded
pieces of the total Chern class).  Internally, Chern character and Todd
class computations run through power sums of the Chern roots
(:class:`PowerSumVector`): both are polynomial in power sums with universal
rational coefficients, which avoids transcribing degree-six universal Todd
polynomials by hand.  The Todd series coefficients are derived at first use
by exact truncated power-series arithmetic, never hard-coded.

Twisting by a rational multiple of the hyperplane class is supported; the
resulting "Chern classes" need not be integral, which is exactly what the
positivity filters downstream require.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import NamedTuple

from .chow import ChowClass, GrassmannRing, Scalar


class RankTwoData(NamedTuple):
    """Chern coordinates (e, a, b) of a rank-two bundle on a ring of lines:
    c1 = e*s(1) and c2 = a*s(2) + b*s(1,1)."""

    e: Scalar
    a: Scalar
    b: Scalar

    def twisted(self, t: Scalar) -> RankTwoData:
        """Coordinates after tensoring with t times the ample generator."""
        shift = t * self.e + t * t
        return RankTwoData(self.e + 2 * t, self.a + shift, self.b + shift)

    def normalized(self) -> RankTwoData:
        """The twist-equivalent representative with e in {0, -1}."""
        return self.twisted(-((self.e + 1) // 2))


class ChernVector:
    """Rank plus total Chern class of a bundle, one class per degree."""

    __slots__ = ("ring", "rank", "c")

    def __init__(self, ring: GrassmannRing, rank: int, components: dict[int, ChowClass] | None = None):
        dim = ring.dimension
        c = [ring.zero()] * (dim + 1)
        c[0] = ring.one()
        for d, cls in (components or {}).items():
            if d < 1 or not isinstance(d, int):
                raise ValueError(f"component degrees must be positive integers, got {d}")
            if d > dim:
                continue  # classes above the ring dimension vanish
            if not cls.is_homogeneous(d):
                raise ValueError(f"component {cls!r} is not homogeneous of degree {d}")
            c[d] = cls
        self.ring = ring
        self.rank = rank
        self.c = tuple(c)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChernVector)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.ring, self.rank, self.c))

    def __repr__(self) -> str:
        parts = [f"c{d}={cls!r}" for d, cls in enumerate(self.c) if d and cls]
        return f"ChernVector(rank={self.rank}, {', '.join(parts) if parts else 'trivial'})"

    def total(self) -> ChowClass:
        """The total Chern class 1 + c1 + c2 + ..."""
        acc = self.ring.zero()
        for cls in self.c:
            acc = acc + cls
        return acc

    def power_sums(self) -> PowerSumVector:
        """Power sums of the Chern roots via Newton's identities:
        p_m = c1*p_{m-1} - c2*p_{m-2} + ... + (-1)^{m-1} m*c_m."""
        dim = self.ring.dimension
        p = [self.ring.zero()] * (dim + 1)
        for m in range(1, dim + 1):
            acc = ((-1) ** (m - 1) * m) * self.c[m]
            for i in range(1, m):
                acc = acc + ((-1) ** (i - 1)) * (self.c[i] * p[m - i])
            p[m] = acc
        return PowerSumVector(self.ring, self.rank, tuple(p))

    def ch(self) -> ChowClass:
        """Chern character: rank + sum of p_m / m!."""
        return self.power_sums().ch()

    def todd(self) -> ChowClass:
        """Todd class: exp of the power sums weighted by the series
        log(x / (1 - exp(-x)))."""
        coeffs = todd_log_coefficients(self.ring.dimension)
        ps = self.power_sums()
        acc = self.ring.zero()
        for m in range(1, self.ring.dimension + 1):
            if coeffs[m - 1]:
                acc = acc + coeffs[m - 1] * ps.p[m]
        return exp_nilpotent(acc)

    def twist(self, t: Scalar) -> ChernVector:
        """Chern data of the tensor with t times the hyperplane bundle."""
        return self.power_sums().twisted(t).to_chern()

    def dual(self) -> ChernVector:
        """Negate the Chern roots: c_d picks up the sign (-1)^d."""
        comps = {d: ((-1) ** d) * self.c[d] for d in range(1, self.ring.dimension + 1)}
        return ChernVector(self.ring, self.rank, comps)

    def direct_sum(self, other: ChernVector) -> ChernVector:
        """Whitney sum: total Chern classes multiply, ranks add."""
        if self.ring != other.ring:
            raise ValueError("direct sum needs bundles over the same ring")
        total = self.total() * other.total()
        comps = {d: total.graded(d) for d in range(1, self.ring.dimension + 1)}
        return ChernVector(self.ring, self.rank + other.rank, comps)

    def tensor_ch(self, other: ChernVector) -> ChowClass:
        """Chern character of the tensor product."""
        if self.ring != other.ring:
            raise ValueError("tensor needs bundles over the same ring")
        return self.ch() * other.ch()


class PowerSumVector:
    """Power sums p_m of the Chern roots; p_0 is the rank."""

    __slots__ = ("ring", "rank", "p")

    def __init__(self, ring: GrassmannRing, rank: int, p: tuple[ChowClass, ...]):
        self.ring = ring
        self.rank = rank
        self.p = p  # p[m] homogeneous of degree m; index 0 is an unused zero slot

    def to_chern(self) -> ChernVector:
        """Invert Newton's identities: m*c_m = sum (-1)^{i-1} p_i c_{m-i}."""
        dim = self.ring.dimension
        c = [self.ring.zero()] * (dim + 1)
        c[0] = self.ring.one()
        for m in range(1, dim + 1):
            acc = self.ring.zero()
            for i in range(1, m + 1):
                acc = acc + ((-1) ** (i - 1)) * (self.p[i] * c[m - i])
            c[m] = acc / m
        return ChernVector(self.ring, self.rank, {d: c[d] for d in range(1, dim + 1)})

    def ch(self) -> ChowClass:
        acc = Fraction(self.rank) * self.ring.one()
        for m in range(1, self.ring.dimension + 1):
            acc = acc + self.p[m] / factorial(m)
        return acc

    def twisted(self, t: Scalar) -> PowerSumVector:
        """Shift every Chern root by t*h: p_m becomes
        sum_j C(m, j) t^j h^j p_{m-j} with p_0 the rank."""
        t = Fraction(t)
        ring = self.ring
        dim = ring.dimension
        h = _hyperplane_powers(ring)
        out = [ring.zero()] * (dim + 1)
        for m in range(1, dim + 1):
            acc = (Fraction(self.rank) * t**m) * h[m]
            for j in range(m):
                if t == 0 and j > 0:
                    break
                acc = acc + (comb(m, j) * t**j) * (h[j] * self.p[m - j])
            out[m] = acc
        return PowerSumVector(ring, self.rank, tuple(out))


@lru_cache(maxsize=None)
def _hyperplane_powers(ring: GrassmannRing) -> tuple[ChowClass, ...]:
    powers = [ring.one()]
    for _ in range(ring.dimension):
        powers.append(powers[-1] * ring.hyperplane())
    return tuple(powers)


@lru_cache(maxsize=None)
def todd_log_coefficients(n: int) -> tuple[Fraction, ...]:
    """Coefficients a_1..a_n of log(x / (1 - exp(-x))), computed by exact
    truncated series arithmetic: the log of q(x) = (1 - exp(-x))/x is built
    from the recurrence m*l_m = m*q_m - sum_{j<m} j*l_j*q_{m-j}, then negated."""
    q = [Fraction((-1) ** i, factorial(i + 1)) for i in range(n + 1)]
    log_q = [Fraction(0)] * (n + 1)
    for m in range(1, n + 1):
        acc = m * q[m]
        for j in range(1, m):
            acc -= j * log_q[j] * q[m - j]
        log_q[m] = acc / m
    return tuple(-c for c in log_q[1:])


def exp_nilpotent(x: ChowClass) -> ChowClass:
    """exp of a class with no degree-zero part (a finite sum in a truncated ring)."""
    if x.coefficient(()):
        raise ValueError("exp needs a class with vanishing degree-zero part")
    ring = x.ring
    acc = ring.one()
    power = ring.one()
    for j in range(1, ring.dimension + 1):
        power = power * x
        if not power:
            break
        acc = acc + power / factorial(j)
    return acc


def line_bundle(ring: GrassmannRing, t: Scalar) -> ChernVector:
    """The Chern vector of O(t): first Chern class t times the hyperplane."""
    return ChernVector(ring, 1, {1: Fraction(t) * ring.hyperplane()})


def rank_two_chern(ring: GrassmannRing, data: RankTwoData) -> ChernVector:
    """Rank-two Chern vector with c1 = e*s(1) and c2 = a*s(2) + b*s(1,1)."""
    e, a, b = data
    c2 = ring.zero()
    if a:
        c2 = c2 + Fraction(a) * ring.sigma((2,))
    if b:
        c2 = c2 + Fraction(b) * ring.sigma((1, 1))
    return ChernVector(ring, 2, {1: Fraction(e) * ring.hyperplane(), 2: c2})


def chern_from_character(ring: GrassmannRing, rank: int, character: ChowClass) -> ChernVector:
    """Recover a Chern vector from its Chern character: p_m = m! * ch_m."""
    dim = ring.dimension
    p = [ring.zero()] * (dim + 1)
    for m in range(1, dim + 1):
        p[m] = factorial(m) * character.graded(m)
    return PowerSumVector(ring, rank, tuple(p)).to_chern()


@lru_cache(maxsize=None)
def tangent_bundle(ring: GrassmannRing) -> ChernVector:
    """Tangent bundle of G(k, n), recovered from ch(T) = ch(S-dual) * ch(Q).

    The dual tautological subbundle has c_i = sigma_(1^i); the tautological
    quotient has c_i = sigma_(i)."""
    sub_rank, quot_rank = ring.k + 1, ring.n - ring.k
    sub_dual = ChernVector(
        ring, sub_rank, {d: ring.sigma((1,) * d) for d in range(1, sub_rank + 1)}
    )
    quotient = ChernVector(
        ring, quot_rank, {d: ring.sigma((d,)) for d in range(1, quot_rank + 1)}
    )
    return chern_from_character(ring, sub_rank * quot_rank, sub_dual.tensor_ch(quotient))


def tautological_subbundle(ring: GrassmannRing) -> ChernVector:
    """The rank k+1 tautological subbundle, as the dual of S-dual."""
    sub_rank = ring.k + 1
    sub_dual = ChernVector(
        ring, sub_rank, {d: ring.sigma((1,) * d) for d in range(1, sub_rank + 1)}
    )
    return sub_dual.dual()


def tautological_quotient(ring: GrassmannRing) -> ChernVector:
    """The rank n-k tautological quotient bundle, c_i = sigma_(i)."""
    quot_rank = ring.n - ring.k
    return ChernVector(ring, quot_rank, {d: ring.sigma((d,)) for d in range(1, quot_rank + 1)})
