"""Integers of the imaginary quadratic field of discriminant -7.

Elements are (u + v*sqrt(-7))/2 with u = v (mod 2), stored as the pair
(u, v).  The field has class number one and units +-1, so ideals are
principal and each nonzero ideal has exactly two generators, alpha and
-alpha.  The rational prime 2 splits; its chosen prime factor is
PI_TWO = (1 + sqrt(-7))/2.
"""

import math
from dataclasses import dataclass


class SplittingError(ArithmeticError):
    """Splitting data requested for a prime that does not split."""


@dataclass(frozen=True)
class QuadInt:
    u: int
    v: int

    def __post_init__(self):
        if (self.u - self.v) % 2 != 0:
            raise ValueError(f"({self.u} + {self.v}*sqrt(-7))/2 is not integral")

    @classmethod
    def from_int(cls, a):
        return cls(2 * a, 0)

    def __add__(self, other):
        return QuadInt(self.u + other.u, self.v + other.v)

    def __sub__(self, other):
        return QuadInt(self.u - other.u, self.v - other.v)

    def __neg__(self):
        return QuadInt(-self.u, -self.v)

    def __mul__(self, other):
        # ((u1 + v1 r)/2)((u2 + v2 r)/2) with r^2 = -7; both halves are even
        # because u = v (mod 2) on each factor.
        u = (self.u * other.u - 7 * self.v * other.v) // 2
        v = (self.u * other.v + other.u * self.v) // 2
        return QuadInt(u, v)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers leave the ring")
        out = QuadInt.from_int(1)
        for _ in range(e):
            out = out * self
        return out

    def conjugate(self):
        return QuadInt(self.u, -self.v)

    def norm(self):
        return (self.u * self.u + 7 * self.v * self.v) // 4

    def rational_part(self):
        """The element as a plain integer, if it is one."""
        if self.v != 0 or self.u % 2 != 0:
            raise ValueError(f"{self} is not a rational integer")
        return self.u // 2

    def __str__(self):
        return f"({self.u} + {self.v}*sqrt(-7))/2"


PI_TWO = QuadInt(1, 1)


@dataclass(frozen=True)
class SplitRep:
    """The unique x, y > 0 with p = x^2 + 7*y^2 for an odd split prime p."""

    p: int
    x: int
    y: int


def split_rep(p):
    """Positive representation p = x^2 + 7 y^2 of an odd split prime.

    Bounded search over y <= sqrt(p/7); raises SplittingError when no
    representation exists (p inert or ramified, or p = 2, whose prime
    factor PI_TWO is a half-integer pair and has no such representation).
    """
    if p == 2 or p == 7:
        raise SplittingError(f"p={p} has no x^2 + 7y^2 representation")
    for y in range(1, math.isqrt(p // 7) + 1):
        rem = p - 7 * y * y
        x = math.isqrt(rem)
        if x * x == rem and x > 0:
            return SplitRep(p, x, y)
    raise SplittingError(f"p={p} is not x^2 + 7y^2; it does not split")


def pi_element(p):
    """A prime of the ring above the split rational prime p."""
    if p == 2:
        return PI_TWO
    r = split_rep(p)
    return QuadInt(2 * r.x, 2 * r.y)


def hecke_weight(alpha):
    """alpha**2: the character-times-norm weight of the ideal (alpha).

    Unit-independent since (-alpha)**2 = alpha**2, so this is well defined
    on ideals.
    """
    return alpha * alpha


def ideals_of_norm(n):
    """One generator per ideal of norm n, canonically chosen and sorted.

    Solutions of u^2 + 7 v^2 = 4n with u = v (mod 2), one per unit orbit
    {alpha, -alpha}: the representative has v > 0, or v = 0 and u > 0.
    Sorted by (v, u).
    """
    if n < 1:
        raise ValueError("norm must be >= 1")
    out = []
    m = 4 * n
    for v in range(0, math.isqrt(m // 7) + 1):
        rem = m - 7 * v * v
        u = math.isqrt(rem)
        if u * u != rem or (u - v) % 2 != 0:
            continue
        if v == 0:
            if u > 0:
                out.append(QuadInt(u, 0))
        elif u == 0:
            out.append(QuadInt(0, v))
        else:
            out.append(QuadInt(-u, v))
            out.append(QuadInt(u, v))
    out.sort(key=lambda a: (a.v, a.u))
    return out


def ideal_count_table(n_max):
    """Number of ideals of each norm <= n_max, by the Euler product of the
    Dedekind zeta function: split p contributes k+1 at p^k, inert q
    contributes 1 at even powers only, the ramified 7 contributes 1."""
    from .arith import epsilon, sieve_multiplicative

    def rule(p, k):
        if p == 7:
            return 1
        if epsilon(p) == 1:
            return k + 1
        return 1 if k % 2 == 0 else 0

    return sieve_multiplicative(rule, n_max)


@dataclass(frozen=True)
class EulerFactor:
    """Local factor 1 + c1*X + c2*X^2 of the shifted Hecke series at a
    split prime."""

    p: int
    c1: int
    c2: int


def split_trace(p):
    """pi_p^2 + conj(pi_p)^2 as a rational integer: -3 at p = 2, else
    2*(x^2 - 7*y^2)."""
    sq = hecke_weight(pi_element(p))
    return (sq + sq.conjugate()).rational_part()


def split_euler_factor(p):
    """(1 - pi^2 X)(1 - conj(pi)^2 X) = 1 + c1 X + c2 X^2 at a split p."""
    return EulerFactor(p, -split_trace(p), p * p)
