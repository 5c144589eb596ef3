"""Dirichlet coefficients of the decomposition
(a(n) - b(n))/8 = c(n), where c(n) are the Fourier coefficients of
eta(7*tau)^7/eta(tau).

a(n) is the coefficient of the product of the character series (character
mod 7) with the twice-shifted zeta function; b(n) is the coefficient of the
once-shifted Hecke series of the field of discriminant -7.  Both are
multiplicative; each has an independent brute-force oracle (divisor sum for
a, ideal enumeration for b) and b additionally has a truncated Euler-product
route.  All arithmetic is in exact ints.
"""

from functools import lru_cache

from . import etaprod
from .arith import divisors, epsilon, factorize, primes_up_to, sieve_multiplicative
from .quadfield import hecke_weight, ideals_of_norm, split_euler_factor, split_trace


class IdentityViolation(ArithmeticError):
    """8 does not divide a(n) - b(n): the decomposition identity failed."""

    def __init__(self, n, a, b):
        super().__init__(f"a({n}) - b({n}) = {a - b} is not divisible by 8")
        self.n = n
        self.a = a
        self.b = b


class InconsistencyError(ArithmeticError):
    """An internal invariant of the splitting data failed."""


_KINDS = ("A", "B", "C")


class CoeffTable:
    """Coefficient table values[1..n_max]; values[0] is unused and 0.

    kind "A" and "B" tables are multiplicative with values[1] = 1;
    kind "C" (the eta-quotient coefficients) has values[1] = 0.
    """

    __slots__ = ("kind", "n_max", "values")

    def __init__(self, kind, n_max, values):
        if kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}")
        if n_max < 1 or len(values) != n_max + 1 or values[0] != 0:
            raise ValueError("values must be [0] followed by entries for 1..n_max")
        want = 0 if kind == "C" else 1
        if values[1] != want:
            raise ValueError(f"kind {kind} requires values[1] == {want}")
        self.kind = kind
        self.n_max = n_max
        self.values = list(values)

    def __getitem__(self, n):
        if not 1 <= n <= self.n_max:
            raise IndexError(f"n={n} outside 1..{self.n_max}")
        return self.values[n]

    def __eq__(self, other):
        return (
            isinstance(other, CoeffTable)
            and (self.kind, self.n_max, self.values)
            == (other.kind, other.n_max, other.values)
        )

    def __repr__(self):
        return f"CoeffTable(kind={self.kind!r}, n_max={self.n_max})"


# ---------------------------------------------------------------------------
# a(n): character series times twice-shifted zeta

def a_prime_power(p, k):
    if p == 7:
        return 7 ** (2 * k)
    e = epsilon(p)
    if e == 1:
        num = p ** (2 * (k + 1)) - 1
        den = p * p - 1
    else:
        num = p ** (2 * (k + 1)) - (-1) ** (k + 1)
        den = p * p + 1
    q, r = divmod(num, den)
    if r:
        raise InconsistencyError(f"a({p}^{k}) closed form is not integral")
    return q


def a_coeff(n):
    out = 1
    for p, k in factorize(n):
        out *= a_prime_power(p, k)
    return out


def a_table(n_max):
    return CoeffTable("A", n_max, sieve_multiplicative(a_prime_power, n_max))


def a_oracle(n):
    """Divisor-sum route: sum of epsilon(d) * (n/d)^2 over d | n."""
    return sum(epsilon(d) * (n // d) ** 2 for d in divisors(n))


def a_oracle_table(n_max):
    """Same divisor sum, assembled as a Dirichlet convolution over the
    whole range; never factorizes anything."""
    table = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        e = epsilon(d)
        if e:
            for m in range(1, n_max // d + 1):
                table[d * m] += e * m * m
    return CoeffTable("A", n_max, table)


# ---------------------------------------------------------------------------
# b(n): once-shifted Hecke series

_trace = lru_cache(maxsize=None)(split_trace)


def _split_power_sum(p, k):
    """s_k = sum_t pi^(2t) conj(pi)^(2(k-t)) via the integer recurrence
    s_k = T s_(k-1) - p^2 s_(k-2), T = pi^2 + conj(pi)^2."""
    t = _trace(p)
    s_prev, s = 1, t
    if k == 0:
        return 1
    for _ in range(k - 1):
        s_prev, s = s, t * s - p * p * s_prev
    return s


def b_prime_power(p, k):
    if p == 7:
        return (-7) ** k
    if epsilon(p) == 1:
        return _split_power_sum(p, k)
    return p ** k if k % 2 == 0 else 0


def b_coeff(n):
    out = 1
    for p, k in factorize(n):
        out *= b_prime_power(p, k)
        if out == 0:
            return 0
    return out


def b_table(n_max):
    return CoeffTable("B", n_max, sieve_multiplicative(b_prime_power, n_max))


def b_oracle(n):
    """Ideal-enumeration route: sum of alpha^2 over one generator per ideal
    of norm n.  The imaginary parts must cancel exactly."""
    total_u = 0
    total_v = 0
    for alpha in ideals_of_norm(n):
        sq = hecke_weight(alpha)
        total_u += sq.u
        total_v += sq.v
    if total_v != 0:
        raise InconsistencyError(
            f"ideal weights of norm {n} leave imaginary residue {total_v}/2"
        )
    if total_u % 2:
        raise InconsistencyError(f"ideal weight sum of norm {n} is half-integral")
    return total_u // 2


def euler_truncate(n_max, prime_bound=None):
    """Kind-B table from the truncated Euler product of the shifted Hecke
    series: local factor 1/(1 + 7X) at 7, 1/(1 - q^2 X^2) at inert q, and
    the reciprocal of the quadratic split factor elsewhere.

    Every prime <= n_max must be covered, so prime_bound (default n_max)
    may not be smaller than n_max.
    """
    if prime_bound is None:
        prime_bound = n_max
    if prime_bound < n_max:
        raise ValueError("prime_bound below n_max leaves factors uncovered")
    table = [0] * (n_max + 1)
    table[1] = 1
    for p in primes_up_to(n_max):
        for pj, uj in _local_expansion(p, n_max):
            if uj == 0:
                continue
            for m in range(1, n_max // pj + 1):
                if m % p and table[m]:
                    table[m * pj] += table[m] * uj
    return CoeffTable("B", n_max, table)


def _local_expansion(p, n_max):
    """(p^j, u_j) for j >= 1 while p^j <= n_max, where sum u_j X^j is the
    reciprocal of the local Euler factor at p."""
    out = []
    if p == 7:
        pj, uj = 7, -7
        while pj <= n_max:
            out.append((pj, uj))
            pj *= 7
            uj *= -7
    elif epsilon(p) == 1:
        fac = split_euler_factor(p)
        u_prev, u = 1, -fac.c1
        pj = p
        while pj <= n_max:
            out.append((pj, u))
            u_prev, u = u, -fac.c1 * u - fac.c2 * u_prev
            pj *= p
    else:
        pj = p * p
        uj = p * p
        while pj <= n_max:
            out.append((pj, uj))
            pj *= p * p
            uj *= p * p
    return out


# ---------------------------------------------------------------------------
# c(n) = (a(n) - b(n))/8, two ways

def c_table(n_max):
    """Fourier coefficients of the quotient via the decomposition identity."""
    av = a_table(n_max).values
    bv = b_table(n_max).values
    out = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        d = av[n] - bv[n]
        if d % 8:
            raise IdentityViolation(n, av[n], bv[n])
        out[n] = d // 8
    return CoeffTable("C", n_max, out)


def coeff_table_from_series(series, n_max, kind="C"):
    """Read a q-expansion into a 1..n_max coefficient table.

    The series must sit on integer exponents (24 | order24) with leading
    degree >= 1, and its window must reach n_max.
    """
    if series.order24 % 24:
        raise ValueError("series has fractional exponents; rescale the spec first")
    lead = series.order24 // 24
    if lead < 1:
        raise ValueError("table needs a series with positive leading degree")
    if lead + series.trunc - 1 < n_max:
        raise ValueError("series window too short for requested table")
    out = [0] * (n_max + 1)
    for i, c in enumerate(series.coeffs):
        n = lead + i
        if n > n_max:
            break
        out[n] = c
    return CoeffTable(kind, n_max, out)


def c_table_from_expansion(n_max):
    """The independent pipeline: expand the eta quotient itself."""
    series = etaprod.expand(etaprod.cyclotomic_spec(7), n_max)
    return coeff_table_from_series(series, n_max, "C")


def expansion_values(series, n_max):
    """Raw value list [0, v(1), ..., v(n_max)] of an integer-exponent
    expansion, without the kind constraints of CoeffTable (the leading
    degree may be 1, or past n_max)."""
    if series.order24 % 24:
        raise ValueError("series has fractional exponents; rescale the spec first")
    lead = series.order24 // 24
    if lead < 1:
        raise ValueError("expansion must start at degree >= 1")
    out = [0] * (n_max + 1)
    for i, c in enumerate(series.coeffs):
        n = lead + i
        if n > n_max:
            break
        out[n] = c
    return out
