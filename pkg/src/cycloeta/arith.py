"""Elementary number theory helpers: primes, factorization, the quadratic
character mod 7, and a linear sieve for multiplicative functions.

Everything here works on plain Python ints, so all arithmetic is exact and
never overflows.
"""

import math

# Quadratic residues mod 7 are {1, 2, 4}.  eps is the completely
# multiplicative character with eps(7) = 0.
_EPS_BY_RESIDUE = (0, 1, 1, -1, 1, -1, -1)


def epsilon(n):
    """Character value of n mod 7: +1 on residues {1,2,4}, -1 on {3,5,6}, 0 at 0."""
    if n < 0:
        raise ValueError("epsilon is defined for nonnegative n")
    return _EPS_BY_RESIDUE[n % 7]


def primes_up_to(n):
    """All primes <= n, ascending."""
    if n < 2:
        return []
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p:: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i in range(2, n + 1) if flags[i]]


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorization of n >= 1 as a list of (p, k) pairs, p ascending.

    Deterministic trial division; adequate for the sizes this package targets.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out = []
    for p in (2, 3):
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            if n % p == 0:
                k = 0
                while n % p == 0:
                    n //= p
                    k += 1
                out.append((p, k))
        d += 6
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n):
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p ** j for d in divs for j in range(k + 1)]
    return sorted(divs)


def totient(n):
    t = n
    for p, _ in factorize(n):
        t -= t // p
    return t


def moebius(n):
    fac = factorize(n)
    if any(k > 1 for _, k in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def spf_table(n_max):
    """table[n] = smallest prime factor of n, for 0 <= n <= n_max."""
    spf = list(range(n_max + 1))
    for i in range(2, math.isqrt(n_max) + 1):
        if spf[i] == i:
            for j in range(i * i, n_max + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def sieve_multiplicative(prime_power_rule, n_max):
    """Tabulate the multiplicative function with the given prime-power values.

    prime_power_rule(p, k) must return f(p**k).  Returns table with
    table[0] = 0, table[1] = 1, table[n] = f(n) for 2 <= n <= n_max.
    Each distinct (p, k) is evaluated once; the rest is table lookups.
    """
    if n_max < 1:
        raise ValueError("sieve_multiplicative requires n_max >= 1")
    spf = spf_table(n_max)
    table = [0] * (n_max + 1)
    table[1] = 1
    cache = {}
    for n in range(2, n_max + 1):
        p = spf[n]
        m = n
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        key = (p, k)
        val = cache.get(key)
        if val is None:
            val = prime_power_rule(p, k)
            cache[key] = val
        table[n] = table[m] * val
    return table
