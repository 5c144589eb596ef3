"""Multiplicative-arithmetic helpers and the quadratic character mod 7."""

import random

import pytest

from cycloeta.arith import (
    divisors,
    epsilon,
    factorize,
    is_prime,
    moebius,
    primes_up_to,
    sieve_multiplicative,
    spf_table,
    totient,
)


def test_epsilon_residue_table():
    # squares mod 7 are {1, 2, 4}
    assert [epsilon(n) for n in range(8)] == [0, 1, 1, -1, 1, -1, -1, 0]
    assert epsilon(7 * 13) == 0
    with pytest.raises(ValueError):
        epsilon(-1)


def test_epsilon_matches_square_membership():
    squares = {(x * x) % 7 for x in range(1, 7)}
    for n in range(1, 10_000):
        r = n % 7
        expect = 0 if r == 0 else (1 if r in squares else -1)
        assert epsilon(n) == expect


def test_epsilon_completely_multiplicative():
    # every residue-class pair appears well inside this range
    for m in range(1, 300):
        for n in range(1, 300):
            assert epsilon(m * n) == epsilon(m) * epsilon(n)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    ps = primes_up_to(10_000)
    assert len(ps) == 1229
    assert ps[-1] == 9973


def test_is_prime_agrees_with_sieve():
    sieve = set(primes_up_to(2000))
    for n in range(2001):
        assert is_prime(n) == (n in sieve)


def test_factorize_roundtrip():
    rng = random.Random(701)
    for _ in range(300):
        n = rng.randrange(1, 10**9)
        fac = factorize(n)
        prod = 1
        for p, k in fac:
            assert is_prime(p) and k >= 1
            prod *= p**k
        assert prod == n
        assert [p for p, _ in fac] == sorted({p for p, _ in fac})
    assert factorize(1) == []
    assert factorize(2**10 * 3**4 * 49) == [(2, 10), (3, 4), (7, 2)]


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(28) == [1, 2, 4, 7, 14, 28]
    assert divisors(360) == sorted(d for d in range(1, 361) if 360 % d == 0)


def test_totient_and_moebius():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert [moebius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    # Gauss: sum of totients over divisors
    for n in range(1, 200):
        assert sum(totient(d) for d in divisors(n)) == n
    # Moebius sums vanish past n=1
    for n in range(2, 200):
        assert sum(moebius(d) for d in divisors(n)) == 0


def test_spf_table():
    spf = spf_table(100)
    for n in range(2, 101):
        assert n % spf[n] == 0
        assert is_prime(spf[n])
        assert all(n % p for p in primes_up_to(spf[n] - 1))


def test_sieve_multiplicative_reconstructs_totient():
    def rule(p, k):
        return p**k - p ** (k - 1)

    table = sieve_multiplicative(rule, 500)
    assert table[0] == 0
    assert table[1] == 1
    for n in range(1, 501):
        assert table[n] == totient(n)


def test_sieve_multiplicative_divisor_count():
    table = sieve_multiplicative(lambda p, k: k + 1, 300)
    for n in range(1, 301):
        assert table[n] == len(divisors(n))
