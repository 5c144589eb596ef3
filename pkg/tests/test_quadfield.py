"""Ring arithmetic in Z[(1+sqrt(-7))/2] and ideal bookkeeping.

The exhaustive checks (representation uniqueness, ideal counts against the
divisor-sum character formula) are the oracles the L-series layer leans on.
"""

import math
import random

import pytest

from cycloeta.arith import divisors, epsilon, primes_up_to
from cycloeta.quadfield import (
    PI_TWO,
    EulerFactor,
    QuadInt,
    SplittingError,
    hecke_weight,
    ideal_count_table,
    ideals_of_norm,
    pi_element,
    split_euler_factor,
    split_rep,
    split_trace,
)


def rand_elt(rng):
    v = rng.randrange(-40, 41)
    u = rng.randrange(-40, 41) * 2 + (v % 2)
    return QuadInt(u, v)


def test_parity_enforced():
    QuadInt(1, 1)
    QuadInt(2, 0)
    with pytest.raises(ValueError):
        QuadInt(1, 0)
    with pytest.raises(ValueError):
        QuadInt(2, 3)


def test_pi_two_generates_two():
    assert PI_TWO.norm() == 2
    assert (PI_TWO * PI_TWO.conjugate()).rational_part() == 2
    assert hecke_weight(PI_TWO) == QuadInt(-3, 1)
    assert split_trace(2) == -3


def test_ring_laws_random():
    rng = random.Random(7)
    one = QuadInt.from_int(1)
    for _ in range(400):
        a, b, c = (rand_elt(rng) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * one == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a * b).norm() == a.norm() * b.norm()
        assert a.norm() == (a * a.conjugate()).rational_part()
        assert a.norm() >= 0
        assert a - b == a + (-b)


def test_pow_and_rational_part():
    a = QuadInt(1, 1)
    assert a ** 0 == QuadInt.from_int(1)
    assert a ** 3 == a * a * a
    with pytest.raises(ValueError):
        a ** -1
    assert QuadInt.from_int(-5).rational_part() == -5
    with pytest.raises(ValueError):
        QuadInt(1, 1).rational_part()


def test_split_rep_known_values():
    assert (split_rep(11).x, split_rep(11).y) == (2, 1)
    assert (split_rep(23).x, split_rep(23).y) == (4, 1)
    assert (split_rep(29).x, split_rep(29).y) == (1, 2)
    assert (split_rep(37).x, split_rep(37).y) == (3, 2)


def test_split_rep_exhaustive_uniqueness():
    # for every odd prime < 1000: a representation exists iff epsilon(p) = 1,
    # and the positive solution is unique (scan all y, not just the first hit)
    for p in primes_up_to(1000):
        if p in (2, 7):
            with pytest.raises(SplittingError):
                split_rep(p)
            continue
        sols = [
            (x, y)
            for y in range(1, math.isqrt(p // 7) + 1)
            for x in range(1, math.isqrt(p) + 1)
            if x * x + 7 * y * y == p
        ]
        if epsilon(p) == 1:
            r = split_rep(p)
            assert sols == [(r.x, r.y)]
            assert r.x ** 2 + 7 * r.y ** 2 == p
        else:
            assert sols == []
            with pytest.raises(SplittingError):
                split_rep(p)


def test_pi_element_norms():
    for p in [2, 11, 23, 29, 37, 43]:
        assert pi_element(p).norm() == p


def test_hecke_weight_unit_independent():
    rng = random.Random(11)
    for _ in range(100):
        a = rand_elt(rng)
        assert hecke_weight(-a) == hecke_weight(a)
        assert hecke_weight(a).norm() == a.norm() ** 2


# solutions of u^2 + 7 v^2 = 4n, one generator per unit orbit, (v, u) order
IDEALS_SMALL = {
    1: [(2, 0)],
    2: [(-1, 1), (1, 1)],
    3: [],
    4: [(4, 0), (-3, 1), (3, 1)],
    7: [(0, 2)],
    8: [(-5, 1), (5, 1), (-2, 2), (2, 2)],
    9: [(6, 0)],
    11: [(-4, 2), (4, 2)],
}


def test_ideals_of_norm_frozen():
    for n, expect in IDEALS_SMALL.items():
        assert [(a.u, a.v) for a in ideals_of_norm(n)] == expect
    with pytest.raises(ValueError):
        ideals_of_norm(0)


def test_ideals_canonical_and_correct():
    for n in range(1, 500):
        gens = ideals_of_norm(n)
        seen = set()
        for a in gens:
            assert a.norm() == n
            assert a.v > 0 or (a.v == 0 and a.u > 0)
            # one representative per unit orbit
            assert (a.u, a.v) not in seen and (-a.u, -a.v) not in seen
            seen.add((a.u, a.v))


def test_ideal_count_table_matches_enumeration_and_character():
    table = ideal_count_table(2000)
    for n in range(1, 2001):
        count = len(ideals_of_norm(n))
        assert table[n] == count
        # classical: #ideals of norm n = sum of the character over divisors
        assert count == sum(epsilon(d) for d in divisors(n))


def test_split_trace_closed_form():
    for p in [11, 23, 29, 37, 43, 53]:
        r = split_rep(p)
        assert split_trace(p) == 2 * (r.x ** 2 - 7 * r.y ** 2)


def test_split_euler_factor_from_roots():
    # 1 + c1 X + c2 X^2 must equal (1 - pi^2 X)(1 - conj(pi)^2 X): the
    # linear coefficient is -(pi^2 + conj(pi)^2), the quadratic one
    # norm(pi)^2 = p^2
    for p in [2, 11, 23, 29, 37]:
        f = split_euler_factor(p)
        sq = hecke_weight(pi_element(p))
        assert f == EulerFactor(p, -(sq + sq.conjugate()).rational_part(), p * p)
        assert (sq * sq.conjugate()).rational_part() == p * p
    assert split_euler_factor(2) == EulerFactor(2, 3, 4)
    assert split_euler_factor(11) == EulerFactor(11, 6, 121)
    assert split_euler_factor(23) == EulerFactor(23, -18, 529)


def test_split_euler_factor_rejects_inert():
    with pytest.raises(SplittingError):
        split_euler_factor(3)
