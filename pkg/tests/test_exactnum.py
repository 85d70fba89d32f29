import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb, gcd

import pytest

from heckepoly.exactnum import (
    bernoulli_number,
    bernoulli_or_zero,
    bernoulli_poly0,
    divisors,
    moebius,
    prime_divisors,
    sigma,
)
from heckepoly.polyring import BoundedPolynomial


def test_bernoulli_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_bernoulli_odd_vanish():
    for k in range(3, 61, 2):
        assert bernoulli_number(k) == 0


def test_bernoulli_negative_rejected():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    assert bernoulli_or_zero(-3) == 0
    assert bernoulli_or_zero(4) == Fraction(-1, 30)


def test_bernoulli_recurrence():
    # sum_{i<m} C(m,i) B_i = 0; the identity starts at m = 2 (m = 1 gives B_0 = 1)
    for m in range(2, 61):
        assert sum(comb(m, i) * bernoulli_number(i) for i in range(m)) == 0


def test_bernoulli_cache_thread_safety():
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(bernoulli_number, [200] * 16))
    assert len(set(results)) == 1
    assert results[0] == bernoulli_number(200)


def test_bernoulli_poly0_examples():
    assert bernoulli_poly0(3) == BoundedPolynomial([0, Fraction(1, 2), 0, 1])
    assert bernoulli_poly0(0) == BoundedPolynomial([1])
    assert bernoulli_poly0(5) == BoundedPolynomial([0, Fraction(-1, 6), 0, Fraction(5, 3), 0, 1])


def test_bernoulli_poly0_structure():
    for k in range(0, 24):
        p = bernoulli_poly0(k)
        assert p.degree() == k
        # only exponents k - i with even i carry coefficients
        for i in range(1, k + 1, 2):
            assert p.coeff(k - i) == 0


def test_sigma_examples():
    assert sigma(1, 6) == 12
    assert sigma(3, 1) == 1
    assert sigma(1, 5) == 6
    with pytest.raises(ValueError):
        sigma(1, 0)


def test_sigma_multiplicative():
    rng = random.Random(11)
    tried = 0
    while tried < 60:
        a = rng.randint(2, 10**2)
        b = rng.randint(2, 10**2)
        if gcd(a, b) != 1 or a * b > 10**4:
            continue
        for k in (0, 1, 3):
            assert sigma(k, a * b) == sigma(k, a) * sigma(k, b)
        tried += 1


def test_moebius_examples():
    assert moebius(1) == 1
    assert moebius(4) == 0
    assert moebius(6) == 1
    assert moebius(30) == -1
    with pytest.raises(ValueError):
        moebius(0)


def test_moebius_summatory():
    # sum_{d|n} mu(d) = [n == 1] for n <= 10^4, via a divisor sieve
    limit = 10**4
    acc = [0] * (limit + 1)
    for d in range(1, limit + 1):
        mu = moebius(d)
        if mu:
            for multiple in range(d, limit + 1, d):
                acc[multiple] += mu
    assert acc[1] == 1
    assert all(acc[n] == 0 for n in range(2, limit + 1))


def test_divisors_and_prime_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert prime_divisors(12) == [2, 3]
    assert prime_divisors(1) == []
    assert prime_divisors(97) == [97]
