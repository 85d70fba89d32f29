"""Exact number-theoretic primitives.

Bernoulli numbers (convention B_1 = -1/2) and the even-index-only Bernoulli
polynomials B^0_k, divisor power sums, the Moebius function, and small
factorization helpers.  Everything is exact; nothing here ever rounds.
"""

import threading
from fractions import Fraction
from math import comb, isqrt

from .polyring import BoundedPolynomial

# B_0, B_1 seed the defining recurrence; the cache only ever grows.
_bernoulli_cache = [Fraction(1), Fraction(-1, 2)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(k):
    """Return B_k as a Fraction, under the convention B_1 = -1/2.

    Computed by the defining recurrence sum_{i<m} C(m,i) B_i = 0 (m >= 2)
    with memoization; concurrent callers are serialized on the cache.
    """
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative (use bernoulli_or_zero for the B_l=0, l<0 convention)")
    if k < len(_bernoulli_cache):
        return _bernoulli_cache[k]
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= k:
            m = len(_bernoulli_cache) + 1
            acc = Fraction(0)
            for i, b in enumerate(_bernoulli_cache):
                if b:
                    acc += comb(m, i) * b
            _bernoulli_cache.append(-acc / comb(m, m - 1))
        return _bernoulli_cache[k]


def bernoulli_or_zero(k):
    """B_k, extended by B_l = 0 for l < 0."""
    if k < 0:
        return Fraction(0)
    return bernoulli_number(k)


def bernoulli_poly0(k):
    """The k-th Bernoulli polynomial without its B_1 term.

    B^0_k(x) = sum over even i, 0 <= i <= k, of C(k,i) B_i x^(k-i).
    Degree is exactly k, and the result does not depend on the B_1 convention.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    coeffs = [Fraction(0)] * (k + 1)
    for i in range(0, k + 1, 2):
        coeffs[k - i] = comb(k, i) * bernoulli_number(i)
    return BoundedPolynomial(coeffs, bound=k)


def divisors(n):
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def sigma(k, n):
    """Divisor power sum sigma_k(n) = sum of d^k over d | n."""
    if n < 1:
        raise ValueError("n must be positive")
    return sum(d**k for d in divisors(n))


def prime_divisors(n):
    """Sorted distinct prime divisors of n >= 1, by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    primes = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        primes.append(n)
    return primes


def moebius(n):
    """Moebius function mu(n) by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result
