"""Exact counting: Catalan numbers, prime counts and the abundance bound."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .config import LIMITS
from .errors import DomainError, ResourceCapError

_CATALAN = [1]  # C_0, C_1, ...


def catalan_count(n: int) -> int:
    """Number of elements of length n, i.e. the Catalan number C_{n-1}."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    k = n - 1
    while len(_CATALAN) <= k:
        j = len(_CATALAN) - 1
        _CATALAN.append(_CATALAN[j] * (4 * j + 2) // (j + 2))
    return _CATALAN[k]


class CountSequence:
    """A sequence indexed from 1, backed by a function and filled lazily."""

    def __init__(self, func, name=""):
        self._func = func
        self._values = {}
        self.name = name

    def __getitem__(self, n):
        v = self._values.get(n)
        if v is None:
            v = self._values[n] = self._func(n)
        return v

    def values(self, upto):
        return {n: self[n] for n in range(1, upto + 1)}

    def __repr__(self):
        return f"CountSequence({self.name or self._func.__name__})"


def proper_divisors(n):
    """Divisors d of n with 1 < d < n, ascending."""
    small, large = [], []
    d = 2
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    count, d = 0, 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (1 if n > 1 else 0)


def dirichlet_partial(a, b, n: int) -> int:
    """Sum of a_i * b_j over 1 < i, j < n with i * j = n."""
    return sum(a[d] * b[n // d] for d in proper_divisors(n))


@lru_cache(maxsize=None)
def prime_count_recursive(n: int) -> int:
    """Prime elements of length n: c_n minus the composites, counted by smallest prime left factor."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0
    return catalan_count(n) - sum(
        prime_count_recursive(d) * catalan_count(n // d) for d in proper_divisors(n))


@lru_cache(maxsize=None)
def _ordered_products(n, s):
    # sum over ordered k_1...k_s = n, all k_i > 1, of c_{k_1} ... c_{k_s}
    if s == 1:
        return catalan_count(n)
    return sum(catalan_count(d) * _ordered_products(n // d, s - 1)
               for d in proper_divisors(n))


def prime_count_closed(n: int) -> int:
    """Alternating sum over ordered factorizations of n into at most Omega(n) factors."""
    if n < 2:
        raise DomainError(f"closed form needs n >= 2, got {n}")
    total = 0
    for s in range(1, big_omega(n) + 1):
        term = _ordered_products(n, s)
        total += term if s % 2 else -term
    return total


def prime_count_oracle(n: int) -> int:
    """Count primes of length n by enumerating the level and testing each element."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > LIMITS.oracle_max_len:
        raise ResourceCapError("oracle_max_len", LIMITS.oracle_max_len, n)
    from .arithmetic import is_prime
    from .elements import enumerate_level
    return sum(1 for x in enumerate_level(n) if is_prime(x))


CATALAN = CountSequence(catalan_count, "c")
PRIMES = CountSequence(prime_count_recursive, "Pi")


def prime_gap(n: int) -> Fraction:
    """Fraction of composite elements at length n, ``1 - Pi_n / c_n``."""
    return 1 - Fraction(prime_count_recursive(n), catalan_count(n))


def abundance_bound(n: int) -> Fraction:
    # floor(n/6) in the exponent only weakens the bound and keeps it rational
    return Fraction(n ** 3, 4 ** (n // 6 + 1))


def abundance_gap(n: int):
    """``(gap, bound, gap <= bound)`` in exact rationals, for n >= 16."""
    if n < 16:
        raise DomainError(f"the explicit bound needs n >= 16, got {n}")
    gap = prime_gap(n)
    bound = abundance_bound(n)
    return gap, bound, gap <= bound


def prime_table(upto: int):
    """Rows ``(n, c_n, Pi_n, gap)`` for n = 1..upto."""
    return [(n, catalan_count(n), prime_count_recursive(n), prime_gap(n))
            for n in range(1, upto + 1)]
