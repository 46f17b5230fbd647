from fractions import Fraction
from math import comb

import pytest

from freemagma.counting import (CATALAN, PRIMES, abundance_bound, abundance_gap, big_omega,
                                catalan_count, dirichlet_partial, prime_count_closed,
                                prime_count_oracle, prime_count_recursive, prime_gap,
                                prime_table, proper_divisors)
from freemagma.errors import DomainError, ResourceCapError

# frozen from the published listing
PI_1_13 = [0, 1, 2, 4, 14, 38, 132, 420, 1426, 4834, 16796, 58688, 208012]
SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def _is_int_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def test_catalan_examples():
    assert catalan_count(4) == 5
    assert catalan_count(5) == 14
    assert catalan_count(13) == 208012
    assert catalan_count(1) == catalan_count(2) == 1


@pytest.mark.parametrize("n", range(1, 60))
def test_catalan_binomial_oracle(n):
    k = n - 1
    assert catalan_count(n) == comb(2 * k, k) // (k + 1)


def test_catalan_outgrows_machine_words():
    assert catalan_count(37) < 2 ** 64 < catalan_count(38)


def test_prime_sequence_prefix():
    assert [prime_count_recursive(n) for n in range(1, 14)] == PI_1_13
    assert [PRIMES[n] for n in range(1, 14)] == PI_1_13
    assert PRIMES.values(3) == {1: 0, 1 + 1: 1, 3: 2}


def test_recursive_examples():
    assert prime_count_recursive(4) == 4
    assert prime_count_recursive(6) == 38
    for p in SMALL_PRIMES:
        assert prime_count_recursive(p) == catalan_count(p)


def test_closed_examples():
    for p in SMALL_PRIMES:
        assert prime_count_closed(p) == catalan_count(p)
    for p in (2, 3, 5):
        assert prime_count_closed(p * p) == catalan_count(p * p) - catalan_count(p) ** 2
    assert prime_count_closed(12) == 58688
    with pytest.raises(DomainError):
        prime_count_closed(1)


@pytest.mark.parametrize("n", range(2, 41))
def test_closed_matches_recursive(n):
    assert prime_count_closed(n) == prime_count_recursive(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_oracle_matches_recursive(n):
    assert prime_count_oracle(n) == prime_count_recursive(n)


def test_oracle_examples_and_cap():
    assert prime_count_oracle(1) == 0
    assert prime_count_oracle(5) == 14
    assert prime_count_oracle(9) == 1426
    with pytest.raises(ResourceCapError):
        prime_count_oracle(13)


def test_count_bounds_up_to_40():
    for n in range(1, 41):
        pi, c = prime_count_recursive(n), catalan_count(n)
        assert 0 <= pi <= c
        assert (pi == c) == _is_int_prime(n)


def test_dirichlet_partial():
    for p in SMALL_PRIMES:
        assert dirichlet_partial(PRIMES, CATALAN, p) == 0
    # composites: c_n - Pi_n counts elements with a proper prime left factor
    for n in (4, 6, 8, 12, 30):
        assert dirichlet_partial(PRIMES, CATALAN, n) == catalan_count(n) - prime_count_recursive(n)


def test_divisor_helpers():
    assert proper_divisors(12) == [2, 3, 4, 6]
    assert proper_divisors(13) == []
    assert proper_divisors(49) == [7]
    assert [big_omega(n) for n in (1, 2, 12, 64, 97)] == [0, 1, 3, 6, 1]


def test_abundance_examples():
    gap, bound, ok = abundance_gap(16)
    assert gap < 1
    assert abundance_gap(30)[2]
    assert abundance_gap(48)[0] < abundance_gap(24)[0]
    assert abundance_bound(18) == Fraction(18 ** 3, 4 ** 4)
    with pytest.raises(DomainError):
        abundance_gap(15)


@pytest.mark.parametrize("n", range(16, 49))
def test_abundance_bound_holds(n):
    gap, bound, ok = abundance_gap(n)
    assert isinstance(gap, Fraction) and isinstance(bound, Fraction)
    assert ok and gap <= bound


def test_prime_table_rows():
    rows = prime_table(13)
    assert [r[2] for r in rows] == PI_1_13
    assert rows[5] == (6, 42, 38, prime_gap(6))
    assert rows[5][3] == Fraction(2, 21)
