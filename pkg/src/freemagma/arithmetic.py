"""The product of trees and the left-divisibility structure it induces.

``multiply(x, y)`` grafts a copy of x onto every leaf of y.  Under this product
the magma is a free monoid on its prime elements, so left divisors of an
element form a chain and factorizations are unique.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from .config import LIMITS
from .elements import UNIT, MagmaElement, add
from .errors import ResourceCapError


@lru_cache(maxsize=None)
def _mul(x, y):
    if y.left is None:
        return x
    return add(_mul(x, y.left), _mul(x, y.right))


def multiply(x: MagmaElement, y: MagmaElement) -> MagmaElement:
    size = x.length * y.length
    if size > LIMITS.multiply_cap:
        raise ResourceCapError("multiply_cap", LIMITS.multiply_cap, size)
    if x is UNIT:
        return y
    return _mul(x, y)


def product(factors) -> MagmaElement:
    """Left-to-right product; the empty product is 1."""
    return reduce(multiply, factors, UNIT)


@lru_cache(maxsize=None)
def _ldiv(a, x):
    if x is a:
        return UNIT
    # a divides x = u + v only through both components
    if x.left is None or x.length <= a.length or x.length % a.length:
        return None
    left = _ldiv(a, x.left)
    if left is None:
        return None
    right = _ldiv(a, x.right)
    if right is None:
        return None
    return add(left, right)


def left_divide(a: MagmaElement, x: MagmaElement):
    """The y with ``multiply(a, y) is x``, or None when a does not divide x."""
    if a is UNIT:
        return x
    return _ldiv(a, x)


def divides(a: MagmaElement, x: MagmaElement) -> bool:
    return left_divide(a, x) is not None


@lru_cache(maxsize=None)
def _divisors(x):
    if x.left is None:
        return frozenset((x,))
    return _divisors(x.left).intersection(_divisors(x.right)) | {x}


def divisor_chain(x: MagmaElement) -> list:
    """All left divisors of x, shortest first; each divides the next."""
    return sorted(_divisors(x), key=lambda d: d.length)


def gcd(x: MagmaElement, y: MagmaElement) -> MagmaElement:
    """Greatest common left divisor (the longest common element of both divisor chains)."""
    if x is y:
        return x
    return max(_divisors(x) & _divisors(y), key=lambda d: d.length)


def is_prime(x: MagmaElement) -> bool:
    if x.left is None:
        return False
    return gcd(x.left, x.right) is UNIT


@dataclass(frozen=True)
class Factorization:
    subject: MagmaElement
    factors: tuple

    def product(self):
        return product(self.factors)

    def lengths(self):
        return [f.length for f in self.factors]


def factorize(x: MagmaElement) -> Factorization:
    """Peel off the shortest nontrivial left divisor until nothing is left."""
    factors = []
    rest = x
    while rest is not UNIT:
        p = divisor_chain(rest)[1]
        factors.append(p)
        rest = left_divide(p, rest)
    return Factorization(x, tuple(factors))


def gcd_by_factors(x: MagmaElement, y: MagmaElement) -> MagmaElement:
    """gcd as the product of the longest common prefix of the two factorizations."""
    common = []
    for p, q in zip(factorize(x).factors, factorize(y).factors):
        if p is not q:
            break
        common.append(p)
    return product(common)


@lru_cache(maxsize=None)
def pair_embed(x: MagmaElement, y: MagmaElement) -> MagmaElement:
    """Isomorphism from pairs of elements onto the elements other than 1.

    Generators ``(1, y)`` and ``(x, 1)`` go to ``1 + y`` and ``x + 1``; a pair of
    sums is sent componentwise, ``(x1+x2, y1+y2) -> f(x1, y1) + f(x2, y2)``.
    """
    if x.left is None:
        return add(UNIT, y)
    if y.left is None:
        return add(x, UNIT)
    return add(pair_embed(x.left, y.left), pair_embed(x.right, y.right))
