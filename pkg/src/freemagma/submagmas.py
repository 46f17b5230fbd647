"""Finitely generated submagmas, principal ideals and the pentagon sublattice."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd as int_gcd
from functools import lru_cache, reduce

from .arithmetic import divides, gcd, left_divide
from .config import LIMITS
from .elements import (UNIT, TWO, MagmaElement, add, enumerate_level, make, reverse,
                       sorted_elements)
from .errors import DomainError, ResourceCapError
from .report import VerificationRecord


@dataclass(frozen=True, eq=False)
class Submagma:
    """A submagma held by its minimal generating set.

    Build these through :func:`submagma`; the constructor trusts that
    ``generators`` is already reduced.
    """
    generators: tuple
    provenance: tuple = ()
    _genset: frozenset = field(init=False, repr=False)
    _minlen: float = field(init=False, repr=False)
    _memo: dict = field(init=False, repr=False)

    def __post_init__(self):
        gens = frozenset(self.generators)
        object.__setattr__(self, "_genset", gens)
        object.__setattr__(self, "_minlen", min((g.length for g in gens), default=float("inf")))
        object.__setattr__(self, "_memo", {})

    def __eq__(self, other):
        if not isinstance(other, Submagma):
            return NotImplemented
        return self._genset == other._genset

    def __hash__(self):
        return hash(self._genset)

    def __contains__(self, x):
        return contains(self, x)

    @property
    def rank(self):
        return len(self.generators)

    def __repr__(self):
        from .elements import format_set
        return f"Submagma({format_set(self.generators)})"


def contains(N: Submagma, x: MagmaElement) -> bool:
    """x is in N iff x is a generator or both of its summands are in N."""
    memo = N._memo
    hit = memo.get(x)
    if hit is not None:
        return hit
    gens = N._genset
    # a non-generator member has two members as summands
    twice_min = 2 * N._minlen
    cap = LIMITS.membership_depth
    stack = [x]
    while stack:
        z = stack[-1]
        if z in memo:
            stack.pop()
            continue
        if z in gens:
            memo[z] = True
            stack.pop()
            continue
        if z.left is None or z.length < twice_min:
            memo[z] = False
            stack.pop()
            continue
        lhs = memo.get(z.left)
        if lhs is None:
            if len(stack) > cap:
                raise ResourceCapError("membership_depth", cap, len(stack))
            stack.append(z.left)
            continue
        if lhs is False:
            memo[z] = False
            stack.pop()
            continue
        rhs = memo.get(z.right)
        if rhs is None:
            if len(stack) > cap:
                raise ResourceCapError("membership_depth", cap, len(stack))
            stack.append(z.right)
            continue
        memo[z] = rhs
        stack.pop()
    return memo[x]


def submagma(raw) -> Submagma:
    """Reduce a generator list to the minimal generating set of the submagma it spans."""
    raw = tuple(raw)
    pool = Submagma(tuple(set(raw)))
    gens = [g for g in pool._genset
            if g.left is None or not (contains(pool, g.left) and contains(pool, g.right))]
    return Submagma(tuple(sorted_elements(gens)), raw)


def principal(a: MagmaElement) -> Submagma:
    """The principal ideal aM, generated by a alone."""
    return Submagma((a,), (a,))


def rank(N: Submagma) -> int:
    return len(N.generators)


def join(N: Submagma, M: Submagma) -> Submagma:
    return submagma(N.generators + M.generators)


@dataclass(frozen=True)
class TruncatedSet:
    """Members of some set with length at most ``bound``."""
    bound: int
    elements: frozenset

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(sorted_elements(self.elements))

    def __len__(self):
        return len(self.elements)


def truncated_members(N: Submagma, L: int) -> TruncatedSet:
    """Generate every member of N of length <= L bottom-up from its generators."""
    return TruncatedSet(L, _generate(N._genset, L))


@lru_cache(maxsize=512)
def _generate(gens, L):
    by_len = {}
    for g in gens:
        by_len.setdefault(g.length, set()).add(g)
    levels = {}
    total = 0
    for n in range(1, L + 1):
        cur = set(by_len.get(n, ()))
        for i in range(1, n):
            lefts, rights = levels[i], levels[n - i]
            if lefts and rights:
                cur.update(add(u, v) for u in lefts for v in rights)
        levels[n] = cur
        total += len(cur)
        if total > LIMITS.enumeration_cap:
            raise ResourceCapError("enumeration_cap", LIMITS.enumeration_cap, total)
    return frozenset().union(*levels.values())


def intersect_truncated(N: Submagma, M: Submagma, L: int) -> TruncatedSet:
    return TruncatedSet(L, truncated_members(N, L).elements & truncated_members(M, L).elements)


# ------------------------------------------------------------ principal ideals

def principal_subset(a: MagmaElement, b: MagmaElement) -> bool:
    """aM is contained in bM exactly when b divides a."""
    return divides(b, a)


def principal_intersect(a: MagmaElement, b: MagmaElement):
    """Generator of aM ∩ bM, or None when the intersection is empty."""
    if divides(a, b):
        return b
    if divides(b, a):
        return a
    return None


def principal_join_hull(a: MagmaElement, b: MagmaElement) -> MagmaElement:
    """Generator of the least principal ideal containing aM ∨ bM."""
    return gcd(a, b)


# ------------------------------------------------------------ longitudinal

@dataclass(frozen=True)
class LongitudinalSpec:
    """All elements whose length lies in the additive semigroup spanned by the given integers."""
    numeric_generators: frozenset

    def __post_init__(self):
        gens = frozenset(int(g) for g in self.numeric_generators)
        if not gens:
            raise DomainError("longitudinal spec needs at least one generator")
        if min(gens) < 1:
            raise DomainError("numeric generators must be >= 1")
        object.__setattr__(self, "numeric_generators", gens)

    def contains_length(self, n: int) -> bool:
        g = reduce(int_gcd, self.numeric_generators)
        if n < 1 or n % g:
            return False
        gens = sorted(a // g for a in self.numeric_generators)
        m = n // g
        if gens[0] == 1:
            return True
        # Schur: with coprime generators every m >= (a_1 - 1)(a_k - 1) is representable
        if m >= (gens[0] - 1) * (gens[-1] - 1):
            return True
        reach = [False] * (m + 1)
        reach[0] = True
        for v in range(1, m + 1):
            reach[v] = any(a <= v and reach[v - a] for a in gens)
        return reach[m]


def threshold_spec(i: int) -> LongitudinalSpec:
    """The lengths ``{n >= i}``, spanned by ``i, ..., 2i - 1``."""
    if i < 1:
        raise DomainError(f"threshold must be >= 1, got {i}")
    return LongitudinalSpec(frozenset(range(i, 2 * i)))


def longitudinal_contains(spec: LongitudinalSpec, x: MagmaElement) -> bool:
    return spec.contains_length(x.length)


def longitudinal_hull(N: Submagma) -> LongitudinalSpec:
    if not N.generators:
        raise DomainError("the empty submagma has no longitudinal hull")
    return LongitudinalSpec(frozenset(g.length for g in N.generators))


# ------------------------------------------------------------ cofinite submagmas

def cofinite_generators_level(p, n: int) -> frozenset:
    """Minimal generators of length n of the complement of the prime set p."""
    from .primesets import is_prime_set
    p = frozenset(p)
    if not is_prime_set(p):
        raise DomainError("complement is not a submagma: set is not prime")
    if n == 1:
        return frozenset() if UNIT in p else frozenset((UNIT,))
    return frozenset(x for x in enumerate_level(n)
                     if x not in p and (x.left in p or x.right in p))


# ------------------------------------------------------------ symmetry

@dataclass
class SymmetryReport:
    is_symmetric: bool
    pairs: list
    pow2_gens: list
    self_symmetric_others: list
    unpaired: list


def symmetric_analyze(N: Submagma) -> SymmetryReport:
    """Split the generators of N into mirror pairs, powers of 2 and the rest."""
    gens = N._genset
    pairs, pow2, selfsym, unpaired = [], [], [], []
    for g in N.generators:
        r = reverse(g)
        if g.is_pow2:
            pow2.append(g)
        elif r is g:
            selfsym.append(g)
        elif r in gens:
            if g < r:
                pairs.append((g, r))
        else:
            unpaired.append(g)
    return SymmetryReport(not unpaired, pairs, pow2, selfsym, unpaired)


# ------------------------------------------------------------ pentagon

def pentagon_witness(L: int) -> list:
    """Check the pentagon formed by 2M, 3_+M, 3_+M ∨ (2+3_+)M and their join, up to length L."""
    if L < 1:
        raise DomainError(f"bound must be >= 1, got {L}")
    three = make("plus", 3)
    mixed = add(TWO, three)
    two_m, three_m = principal(TWO), principal(three)
    upper = submagma([three, mixed])
    top = join(two_m, three_m)
    records = []

    exact_empty = principal_intersect(TWO, three) is None
    trunc = intersect_truncated(two_m, three_m, L)
    records.append(VerificationRecord(
        "2M ∩ 3_+M = ∅", L, exact_empty and len(trunc) == 0,
        min(trunc.elements, default=None)))

    bad = next((x for x in truncated_members(upper, L) if left_divide(TWO, x) is not None), None)
    records.append(VerificationRecord(
        "no multiple of 2 in 3_+M ∨ (2+3_+)M", L, bad is None, bad))

    whole = join(two_m, upper)
    lhs, rhs = truncated_members(whole, L).elements, truncated_members(top, L).elements
    diff = min(lhs ^ rhs, default=None)
    records.append(VerificationRecord(
        "2M ∨ (3_+M ∨ (2+3_+)M) = 2M ∨ 3_+M", L,
        whole == top and diff is None, diff,
        "generators " + ("agree" if whole == top else "differ")))

    small, big = truncated_members(three_m, L).elements, truncated_members(upper, L).elements
    extra = min(big - small, default=None)
    records.append(VerificationRecord(
        "3_+M ⊊ 3_+M ∨ (2+3_+)M", L,
        small <= big and not contains(three_m, mixed) and contains(upper, mixed),
        extra))
    return records
