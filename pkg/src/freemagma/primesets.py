"""Additive prime sets, closed sets and their spectra.

A set p is prime when ``x + y in p`` forces ``x in p`` or ``y in p``; its
complement is then a submagma, and the submagmas with k-element complements are
exactly the k-maximal ones.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .config import LIMITS
from .elements import (UNIT, MagmaElement, add, enumerate_upto, format_element, format_set,
                       segment, sorted_elements)
from .errors import DomainError, ResourceCapError


@dataclass(frozen=True)
class PrimeSet:
    elements: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))

    @cached_property
    def sorted(self):
        return tuple(sorted_elements(self.elements))

    @property
    def sort_key(self):
        return (len(self.elements), tuple(e.key for e in self.sorted))

    def __iter__(self):
        return iter(self.sorted)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    @property
    def is_prime(self):
        return is_prime_set(self.elements)

    def to_dict(self):
        return {"elements": [format_element(e, "canonical") for e in self.sorted]}

    def __str__(self):
        return format_set(self.elements)


def _as_set(P):
    if isinstance(P, PrimeSet):
        return P.elements
    return frozenset(P)


def sort_prime_sets(sets):
    return sorted((s if isinstance(s, PrimeSet) else PrimeSet(s) for s in sets),
                  key=lambda s: s.sort_key)


def is_prime_set(P) -> bool:
    P = _as_set(P)
    return all(z.left is None or z.left in P or z.right in P for z in P)


def is_closed_set(P) -> bool:
    P = _as_set(P)
    return all(z.left is None or (z.left in P and z.right in P) for z in P)


def enumerate_closed_sets(k: int) -> list:
    """All closed sets of size k.

    Dropping a member that is no summand of another member keeps a set closed,
    so every closed set grows from ``{1}`` by adding sums of present members.
    """
    if k < 0:
        raise DomainError(f"size must be >= 0, got {k}")
    if k == 0:
        return [PrimeSet()]
    level = {frozenset((UNIT,))}
    for _ in range(k - 1):
        nxt = set()
        for S in level:
            for x in S:
                for y in S:
                    z = add(x, y)
                    if z not in S:
                        nxt.add(S | {z})
        if len(nxt) > LIMITS.primeset_cap:
            raise ResourceCapError("primeset_cap", LIMITS.primeset_cap, len(nxt))
        level = nxt
    return sort_prime_sets(level)


def segment_closure(X) -> frozenset:
    """Union of the segments of the members of X: the least closed set containing X."""
    out = set()
    for x in _as_set(X):
        out |= segment(x)
    return frozenset(out)


# ------------------------------------------------------------ spectra

@dataclass
class SpectrumLattice:
    """All prime subsets of a finite set, as bitmasks over ``elements``."""
    elements: tuple
    nodes: list
    covers: list  # (lower index, upper index)

    def node_set(self, i) -> frozenset:
        mask = self.nodes[i]
        return frozenset(e for j, e in enumerate(self.elements) if mask >> j & 1)

    def node_sets(self):
        return [self.node_set(i) for i in range(len(self.nodes))]

    @cached_property
    def length(self) -> int:
        """Number of steps in the longest chain."""
        index = {m: i for i, m in enumerate(self.nodes)}
        up = {}
        for lo, hi in self.covers:
            up.setdefault(lo, []).append(hi)
        best = [-1] * len(self.nodes)
        best[index[0]] = 0
        # nodes are sorted by size, so every cover goes forward
        for i in range(len(self.nodes)):
            if best[i] < 0:
                continue
            for j in up.get(i, ()):
                best[j] = max(best[j], best[i] + 1)
        return max(best)

    @cached_property
    def width(self) -> int:
        """Size of the largest antichain, via a minimum chain cover (Dilworth)."""
        n = len(self.nodes)
        if n == 0:
            return 0
        g = nx.Graph()
        left = [("l", i) for i in range(n)]
        g.add_nodes_from(left)
        g.add_nodes_from(("r", i) for i in range(n))
        for i, a in enumerate(self.nodes):
            for j, b in enumerate(self.nodes):
                if a != b and a & b == a:
                    g.add_edge(("l", i), ("r", j))
        matching = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
        return n - len(matching) // 2

    def to_dict(self):
        return {
            "nodes": [[format_element(e, "canonical") for e in sorted_elements(s)]
                      for s in self.node_sets()],
            "covers": [list(c) for c in self.covers],
            "length": self.length,
            "width": self.width,
        }


def spectrum(P) -> SpectrumLattice:
    """Every prime subset of P with the covering relation between them."""
    elems = tuple(sorted_elements(_as_set(P)))
    n = len(elems)
    if n > LIMITS.spectrum_cap:
        raise ResourceCapError("spectrum_cap (2^|P| nodes)", 2 ** LIMITS.spectrum_cap, 2 ** n)
    idx = {e: i for i, e in enumerate(elems)}
    # summands precede their sums in canonical order, so a DFS can decide them first
    need = []
    for e in elems:
        if e.left is None:
            need.append(None)
        else:
            need.append(sum(1 << idx[c] for c in {e.left, e.right} if c in idx))
    nodes = []
    stack = [(0, 0)]
    while stack:
        i, mask = stack.pop()
        if i == n:
            nodes.append(mask)
            continue
        stack.append((i + 1, mask))
        if need[i] is None or mask & need[i]:
            stack.append((i + 1, mask | 1 << i))
    nodes.sort(key=lambda m: (bin(m).count("1"), m))
    index = {m: i for i, m in enumerate(nodes)}
    covers = []
    # a prime subset q of p is covered by p only when p has exactly one more element
    for hi, m in enumerate(nodes):
        rest = m
        while rest:
            bit = rest & -rest
            rest ^= bit
            lo = index.get(m ^ bit)
            if lo is not None:
                covers.append((lo, hi))
    covers.sort()
    return SpectrumLattice(elems, nodes, covers)


def spectrum_width(P) -> int:
    return spectrum(P).width


def is_slim(P) -> bool:
    return spectrum(P).width == 1


# ------------------------------------------------------------ enumeration

def _pool_by_length(max_len):
    pool = {}
    if max_len >= 1:
        for a in enumerate_upto(max_len):
            pool.setdefault(a.length, []).append(a)
    return pool


def enumerate_prime_sets(k: int, L: int) -> list:
    """All prime sets of size k whose elements have length at most L."""
    if k < 0:
        raise DomainError(f"size must be >= 0, got {k}")
    if k == 0:
        return [PrimeSet()]
    if L < 1:
        raise DomainError(f"length bound must be >= 1, got {L}")
    pool = _pool_by_length(L - 1)
    level = {frozenset((UNIT,))}
    for _ in range(k - 1):
        nxt = set()
        for S in level:
            for x in S:
                for n in range(1, L - x.length + 1):
                    for a in pool.get(n, ()):
                        for z in (add(a, x), add(x, a)):
                            if z not in S:
                                nxt.add(S | {z})
            if len(nxt) > LIMITS.primeset_cap:
                raise ResourceCapError("primeset_cap", LIMITS.primeset_cap, len(nxt))
        level = nxt
    return sort_prime_sets(level)


def cover_parents(P) -> list:
    """Prime sets obtained from P by removing a single element."""
    P = _as_set(P)
    return sort_prime_sets(P - {z} for z in P if is_prime_set(P - {z}))


def kmax_level(k: int, L: int) -> list:
    """Level k of the Hasse diagram: complements of the k-maximal submagmas.

    Returns ``(prime set, parents)`` pairs where the parents are the prime sets
    of size k - 1 it covers.
    """
    return [(p, cover_parents(p.elements)) for p in enumerate_prime_sets(k, L)]


# ------------------------------------------------------------ digraph

def _require_prime(P, nonempty=False):
    P = _as_set(P)
    if nonempty and not P:
        raise DomainError("prime set must be nonempty")
    if not is_prime_set(P):
        raise DomainError("set is not prime")
    return P


def decomposition_digraph(P) -> list:
    """Edges ``z -> c`` for each ``z`` in P and each summand ``c`` of z lying in P."""
    P = _require_prime(P)
    edges = set()
    for z in P:
        if z.left is not None:
            for c in (z.left, z.right):
                if c in P:
                    edges.add((z, c))
    return sorted(edges, key=lambda e: (e[0].key, e[1].key))


def arborescence_parents(P) -> dict:
    """BFS from 1 against the digraph edges; the first parent discovered wins."""
    P = _require_prime(P, nonempty=True)
    children = {}
    for z, c in decomposition_digraph(P):
        children.setdefault(c, []).append(z)
    parent = {UNIT: None}
    queue = deque([UNIT])
    while queue:
        v = queue.popleft()
        for z in sorted_elements(children.get(v, ())):
            if z not in parent:
                parent[z] = v
                queue.append(z)
    return parent


def arborescence(P):
    from .families import RootedTree
    parent = arborescence_parents(P)
    kids = {}
    for z, v in parent.items():
        if v is not None:
            kids.setdefault(v, []).append(z)

    def build(v):
        return RootedTree.of(build(c) for c in kids.get(v, ()))
    return build(UNIT)


# ------------------------------------------------------------ closed sets

def closed_not_fg_witness(s, A) -> MagmaElement:
    """An element outside both the closed set s and the submagma spanned by A.

    With ``b = (...((a1 + a2) + a3) + ...) + an`` the element ``b + 1`` lies in
    the complement of s but not in ``<A>``, so A cannot generate that complement.
    """
    from .submagmas import contains, submagma
    s = _as_set(s)
    A = list(A)
    if not s or not is_closed_set(s):
        raise DomainError("s must be a nonempty closed set")
    if not A:
        raise DomainError("A must be nonempty")
    if any(a in s for a in A):
        raise DomainError("every element of A must lie outside s")
    b = A[0]
    for a in A[1:]:
        b = add(b, a)
    w = add(b, UNIT)
    if w in s or contains(submagma(A), w):
        raise AssertionError("witness failed")  # pragma: no cover
    return w
