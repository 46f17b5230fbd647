"""Invariant suites replayed by ``magma verify``.

Each suite returns a list of :class:`VerificationRecord`; a failing record
carries the first counterexample found as its witness.
"""
from __future__ import annotations

import random
from itertools import product as cartesian

from .arithmetic import (divides, divisor_chain, factorize, gcd, gcd_by_factors, is_prime,
                         multiply, pair_embed, product)
from .counting import (abundance_gap, prime_count_closed, prime_count_oracle,
                       prime_count_recursive)
from .elements import UNIT, TWO, add, enumerate_upto, make, parse_set, reverse
from .families import enumerate_rooted_trees, family_instances, labelize, match_scheme
from .primesets import (arborescence, enumerate_closed_sets, enumerate_prime_sets, is_closed_set,
                        is_prime_set, is_slim, segment_closure, spectrum)
from .report import VerificationRecord
from .submagmas import (contains, join, pentagon_witness, principal, principal_intersect,
                        principal_subset, submagma, truncated_members)

PAPER_PRIMES = [0, 1, 2, 4, 14, 38, 132, 420, 1426, 4834, 16796, 58688, 208012]

DEFAULTS = {"arithmetic": 8, "ideals": 12, "spectra": 5, "families": 5}


def _first(check, bound, items, pred, detail=""):
    for item in items:
        if not pred(item):
            witness = item if not isinstance(item, tuple) else None
            return VerificationRecord(check, bound, False, witness, detail or repr(item))
    return VerificationRecord(check, bound, True, None, detail)


def suite_arithmetic(max_len=8):
    small = enumerate_upto(min(4, max_len))
    upto = enumerate_upto(max_len)
    upto10 = enumerate_upto(max(max_len, 10))
    out = [
        _first("associativity of the product", 4, cartesian(small, small, small),
               lambda t: multiply(multiply(t[0], t[1]), t[2]) is multiply(t[0], multiply(t[1], t[2]))),
        _first("length is multiplicative", 4, cartesian(small, small),
               lambda t: multiply(*t).length == t[0].length * t[1].length),
        _first("left and right cancellation", 4, cartesian(small, small, small),
               lambda t: (t[1] is t[2]) == (multiply(t[0], t[1]) is multiply(t[0], t[2]))
               and (t[1] is t[2]) == (multiply(t[1], t[0]) is multiply(t[2], t[0]))),
        _first("a | x+y iff a = x+y or (a | x and a | y)", max_len,
               ((a, z) for z in upto if z.left is not None for a in upto if a.length <= z.length),
               lambda t: divides(*t) == (t[0] is t[1] or (divides(t[0], t[1].left)
                                                           and divides(t[0], t[1].right)))),
        _first("x+y prime iff gcd(x, y) = 1", max_len, (z for z in upto if z.left is not None),
               lambda z: is_prime(z) == (gcd(z.left, z.right) is UNIT)),
        _first("prime iff exactly two left divisors", 10, upto10,
               lambda x: is_prime(x) == (len(divisor_chain(x)) == 2)),
        _first("factorization re-multiplies to its subject with prime factors", 10, upto10,
               lambda x: product(factorize(x).factors) is x
               and all(is_prime(p) for p in factorize(x).factors)),
        _first("gcd by divisor chains equals gcd by factor prefixes", 6,
               cartesian(enumerate_upto(6), enumerate_upto(6)),
               lambda t: gcd(*t) is gcd_by_factors(*t)),
        _first("left multiplication is an endomorphism", 4, cartesian(small, small, small),
               lambda t: multiply(t[0], add(t[1], t[2])) is add(multiply(t[0], t[1]),
                                                                 multiply(t[0], t[2]))),
        _first("mirror image respects the product", 4, cartesian(small, small),
               lambda t: reverse(multiply(*t)) is multiply(reverse(t[0]), reverse(t[1]))),
        _first("pair embedding avoids 1 and is a homomorphism", 4,
               cartesian(small, small, small, small),
               lambda t: pair_embed(add(t[0], t[1]), add(t[2], t[3]))
               is add(pair_embed(t[0], t[2]), pair_embed(t[1], t[3]))),
    ]
    images = [pair_embed(x, y) for x in small for y in small]
    out.append(VerificationRecord("pair embedding is injective", 4,
                                  len(set(images)) == len(images) and UNIT not in images))
    rec = [prime_count_recursive(n) for n in range(1, 14)]
    out.append(VerificationRecord("prime counts match 0, 1, 2, 4, 14, ..., 208012", 13,
                                  rec == PAPER_PRIMES))
    out.append(_first("closed form agrees with recursion", 40, range(2, 41),
                      lambda n: prime_count_closed(n) == prime_count_recursive(n)))
    out.append(_first("enumeration oracle agrees with recursion", 10, range(1, 11),
                      lambda n: prime_count_oracle(n) == prime_count_recursive(n)))
    out.append(_first("abundance bound holds", 48, range(16, 49), lambda n: abundance_gap(n)[2]))
    return out


def suite_ideals(max_len=12):
    out = list(pentagon_witness(max_len))
    elems = enumerate_upto(min(6, max_len))
    ideal = {a: truncated_members(principal(a), max_len).elements for a in elems}
    out.append(_first("aM ⊆ bM iff b | a", max_len, cartesian(elems, elems),
                      lambda t: (ideal[t[0]] <= ideal[t[1]]) == principal_subset(*t)))

    def meet_ok(t):
        g = principal_intersect(*t)
        expect = ideal[g] if g is not None else frozenset()
        return ideal[t[0]] & ideal[t[1]] == expect
    out.append(_first("aM ∩ bM is bM, aM or empty", max_len, cartesian(elems, elems), meet_ok))

    def hull_ok(t):
        a, b = t
        d = gcd(a, b)
        members = truncated_members(join(principal(a), principal(b)), max_len).elements
        if not all(divides(d, x) for x in members):
            return False
        # any principal ideal holding the join is generated by a divisor of gcd(a, b)
        for c in elems:
            if divides(c, a) and divides(c, b) and all(divides(c, x) for x in members):
                if not divides(c, d):
                    return False
        return True
    pairs = [(a, b) for i, a in enumerate(elems) for b in elems[i:]]
    out.append(_first("gcd(a,b)M is the least principal ideal over aM ∨ bM", max_len,
                      pairs, hull_ok))
    gens_pool = enumerate_upto(min(5, max_len))
    rng = random.Random(0)
    for _ in range(5):
        N = submagma(rng.sample(gens_pool, 3))
        out.append(_first(f"every submagma is an ideal: {N!r}", 4,
                          cartesian(N.generators, enumerate_upto(4)),
                          lambda t, N=N: contains(N, multiply(*t))))
    plus = [TWO] + [make("plus", n) for n in range(3, 9)]
    out.append(_first("each generator of a subset of {2, 3_+, ..., 8_+} is essential", 8, plus,
                      lambda g: not contains(submagma([h for h in plus if h is not g]), g)))
    return out


FIG2 = [("{1, 3_-, 5_+}", 5, 3, 2), ("{1, 2, 2^2, 3_-}", 7, 4, 2),
        ("{1, 2, 2^2, 2^3, 2^4}", 6, 5, 1)]


def suite_spectra(max_len=5):
    out = []
    for text, nodes, length, width in FIG2:
        s = spectrum(parse_set(text))
        out.append(VerificationRecord(
            f"spectrum of {text}: {nodes} nodes, length {length}, width {width}", None,
            (len(s.nodes), s.length, s.width) == (nodes, length, width),
            detail=f"got {len(s.nodes)} nodes, length {s.length}, width {s.width}"))
    corpus = [p for k in range(0, 7) for p in enumerate_prime_sets(k, max_len)]
    out.append(_first("spectrum length equals size", max_len, corpus,
                      lambda p: spectrum(p).length == len(p)))
    out.append(_first("nonempty prime sets contain 1", max_len, corpus,
                      lambda p: not len(p) or UNIT in p))
    closures = [segment_closure(p.elements) for p in corpus]
    out.append(_first("segment closures are closed and prime", max_len, closures,
                      lambda s: is_closed_set(s) and is_prime_set(s)))
    pows = [make("pow2", n) for n in range(0, 6)]
    closed = [c for k in range(1, 7) for c in enumerate_closed_sets(k)]
    slim_closed = {c.elements for c in closed if is_slim(c)}
    expected = {frozenset(pows[:n + 1]) for n in range(0, 6)}
    out.append(VerificationRecord("slim closed sets of size <= 6 are the segments [2^n]", 6,
                                  slim_closed == expected, detail=f"{len(closed)} closed sets"))
    return out


def suite_families(max_len=5):
    out = []
    counts = [len(enumerate_rooted_trees(k)) for k in range(1, 8)]
    out.append(VerificationRecord("rooted tree counts 1, 1, 2, 4, 9, 20, 48", 7,
                                  counts == [1, 1, 2, 4, 9, 20, 48], detail=str(counts)))
    for k in range(1, 4):
        schemes = [labelize(T) for T in enumerate_rooted_trees(k)]
        out.append(_first(f"every prime set of size {k} fits a labelled tree scheme", max_len,
                          enumerate_prime_sets(k, max_len),
                          lambda p, schemes=schemes: any(match_scheme(p, s) for s in schemes)))
    for k in range(1, 5):
        union = set()
        for T in enumerate_rooted_trees(k):
            union.update(family_instances(T, max_len))
        direct = set(enumerate_prime_sets(k, max_len))
        out.append(VerificationRecord(f"families of size {k} give every prime set of size {k}",
                                      max_len, union == direct,
                                      detail=f"{len(union)} vs {len(direct)}"))
        out.append(_first(f"arborescences of size-{k} prime sets have {k} nodes", max_len,
                          direct, lambda p: arborescence(p).size == len(p)))
    for T in enumerate_rooted_trees(min(5, max_len)):
        out.append(_first(f"width >= leaves for family {T.encoding}", max_len,
                          family_instances(T, max_len),
                          lambda p, T=T: spectrum(p).width >= T.leaves))
    return out


SUITES = {
    "arithmetic": suite_arithmetic,
    "ideals": suite_ideals,
    "spectra": suite_spectra,
    "families": suite_families,
}


def run_suite(name, max_len=None):
    fn = SUITES[name]
    return fn(DEFAULTS[name] if max_len is None else max_len)
