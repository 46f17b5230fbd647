from itertools import product as cartesian

import networkx as nx
import pytest

from freemagma.config import LIMITS, configure
from freemagma.elements import TWO, UNIT, add, enumerate_upto, make, parse_set
from freemagma.errors import DomainError, ParseError, ResourceCapError
from freemagma.families import (ONE, Pm, RootedTree, Var, enumerate_rooted_trees, evaluate,
                                family_instances, family_record, labelize, match_scheme,
                                parse_scheme, substitute)
from freemagma.primesets import (PrimeSet, arborescence, enumerate_prime_sets, is_prime_set,
                                 spectrum)

S = parse_set
THREE_P, THREE_M = make("plus", 3), make("minus", 3)
PATH3 = RootedTree.parse("((()))")
STAR3 = RootedTree.parse("(()())")


def iso_classes(k):
    """Rooted trees on k nodes up to isomorphism, from all parent arrays."""
    reps = []

    def arrays(i, acc):
        if i == k:
            yield acc
            return
        for p in range(i):
            yield from arrays(i + 1, acc + [p])
    for parents in arrays(1, []):
        g = nx.DiGraph()
        g.add_nodes_from(range(k))
        g.add_edges_from((p, c) for c, p in enumerate(parents, start=1))
        if not any(nx.is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return len(reps)


# ------------------------------------------------------------ rooted trees

def test_tree_counts():
    counts = [len(enumerate_rooted_trees(k)) for k in range(1, 9)]
    assert counts == [1, 1, 2, 4, 9, 20, 48, 115]
    assert len(enumerate_rooted_trees(5)) == 9


@pytest.mark.parametrize("k", range(1, 7))
def test_tree_counts_match_isomorphism_oracle(k):
    assert len(enumerate_rooted_trees(k)) == iso_classes(k)


def test_tree_encodings():
    trees = enumerate_rooted_trees(4)
    assert all(t.size == 4 for t in trees)
    assert len({t.encoding for t in trees}) == 4
    assert RootedTree.parse("(()(()))") == RootedTree.parse("((())())")
    assert RootedTree.parse("()").leaves == 1
    assert STAR3.leaves == 2 and PATH3.leaves == 1
    assert PATH3.is_path and not STAR3.is_path
    assert [p for _, p in STAR3.bfs()] == [None, 0, 0]


def test_tree_errors():
    for bad in ("", "(", "())", "()()", "(x)"):
        with pytest.raises(ParseError):
            RootedTree.parse(bad)
    with pytest.raises(DomainError):
        enumerate_rooted_trees(0)
    old = LIMITS.tree_cap
    try:
        configure(tree_cap=5)
        with pytest.raises(ResourceCapError):
            enumerate_rooted_trees(6)
    finally:
        configure(tree_cap=old)


# ------------------------------------------------------------ labelling and terms

def test_labelize_examples():
    assert labelize(RootedTree.parse("()")).texts() == ["1"]
    assert str(labelize(PATH3)) == "{1, (a1±1), (a2±(a1±1))}"
    assert str(labelize(STAR3)) == "{1, (a1±1), (a2±1)}"


def test_labelize_fresh_tokens():
    for T in enumerate_rooted_trees(5):
        sch = labelize(T)
        assert len(sch.terms) == T.size
        assert sum(1 for t in sch.terms if t is ONE) == 1
        assert len(set(sch.variables)) == T.size - 1
        assert len(set(sch.tokens)) == T.size - 1


def test_substitute_examples():
    sch = parse_scheme("{1, (a±1)}")
    tok = sch.tokens[0]
    assert substitute(sch, {"a": TWO}, {tok: "plus"}) == {UNIT, THREE_M}
    assert substitute(sch, {"a": TWO}, {tok: "minus"}) == {UNIT, THREE_P}
    path = labelize(PATH3)
    got = substitute(path, {"a1": TWO, "a2": THREE_P}, {1: "+", 2: "+"})
    assert got == {UNIT, THREE_M, add(THREE_P, THREE_M)}


def test_substitute_may_collide():
    sch = labelize(STAR3)
    got = substitute(sch, {"a1": TWO, "a2": TWO}, {1: True, 2: True})
    assert len(got) == 2


def test_shared_tokens():
    sch = parse_scheme("{1, (a+-1), (b±(a±1))}")
    assert sch.variables == ("a", "b")
    assert sch.terms[1].token == sch.terms[2].right.token
    assert len(sch.tokens) == 2
    sign_text = sch.texts({sch.terms[1].token: "minus", sch.terms[2].token: "plus"})
    assert sign_text == ["1", "(a−1)", "(b+(a−1))"]


def test_evaluate_errors():
    t = Pm(Var("a"), ONE, 1)
    with pytest.raises(DomainError):
        evaluate(t, {}, {1: "+"})
    with pytest.raises(DomainError):
        evaluate(t, {"a": TWO}, {})
    with pytest.raises(DomainError):
        evaluate(t, {"a": TWO}, {1: "?"})
    with pytest.raises(ParseError):
        parse_scheme("{1, (a*1)}")
    with pytest.raises(ParseError):
        parse_scheme("{1")


# ------------------------------------------------------------ families

def test_family_examples():
    single = RootedTree.parse("()")
    for L in (1, 4):
        assert family_instances(single, L) == [PrimeSet({UNIT})]
    two = family_instances(RootedTree.parse("(())"), 3)
    assert {p.elements for p in two} == {S("{1, 2}"), S("{1, 3_-}"), S("{1, 3_+}")}


def test_family_instances_by_substitution():
    # brute force: every assignment from elements of length <= L-1 and every sign choice
    L = 5
    for T in enumerate_rooted_trees(3):
        sch = labelize(T)
        pool = enumerate_upto(L - 1)
        expect = set()
        for values in cartesian(pool, repeat=len(sch.variables)):
            env = dict(zip(sch.variables, values))
            for signs in cartesian((True, False), repeat=len(sch.tokens)):
                got = substitute(sch, env, dict(zip(sch.tokens, signs)))
                if len(got) == T.size and max(e.length for e in got) <= L:
                    expect.add(got)
        assert {p.elements for p in family_instances(T, L)} == expect


@pytest.mark.parametrize("k", range(1, 5))
def test_families_cover_prime_sets(k):
    L = 5
    union = set()
    for T in enumerate_rooted_trees(k):
        for p in family_instances(T, L):
            assert is_prime_set(p.elements) and len(p) == k
            union.add(p)
    assert union == set(enumerate_prime_sets(k, L))


@pytest.mark.parametrize("k", range(1, 5))
def test_arborescence_family_round_trip(k):
    L = 5
    cache = {}
    for p in enumerate_prime_sets(k, L):
        T = arborescence(p)
        assert T.size == k
        if T not in cache:
            cache[T] = set(family_instances(T, L))
        assert p in cache[T]


def test_small_prime_sets_fit_schemes():
    for k in range(1, 4):
        schemes = [labelize(T) for T in enumerate_rooted_trees(k)]
        for p in enumerate_prime_sets(k, 5):
            hit = [m for m in (match_scheme(p.elements, s) for s in schemes) if m]
            assert hit
            env, signs = hit[0]
            assert all(v in enumerate_upto(5) for v in env.values())


def test_match_scheme_witness_evaluates():
    sch = labelize(STAR3)
    target = S("{1, 3_-, 5_+}")
    env, signs = match_scheme(target, sch)
    assert substitute(sch, env, signs) == target
    assert match_scheme(target, labelize(PATH3)) is None


@pytest.mark.parametrize("T", enumerate_rooted_trees(5), ids=lambda t: t.encoding)
def test_width_at_least_leaves(T):
    for p in family_instances(T, 5):
        assert spectrum(p).width >= T.leaves


def test_family_record_shape():
    rec = family_record(STAR3, 3)
    assert rec["tree"] == "(()())"
    assert rec["scheme"] == ["1", "(a1±1)", "(a2±1)"]
    assert rec["bound"] == 3
    assert ["1", "(1+(1+1))", "((1+1)+1)"] in rec["instances"]
    assert family_record(STAR3)["instances"] == []


def test_family_cap():
    old = LIMITS.primeset_cap
    try:
        configure(primeset_cap=3)
        with pytest.raises(ResourceCapError):
            family_instances(PATH3, 5)
    finally:
        configure(primeset_cap=old)
    with pytest.raises(DomainError):
        family_instances(PATH3, 0)
