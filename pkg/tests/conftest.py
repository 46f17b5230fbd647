"""Independent oracles shared by the test modules.

None of these call the code path they check: trees are built from nested
tuples, divisibility is decided by trying every quotient, and so on.
"""
import sys
from functools import lru_cache
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from freemagma.elements import UNIT, add, enumerate_upto

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@lru_cache(maxsize=None)
def tuple_trees(n):
    """Binary trees with n leaves as nested tuples; a leaf is ``1``."""
    if n == 1:
        return (1,)
    out = []
    for i in range(1, n):
        for a in tuple_trees(i):
            for b in tuple_trees(n - i):
                out.append((a, b))
    return tuple(out)


def from_tuple(t):
    if t == 1:
        return UNIT
    return add(from_tuple(t[0]), from_tuple(t[1]))


def to_tuple(e):
    if e.left is None:
        return 1
    return (to_tuple(e.left), to_tuple(e.right))


def brute_divides(a, x):
    """a | x by searching every y of the right length for a*y == x."""
    from freemagma.arithmetic import multiply
    if x.length % a.length:
        return False
    return any(multiply(a, from_tuple(t)) is x for t in tuple_trees(x.length // a.length))


def brute_prime_sets(k, L):
    """All prime sets of size k with elements of length <= L, by subset search."""
    pool = [from_tuple(t) for n in range(1, L + 1) for t in tuple_trees(n)]
    out = set()
    for combo in combinations(pool, k):
        s = frozenset(combo)
        if all(to_tuple(z) == 1 or from_tuple(to_tuple(z)[0]) in s
               or from_tuple(to_tuple(z)[1]) in s for z in s):
            out.add(s)
    return out


def small_elements(max_len):
    return st.sampled_from(enumerate_upto(max_len))


@pytest.fixture(scope="session")
def upto6():
    return enumerate_upto(6)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
