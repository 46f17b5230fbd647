import copy
import pickle
import threading

import pytest
from hypothesis import given, strategies as st

from freemagma.counting import catalan_count
from freemagma.config import configure, LIMITS
from freemagma.elements import (TWO, UNIT, add, enumerate_level, enumerate_upto, format_element,
                                format_set, length, make, parse_element, parse_set, precedes,
                                reverse, segment, split)
from freemagma.errors import DomainError, ParseError, ResourceCapError

from conftest import from_tuple, small_elements, to_tuple, tuple_trees

P = parse_element


def test_parse_examples():
    assert P("1") is UNIT
    assert P("(1+(1+1))") is make("plus", 3)
    e = P("2^3")
    assert e.length == 8
    assert e is add(P("2^2"), P("2^2"))
    assert P(" ( 1 +\t1 ) ") is TWO


def test_format_examples():
    assert format_element(UNIT, "canonical") == "1"
    assert format_element(make("minus", 3), "pretty") == "3_-"
    assert format_element(add(TWO, make("plus", 3)), "canonical") == "((1+1)+(1+(1+1)))"


def test_pretty_precedence():
    # pow2 beats n_+ and n_- on 2, and n_+ beats n_- nowhere else
    assert format_element(TWO, "pretty") == "2"
    assert format_element(P("2^2"), "pretty") == "2^2"
    assert format_element(add(TWO, make("plus", 3)), "pretty") == "(2+3_+)"
    assert format_element(add(UNIT, make("minus", 3)), "pretty") == "(1+3_-)"


def test_length_examples():
    assert length(UNIT) == 1
    assert length(make("plus", 3)) == 3
    assert length(make("pow2", 10)) == 1024
    assert make("pow2", 70).length == 2 ** 70


def test_add_and_split():
    assert add(UNIT, UNIT) is TWO
    assert split(UNIT) is None
    assert split(make("minus", 3)) == (TWO, UNIT)
    assert split(P("2^2")) == (TWO, TWO)


def test_make_examples():
    assert make("plus", 1) is UNIT
    assert make("minus", 2) is TWO is make("plus", 2)
    assert make("pow2", 0) is UNIT
    with pytest.raises(DomainError):
        make("plus", 0)
    with pytest.raises(DomainError):
        make("pow2", -1)
    with pytest.raises(DomainError):
        make("cube", 2)


def test_precedes_examples():
    for x in enumerate_upto(5):
        assert precedes(UNIT, x)
    x, y = make("plus", 3), TWO
    assert precedes(x, add(x, y)) and precedes(y, add(x, y))
    assert not precedes(make("plus", 3), make("minus", 3))


def test_segment_examples():
    assert segment(TWO) == {UNIT, TWO}
    assert segment(make("minus", 3)) == {UNIT, TWO, make("minus", 3)}
    assert segment(P("2^2")) == {UNIT, TWO, P("2^2")}


def test_reverse_examples():
    assert reverse(UNIT) is UNIT
    for n in range(1, 9):
        assert reverse(make("plus", n)) is make("minus", n)


def test_level_examples():
    assert enumerate_level(1) == [UNIT]
    four = {P(s) for s in ("4_-", "(1+3_-)", "2^2", "(3_++1)", "4_+")}
    assert set(enumerate_level(4)) == four
    five = {P(s) for s in ("5_-", "(1+4_-)", "(2+3_-)", "(2+3_+)", "(3_-+2)", "(3_++2)",
                           "(1+(1+3_-))", "(1+2^2)", "(2^2+1)", "((3_++1)+1)", "(4_++1)",
                           "(1+(3_++1))", "((1+3_-)+1)", "5_+")}
    assert len(five) == 14
    assert set(enumerate_level(5)) == five


@pytest.mark.parametrize("n", range(1, 13))
def test_level_counts(n):
    level = enumerate_level(n)
    assert len(level) == catalan_count(n)
    assert len(set(level)) == len(level)
    assert all(e.length == n for e in level)


@pytest.mark.parametrize("n", range(1, 9))
def test_level_matches_tuple_oracle(n):
    assert set(enumerate_level(n)) == {from_tuple(t) for t in tuple_trees(n)}


def test_level_order_is_canonical():
    level = enumerate_level(6)
    assert level == sorted(level, key=lambda e: e.key)


def test_enumeration_cap():
    old = LIMITS.enumeration_cap
    try:
        configure(enumeration_cap=100)
        with pytest.raises(ResourceCapError) as info:
            enumerate_level(9)
        assert info.value.cap_name == "enumeration_cap"
    finally:
        configure(enumeration_cap=old)
    with pytest.raises(TypeError):
        configure(nonsense=1)


def test_split_unique_up_to_10():
    # interning: the only pair yielding e is split(e)
    seen = {}
    for n in range(2, 11):
        for e in enumerate_level(n):
            x, y = split(e)
            assert add(x, y) is e
            assert seen.setdefault((x, y), e) is e


def test_parse_errors():
    for bad in ("", "(1+1", "1+1", "7", "0_+", "03_+", "3^2", "2^", "(1+1))", "(1 1)",
                "{1,", "x"):
        with pytest.raises(ParseError) as info:
            P(bad) if not bad.startswith("{") else parse_set(bad)
        assert info.value.text == bad


def test_parse_set():
    assert parse_set("{}") == frozenset()
    assert parse_set("{1, 2, 2}") == {UNIT, TWO}
    assert format_set(parse_set("{3_+, 1, 2}")) == "{1, 2, 3_+}"


def test_identity_semantics():
    e = P("(2+3_+)")
    assert copy.copy(e) is e and copy.deepcopy(e) is e
    assert pickle.loads(pickle.dumps(e)) is e
    assert {e: 1}[P("((1+1)+(1+(1+1)))")] == 1


def test_concurrent_interning_agrees():
    results = []

    def build():
        results.append([add(from_tuple(t), UNIT) for t in tuple_trees(7)])
    threads = [threading.Thread(target=build) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for r in results[1:]:
        assert all(a is b for a, b in zip(r, results[0]))


@given(small_elements(8), small_elements(8))
def test_gradation(x, y):
    assert add(x, y).length == x.length + y.length


@given(small_elements(8), small_elements(8))
def test_precedes_iff_in_segment(x, y):
    assert precedes(x, y) == (x in segment(y))


@given(small_elements(8), small_elements(8))
def test_reverse_antimorphism(x, y):
    assert reverse(add(x, y)) is add(reverse(y), reverse(x))
    assert reverse(reverse(x)) is x


@given(small_elements(10), st.sampled_from(["canonical", "pretty"]))
def test_format_round_trip(e, style):
    assert P(format_element(e, style)) is e


@given(small_elements(8))
def test_tuple_round_trip(e):
    assert from_tuple(to_tuple(e)) is e


def test_deep_elements_format_without_recursion():
    e = make("plus", 50_000)
    text = format_element(e, "canonical")
    assert text.count("1") == 50_000
    assert format_element(e, "pretty") == "50000_+"
