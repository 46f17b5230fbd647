"""Elements of the cyclic free magma as interned binary trees.

Every tree is built through :func:`add` (or the :data:`UNIT` singleton), which
looks the pair up in a global table first, so two elements are equal exactly
when they are the same Python object.  This keeps ``2^k`` at ``k + 1`` nodes
no matter how large its leaf count gets.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .config import LIMITS
from .errors import DomainError, ParseError, ResourceCapError

__all__ = [
    "MagmaElement", "UNIT", "TWO", "add", "split", "length", "make",
    "parse_element", "parse_set", "format_element", "format_set",
    "precedes", "segment", "reverse", "enumerate_level", "enumerate_upto",
    "sorted_elements",
]


class MagmaElement:
    """A node of the intern table.  Do not instantiate directly; use :func:`add`."""

    __slots__ = ("left", "right", "length", "key", "is_plus", "is_minus", "is_pow2",
                 "__weakref__")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        if left is None:
            self.length = 1
            self.key = (1,)
            self.is_plus = self.is_minus = self.is_pow2 = True
        else:
            self.length = left.length + right.length
            # level order: length, then left subtree, then right subtree
            self.key = (self.length, left.key, right.key)
            self.is_plus = left.left is None and right.is_plus
            self.is_minus = right.left is None and left.is_minus
            self.is_pow2 = left is right and left.is_pow2

    @property
    def is_unit(self):
        return self.left is None

    # canonical enumeration order, used for sorting; the tree order is precedes()
    def __lt__(self, other):
        return self.key < other.key

    def __add__(self, other):
        if not isinstance(other, MagmaElement):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if not isinstance(other, MagmaElement):
            return NotImplemented
        from .arithmetic import multiply
        return multiply(self, other)

    def __reduce__(self):
        if self.left is None:
            return (_unit, ())
        return (add, (self.left, self.right))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __repr__(self):
        return f"MagmaElement({format_element(self, 'pretty')})"

    def __str__(self):
        return format_element(self, "pretty")


# keyed by (left, right); element hashing is by identity
_INTERN: dict = {}

UNIT = MagmaElement(None, None)


def _unit():
    return UNIT


def add(x: MagmaElement, y: MagmaElement) -> MagmaElement:
    """Return the interned tree ``x + y``."""
    k = (x, y)
    node = _INTERN.get(k)
    if node is None:
        # setdefault is atomic, so racing constructors agree on one node
        node = _INTERN.setdefault(k, MagmaElement(x, y))
    return node


TWO = add(UNIT, UNIT)


def split(e: MagmaElement):
    """The unique ``(left, right)`` with ``add(left, right) is e``, or None for 1."""
    if e.left is None:
        return None
    return e.left, e.right


def length(e: MagmaElement) -> int:
    return e.length


def intern_size() -> int:
    return len(_INTERN) + 1


@lru_cache(maxsize=None)
def make(kind: str, n: int) -> MagmaElement:
    """Build ``n_-``, ``n_+`` or ``2^n``."""
    if kind in ("minus", "plus"):
        if n < 1:
            raise DomainError(f"{kind} index must be >= 1, got {n}")
        e = UNIT
        for _ in range(n - 1):
            e = add(e, UNIT) if kind == "minus" else add(UNIT, e)
        return e
    if kind == "pow2":
        if n < 0:
            raise DomainError(f"pow2 exponent must be >= 0, got {n}")
        e = UNIT
        for _ in range(n):
            e = add(e, e)
        return e
    raise DomainError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------- parsing

class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self):
        self.skip()
        start = self.pos
        t = self.text
        while self.pos < len(t) and t[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        digits = t[start:self.pos]
        value = int(digits)
        if value < 1:
            self.error("shorthand index must be >= 1", start)
        if digits[0] == "0":
            self.error("leading zero in number", start)
        return value, start

    def elem(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            left = self.elem()
            self.expect("+")
            right = self.elem()
            self.expect(")")
            return add(left, right)
        if c.isdigit():
            n, start = self.nat()
            c = self.peek()
            if c == "^":
                if n != 2:
                    self.error("only powers of 2 are supported", start)
                self.pos += 1
                k, _ = self.nat()
                return make("pow2", k)
            if c == "_":
                self.pos += 1
                sign = self.peek()
                if sign == "+":
                    self.pos += 1
                    return make("plus", n)
                if sign == "-":
                    self.pos += 1
                    return make("minus", n)
                self.error("expected '+' or '-' after '_'")
            if n == 1:
                return UNIT
            if n == 2:
                return TWO
            self.error(f"bare number {n} is ambiguous; use {n}_+, {n}_- or a tree", start)
        if c == "":
            self.error("unexpected end of input")
        self.error(f"unexpected character {c!r}")

    def done(self):
        if self.peek() != "":
            self.error("trailing input")


def parse_element(text: str) -> MagmaElement:
    """Parse element text such as ``"(1+(1+1))"``, ``"3_+"`` or ``"2^3"``."""
    p = _Parser(text)
    e = p.elem()
    p.done()
    return e


def parse_set(text: str) -> frozenset:
    """Parse a set literal ``{e1, e2, ...}``."""
    p = _Parser(text)
    p.expect("{")
    out = []
    if p.peek() == "}":
        p.pos += 1
    else:
        out.append(p.elem())
        while p.peek() == ",":
            p.pos += 1
            out.append(p.elem())
        p.expect("}")
    p.done()
    return frozenset(out)


# ---------------------------------------------------------------- printing

def _shorthand(e):
    if e.left is None:
        return "1"
    if e.is_pow2:
        k = e.length.bit_length() - 1
        return "2" if k == 1 else f"2^{k}"
    if e.is_plus:
        return f"{e.length}_+"
    if e.is_minus:
        return f"{e.length}_-"
    return None


def format_element(e: MagmaElement, style: str = "canonical") -> str:
    if style not in ("canonical", "pretty"):
        raise DomainError(f"unknown style {style!r}")
    pretty = style == "pretty"
    out = []
    stack = [e]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        if item.left is None:
            out.append("1")
            continue
        if pretty:
            tok = _shorthand(item)
            if tok is not None:
                out.append(tok)
                continue
        stack.extend((")", item.right, "+", item.left, "("))
    return "".join(out)


def sorted_elements(elems: Iterable[MagmaElement]) -> list:
    return sorted(elems, key=lambda e: e.key)


def format_set(elems: Iterable[MagmaElement], style: str = "pretty") -> str:
    return "{" + ", ".join(format_element(e, style) for e in sorted_elements(elems)) + "}"


# ---------------------------------------------------------------- order

def precedes(y: MagmaElement, x: MagmaElement) -> bool:
    """True iff ``y <= x``: y is reached from x by repeatedly taking a component."""
    if y.length > x.length:
        return False
    target = y.length
    seen = set()
    stack = [x]
    while stack:
        z = stack.pop()
        if z is y:
            return True
        if z.left is None or z.length <= target or z in seen:
            continue
        seen.add(z)
        stack.append(z.left)
        stack.append(z.right)
    return False


@lru_cache(maxsize=4096)
def segment(e: MagmaElement) -> frozenset:
    """All distinct subtrees of e, e itself and 1 included."""
    seen = {e}
    stack = [e]
    while stack:
        z = stack.pop()
        if z.left is None:
            continue
        for c in (z.left, z.right):
            if c not in seen:
                seen.add(c)
                stack.append(c)
    return frozenset(seen)


@lru_cache(maxsize=None)
def reverse(e: MagmaElement) -> MagmaElement:
    """Mirror image: ``reverse(x + y) = reverse(y) + reverse(x)``."""
    if e.left is None:
        return e
    return add(reverse(e.right), reverse(e.left))


# ---------------------------------------------------------------- levels

def _catalan(n):
    from .counting import catalan_count
    return catalan_count(n)


@lru_cache(maxsize=None)
def _level(n):
    if n == 1:
        return (UNIT,)
    out = []
    for i in range(1, n):
        rights = _level(n - i)
        for left in _level(i):
            out.extend(add(left, r) for r in rights)
    return tuple(out)


def enumerate_level(n: int) -> list:
    """Every element of length n, ordered by (length of left, left, right)."""
    if n < 1:
        raise DomainError(f"level must be >= 1, got {n}")
    count = _catalan(n)
    if count > LIMITS.enumeration_cap:
        raise ResourceCapError("enumeration_cap", LIMITS.enumeration_cap, count)
    return list(_level(n))


def enumerate_upto(max_len: int) -> list:
    """Every element of length <= max_len, level by level."""
    total = sum(_catalan(n) for n in range(1, max_len + 1))
    if total > LIMITS.enumeration_cap:
        raise ResourceCapError("enumeration_cap", LIMITS.enumeration_cap, total)
    out = []
    for n in range(1, max_len + 1):
        out.extend(_level(n))
    return out
