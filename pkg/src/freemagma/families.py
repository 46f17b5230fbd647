"""Rooted trees, the term language and the families of prime sets they index.

A rooted tree T is labelled top-down: the root gets ``1`` and a child of a node
labelled t gets ``(a ± t)`` with a fresh variable a.  Substituting elements for
the variables and a sign for every ``±`` yields a prime set of size ``|T|``
whenever no two labels collide, and every finite prime set arises this way.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .config import LIMITS
from .elements import UNIT, MagmaElement, add, enumerate_upto
from .errors import DomainError, ParseError, ResourceCapError
from .primesets import PrimeSet, sort_prime_sets


# ------------------------------------------------------------ rooted trees

@dataclass(frozen=True)
class RootedTree:
    """Unordered rooted tree; children are kept sorted by their encodings."""
    children: tuple
    encoding: str = field(compare=False)
    size: int = field(compare=False)

    @classmethod
    def of(cls, children=()):
        kids = tuple(sorted(children, key=lambda t: t.encoding))
        enc = "(" + "".join(t.encoding for t in kids) + ")"
        return cls(kids, enc, 1 + sum(t.size for t in kids))

    @classmethod
    def parse(cls, text: str) -> "RootedTree":
        """Read a parenthesised encoding such as ``"(()(()))"``."""
        stack = [[]]
        for i, ch in enumerate(text):
            if ch.isspace():
                continue
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if len(stack) < 2:
                    raise ParseError("unbalanced ')'", text, i)
                kids = stack.pop()
                stack[-1].append(cls.of(kids))
            else:
                raise ParseError(f"unexpected character {ch!r}", text, i)
        if len(stack) != 1 or len(stack[0]) != 1:
            raise ParseError("expected exactly one tree", text, len(text))
        return stack[0][0]

    def __eq__(self, other):
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.encoding == other.encoding

    def __hash__(self):
        return hash(self.encoding)

    @property
    def leaves(self) -> int:
        if not self.children:
            return 1
        return sum(c.leaves for c in self.children)

    @property
    def is_path(self) -> bool:
        t = self
        while t.children:
            if len(t.children) > 1:
                return False
            t = t.children[0]
        return True

    def bfs(self):
        """Yield ``(node, parent index)`` breadth-first; the root has parent None."""
        queue = deque([(self, None)])
        i = 0
        while queue:
            node, parent = queue.popleft()
            yield node, parent
            for c in node.children:
                queue.append((c, i))
            i += 1

    def __str__(self):
        return self.encoding


def _forests(total, start, pool):
    # multisets of trees from pool[start:] with sizes summing to total
    if total == 0:
        yield ()
        return
    for i in range(start, len(pool)):
        s = pool[i].size
        if s <= total:
            for rest in _forests(total - s, i, pool):
                yield (pool[i],) + rest


def enumerate_rooted_trees(k: int) -> list:
    """One rooted tree per isomorphism class on k nodes, sorted by encoding."""
    if k < 1:
        raise DomainError(f"tree size must be >= 1, got {k}")
    if k > LIMITS.tree_cap:
        raise ResourceCapError("tree_cap", LIMITS.tree_cap, k)
    by_size = {1: [RootedTree.of()]}
    for n in range(2, k + 1):
        pool = [t for m in range(1, n) for t in by_size[m]]
        by_size[n] = sorted((RootedTree.of(f) for f in _forests(n - 1, 0, pool)),
                            key=lambda t: t.encoding)
    return by_size[k]


# ------------------------------------------------------------ terms

class Term:
    __slots__ = ()


@dataclass(frozen=True)
class One(Term):
    def text(self, signs=None):
        return "1"


@dataclass(frozen=True)
class Var(Term):
    name: str

    def text(self, signs=None):
        return self.name


@dataclass(frozen=True)
class Pm(Term):
    """``(left ± right)``; every occurrence of one token takes the same sign."""
    left: Term
    right: Term
    token: int

    def text(self, signs=None):
        op = "±" if signs is None else ("+" if _sign(signs[self.token]) else "−")
        return "(" + self.left.text(signs) + op + self.right.text(signs) + ")"


ONE = One()


def _sign(s) -> bool:
    # True for plus, False for minus
    if s in ("plus", "+", True, 1):
        return True
    if s in ("minus", "-", "−", False, -1):
        return False
    raise DomainError(f"unknown sign {s!r}")


@dataclass(frozen=True)
class TermScheme:
    terms: tuple
    variables: tuple
    tokens: tuple
    tree: RootedTree = None

    def texts(self, signs=None):
        return [t.text(signs) for t in self.terms]

    def __str__(self):
        return "{" + ", ".join(self.texts()) + "}"


def labelize(T: RootedTree) -> TermScheme:
    """Label the root ``1`` and each child ``(a_i ± parent label)``, breadth-first."""
    terms = []
    variables = []
    for i, (_, parent) in enumerate(T.bfs()):
        if parent is None:
            terms.append(ONE)
            continue
        v = Var(f"a{i}")
        variables.append(v.name)
        terms.append(Pm(v, terms[parent], i))
    return TermScheme(tuple(terms), tuple(variables), tuple(range(1, len(terms))), T)


def evaluate(term: Term, assignment, signs, _memo=None) -> MagmaElement:
    memo = {} if _memo is None else _memo
    key = id(term)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if isinstance(term, One):
        out = UNIT
    elif isinstance(term, Var):
        try:
            out = assignment[term.name]
        except KeyError:
            raise DomainError(f"no value for variable {term.name}") from None
    else:
        x = evaluate(term.left, assignment, signs, memo)
        y = evaluate(term.right, assignment, signs, memo)
        try:
            plus = _sign(signs[term.token])
        except KeyError:
            raise DomainError(f"no sign for token {term.token}") from None
        # x − y means y + x
        out = add(x, y) if plus else add(y, x)
    memo[key] = out
    return out


def substitute(scheme: TermScheme, assignment, signs) -> frozenset:
    memo = {}
    return frozenset(evaluate(t, assignment, signs, memo) for t in scheme.terms)


def _unify(term, z, env, signs):
    # extend env/signs so that term evaluates to z; returns the undo list or None
    if isinstance(term, One):
        return [] if z is UNIT else None
    if isinstance(term, Var):
        bound = env.get(term.name)
        if bound is None:
            env[term.name] = z
            return [("v", term.name)]
        return [] if bound is z else None
    if z.left is None:
        return None
    fixed = signs.get(term.token)
    for plus in ((fixed,) if fixed is not None else (True, False)):
        x, y = (z.left, z.right) if plus else (z.right, z.left)
        undo = []
        if fixed is None:
            signs[term.token] = plus
            undo.append(("s", term.token))
        a = _unify(term.left, x, env, signs)
        if a is not None:
            b = _unify(term.right, y, env, signs)
            if b is not None:
                return undo + a + b
            _undo(a, env, signs)
        _undo(undo, env, signs)
    return None


def _undo(steps, env, signs):
    for kind, name in steps:
        (env if kind == "v" else signs).pop(name, None)


def match_scheme(P, scheme: TermScheme):
    """Find ``(assignment, signs)`` making the scheme evaluate to exactly P, or None."""
    target = frozenset(P)
    terms = scheme.terms
    env, signs = {}, {}

    def go(i, hit):
        if i == len(terms):
            return hit == target
        for z in target:
            steps = _unify(terms[i], z, env, signs)
            if steps is None:
                continue
            if go(i + 1, hit | {z}):
                return True
            _undo(steps, env, signs)
        return False
    if go(0, frozenset()):
        return dict(env), dict(signs)
    return None


class _TermParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.tokens = {}

    def peek(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1
        return t[self.pos] if self.pos < len(t) else ""

    def expect(self, s):
        self.peek()
        if not self.text.startswith(s, self.pos):
            raise ParseError(f"expected {s!r}", self.text, self.pos)
        self.pos += len(s)

    def term(self):
        c = self.peek()
        if c == "1":
            self.pos += 1
            return ONE
        if c.isalpha():
            start = self.pos
            self.pos += 1
            while self.pos < len(self.text) and self.text[self.pos].isalnum():
                self.pos += 1
            return Var(self.text[start:self.pos])
        if c == "(":
            start = self.pos
            self.pos += 1
            left = self.term()
            self.peek()
            if self.text.startswith("±", self.pos):
                self.pos += 1
            else:
                self.expect("+-")
            right = self.term()
            self.expect(")")
            # textually equal subterms share one sign token
            shape = self.text[start:self.pos].replace(" ", "").replace("+-", "±")
            token = self.tokens.setdefault(shape, len(self.tokens) + 1)
            return Pm(left, right, token)
        raise ParseError("expected a term", self.text, self.pos)


def parse_scheme(text: str) -> TermScheme:
    """Parse ``{t1, t2, ...}`` written in the term language (``+-`` may replace ``±``)."""
    p = _TermParser(text)
    p.expect("{")
    terms = []
    if p.peek() == "}":
        p.pos += 1
    else:
        terms.append(p.term())
        while p.peek() == ",":
            p.pos += 1
            terms.append(p.term())
        p.expect("}")
    if p.peek() != "":
        raise ParseError("trailing input", text, p.pos)
    names = []

    def collect(t):
        if isinstance(t, Var) and t.name not in names:
            names.append(t.name)
        elif isinstance(t, Pm):
            collect(t.left)
            collect(t.right)
    for t in terms:
        collect(t)
    return TermScheme(tuple(terms), tuple(names), tuple(sorted(set(p.tokens.values()))))


# ------------------------------------------------------------ families

def family_instances(T: RootedTree, L: int) -> list:
    """Distinct prime sets of size ``|T|`` in the family of T, all elements of length <= L."""
    if L < 1:
        raise DomainError(f"length bound must be >= 1, got {L}")
    order = list(T.bfs())
    n = len(order)
    pool = {}
    if L > 1:
        for a in enumerate_upto(L - 1):
            pool.setdefault(a.length, []).append(a)
    found = set()
    values = [UNIT] + [None] * (n - 1)
    used = {UNIT}

    def extend(i):
        if i == n:
            found.add(frozenset(values))
            if len(found) > LIMITS.primeset_cap:
                raise ResourceCapError("primeset_cap", LIMITS.primeset_cap, len(found))
            return
        base = values[order[i][1]]
        for m in range(1, L - base.length + 1):
            for a in pool.get(m, ()):
                for z in {add(a, base), add(base, a)}:
                    # a collision would leave fewer than |T| elements
                    if z in used:
                        continue
                    values[i] = z
                    used.add(z)
                    extend(i + 1)
                    used.discard(z)
        values[i] = None

    extend(1)
    return sort_prime_sets(found)


def family_record(T: RootedTree, L=None) -> dict:
    from .elements import format_element
    scheme = labelize(T)
    rec = {"tree": T.encoding, "scheme": scheme.texts(), "bound": L, "instances": []}
    if L is not None:
        rec["instances"] = [[format_element(e, "canonical") for e in p.sorted]
                            for p in family_instances(T, L)]
    return rec
