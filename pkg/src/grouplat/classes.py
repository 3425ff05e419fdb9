"""Classes of groups over a universe, and the expression language for them.

A class is an isomorphism-closed set of catalog entries that contains the
trivial group whenever it is non-empty; the empty class is allowed and is
preserved by every closure operator. Class expressions combine named
predicates, explicit member lists in braces, union ``+`` and intersection
``&`` (binding tighter than union).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExpressionError, NotPrime, UniverseMismatch, UnknownName, UnknownPredicate
from .groups import _is_prime
from .universe import Universe


class GroupClass:
    """A normalized, isomorphism-closed class over one universe."""

    __slots__ = ("universe", "ids")

    def __init__(self, universe: Universe, ids):
        ids = frozenset(int(i) for i in ids)
        for i in ids:
            if not 0 <= i < len(universe.entries):
                raise ValueError(f"id {i} outside the universe")
        if ids:
            ids |= {0}
        self.universe = universe
        self.ids = ids

    # -- set algebra ---------------------------------------------------------

    def _check(self, other: "GroupClass") -> None:
        if self.universe is not other.universe and self.universe != other.universe:
            raise UniverseMismatch("classes live over different universes")

    def union(self, other: "GroupClass") -> "GroupClass":
        self._check(other)
        return GroupClass(self.universe, self.ids | other.ids)

    def intersect(self, other: "GroupClass") -> "GroupClass":
        self._check(other)
        return GroupClass(self.universe, self.ids & other.ids)

    def is_subset(self, other: "GroupClass") -> bool:
        self._check(other)
        return self.ids <= other.ids

    def __or__(self, other):
        return self.union(other)

    def __and__(self, other):
        return self.intersect(other)

    def __le__(self, other):
        return self.is_subset(other)

    def __contains__(self, i: int) -> bool:
        return i in self.ids

    def __len__(self) -> int:
        return len(self.ids)

    def __bool__(self) -> bool:
        return bool(self.ids)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupClass):
            return NotImplemented
        self._check(other)
        return self.ids == other.ids

    def __hash__(self) -> int:
        return hash((self.universe.max_order, self.ids))

    # -- presentation ----------------------------------------------------------

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(sorted(self.ids))

    def render(self) -> str:
        if not self.ids:
            return "{}"
        return "{" + ", ".join(self.universe.name(i) for i in self.members) + "}"

    def __repr__(self) -> str:
        return f"GroupClass({self.render()})"


def empty_class(u: Universe) -> GroupClass:
    return GroupClass(u, ())


def full_class(u: Universe) -> GroupClass:
    return GroupClass(u, u.all_ids())


def lift_class(x: GroupClass, target: Universe) -> GroupClass:
    """Carry a class into a larger universe by catalog name.

    Names are stable across bounds (the build emits identical entries in
    identical relative order for every shared order), so this is exact.
    """
    ids = []
    for i in x.members:
        name = x.universe.name(i)
        j = target.name_index.get(name)
        if j is None:
            raise UniverseMismatch(f"{name} is missing from the target universe")
        ids.append(j)
    return GroupClass(target, ids)


def restrict_class(x: GroupClass, bound: int, target: Universe | None = None) -> GroupClass:
    """Drop members above ``bound``, optionally mapping back by name."""
    kept = [i for i in x.members if x.universe.order(i) <= bound]
    if target is None:
        return GroupClass(x.universe, kept)
    back = GroupClass(x.universe, kept)
    return lift_class(back, target)


# -- predicates --------------------------------------------------------------------


def _elementary_abelian_for(u: Universe, p: int) -> frozenset[int]:
    out = set()
    for e in u.entries:
        if not e.flags.abelian:
            continue
        orders = set(int(v) for v in e.group.element_orders)
        if orders <= {1, p}:
            out.add(e.iso_id)
    return frozenset(out)


def predicate_class(u: Universe, head: str, arg: int | None = None) -> GroupClass:
    if head == "trivial":
        return GroupClass(u, (0,))
    if head == "all":
        return full_class(u)
    if head == "abelian":
        return GroupClass(u, (e.iso_id for e in u.entries if e.flags.abelian))
    if head == "nilpotent":
        return GroupClass(u, (e.iso_id for e in u.entries if e.flags.nilpotent))
    if head == "soluble":
        return GroupClass(u, (e.iso_id for e in u.entries if e.flags.soluble))
    if head == "p-group":
        assert arg is not None
        if not _is_prime(arg):
            raise NotPrime(arg)
        ids = [e.iso_id for e in u.entries if e.flags.p_group_for == arg]
        return GroupClass(u, ids + [0])
    if head == "elementary-abelian":
        assert arg is not None
        if not _is_prime(arg):
            raise NotPrime(arg)
        return GroupClass(u, _elementary_abelian_for(u, arg))
    raise UnknownPredicate(f"unknown predicate {head!r}")


_BARE_PREDICATES = ("trivial", "all", "abelian", "nilpotent", "soluble")
_PARAM_PREDICATES = ("p-group", "elementary-abelian")


# -- expression parsing ---------------------------------------------------------------


@dataclass(frozen=True)
class NameAtom:
    text: str


@dataclass(frozen=True)
class ExplicitAtom:
    names: tuple[str, ...]


@dataclass(frozen=True)
class UnionNode:
    left: object
    right: object


@dataclass(frozen=True)
class InterNode:
    left: object
    right: object


_DELIMS = "{},+&"


def _tokenize_class(text: str) -> list[str]:
    """Split into delimiters and names; parenthesized spans stay inside names."""
    tokens: list[str] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _DELIMS:
            tokens.append(ch)
            i += 1
            continue
        j = i
        depth = 0
        while j < n:
            c = text[j]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0:
                    raise ExpressionError(f"unbalanced ')' in class expression at {j}")
                depth -= 1
            elif depth == 0 and (c.isspace() or c in _DELIMS):
                break
            j += 1
        if depth != 0:
            raise ExpressionError("unbalanced '(' in class expression")
        tokens.append(text[i:j])
        i = j
    return tokens


def parse_class_expr(text: str):
    tokens = _tokenize_class(text)
    if not tokens:
        raise ExpressionError("empty class expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ExpressionError("unexpected end of class expression")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ExpressionError(f"expected {expected!r}, found {tok!r}")
        pos += 1
        return tok

    def atom():
        tok = peek()
        if tok == "{":
            take("{")
            names: list[str] = []
            if peek() == "}":
                take("}")
                return ExplicitAtom(())
            while True:
                nm = take()
                if nm in _DELIMS:
                    raise ExpressionError(f"expected a group name, found {nm!r}")
                names.append(nm)
                sep = take()
                if sep == "}":
                    return ExplicitAtom(tuple(names))
                if sep != ",":
                    raise ExpressionError(f"expected ',' or '}}', found {sep!r}")
        if tok is None or tok in _DELIMS:
            raise ExpressionError(f"expected a class atom, found {tok!r}")
        take()
        return NameAtom(tok)

    def term():
        node = atom()
        while peek() == "&":
            take("&")
            node = InterNode(node, atom())
        return node

    def expr():
        node = term()
        while peek() == "+":
            take("+")
            node = UnionNode(node, term())
        return node

    tree = expr()
    if pos != len(tokens):
        raise ExpressionError(f"trailing input in class expression: {tokens[pos]!r}")
    return tree


def _split_param(name: str) -> tuple[str, int] | None:
    if name.endswith(")") and "(" in name:
        head, _, rest = name.partition("(")
        body = rest[:-1]
        if body.isdigit():
            return head, int(body)
    return None


def _resolve_name(u: Universe, name: str) -> GroupClass:
    if name in _BARE_PREDICATES:
        return predicate_class(u, name)
    param = _split_param(name)
    if param is not None and param[0] in _PARAM_PREDICATES:
        return predicate_class(u, param[0], param[1])
    gid = u.name_index.get(name)
    if gid is not None:
        return GroupClass(u, (gid,))
    if param is not None:
        raise UnknownPredicate(f"unknown predicate {param[0]!r}")
    raise UnknownName(f"{name!r} names neither a predicate nor a catalog group")


def evaluate_class(tree, u: Universe) -> GroupClass:
    if isinstance(tree, NameAtom):
        return _resolve_name(u, tree.text)
    if isinstance(tree, ExplicitAtom):
        ids = []
        for nm in tree.names:
            gid = u.name_index.get(nm)
            if gid is None:
                raise UnknownName(f"{nm!r} is not a catalog group name")
            ids.append(gid)
        return GroupClass(u, ids)
    if isinstance(tree, UnionNode):
        return evaluate_class(tree.left, u).union(evaluate_class(tree.right, u))
    if isinstance(tree, InterNode):
        return evaluate_class(tree.left, u).intersect(evaluate_class(tree.right, u))
    raise TypeError(f"not a class expression node: {tree!r}")


def class_from_text(text: str, u: Universe) -> GroupClass:
    return evaluate_class(parse_class_expr(text), u)
