"""Flat and stacked X-bar interpretations of dependency trees."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .errors import (
    InvalidInterleaving,
    NonProjectiveInput,
    NotFlatForm,
    UnstackableOrder,
)
from .model import Arc, DependencyTree, DepType, Token, build_tree, check_contiguity


@dataclass(frozen=True)
class XBarNode:
    category: str
    bar: int
    head: int
    children: tuple["XBarNode", ...] = ()
    token: Token | None = None
    # Role of the dependency arc this projection stands for; None at the root.
    role: DepType | None = None

    @property
    def label(self) -> str:
        return "%s%d" % (self.category, self.bar)

    def walk(self) -> Iterator["XBarNode"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def leaves(self) -> list[Token]:
        if self.token is not None:
            return [self.token]
        out = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    def span(self) -> tuple[int, ...]:
        return tuple(t.index for t in self.leaves())

    def text(self) -> str:
        return " ".join(t.form for t in self.leaves())

    @property
    def start(self) -> int:
        node = self
        while node.token is None:
            node = node.children[0]
        return node.token.index


@dataclass(frozen=True)
class XBarTree:
    root: XBarNode
    source: DependencyTree | None = None

    def nodes(self) -> Iterator[XBarNode]:
        return self.root.walk()

    def leaves(self) -> list[Token]:
        return self.root.leaves()


@dataclass(frozen=True)
class Interleaving:
    """Attachment order of one head's modifiers, innermost first."""

    order: tuple[int, ...]


def _leaf(tok: Token, role=None) -> XBarNode:
    return XBarNode(tok.category, 0, tok.index, (), tok, role)


def _require_projective(tree: DependencyTree) -> None:
    violations = check_contiguity(tree)
    if violations:
        raise NonProjectiveInput(violations)


# -- flat interpretation ----------------------------------------------------

def to_flat_xbar(tree: DependencyTree) -> XBarTree:
    """Map every word to a single bar-1 node holding its dependents' bar-1
    projections and its own bar-0 leaf, in word order."""
    _require_projective(tree)

    def project(w, role):
        tok = tree.token(w)
        kids = [project(d, tree.role_of(d)) for d in tree.dependents(w)]
        kids.append(_leaf(tok))
        kids.sort(key=lambda n: n.start)
        return XBarNode(tok.category, 1, w, tuple(kids), None, role)

    return XBarTree(project(tree.root, None), tree)


def from_flat_xbar(xbar: XBarTree) -> DependencyTree:
    """Invert :func:`to_flat_xbar`.  Roles are read from the node annotations."""
    tokens: list[Token] = []
    arcs: list[Arc] = []

    def visit(node, parent_head):
        if node.bar == 0:
            raise NotFlatForm("bare bar-0 node %s outside its projection" % node.label)
        if node.bar != 1:
            raise NotFlatForm("bar-%d node %s in flat tree" % (node.bar, node.label))
        heads = [c for c in node.children if c.bar == 0]
        if len(heads) != 1:
            raise NotFlatForm("%s needs exactly one bar-0 child" % node.label)
        leaf = heads[0]
        if (leaf.token is None or leaf.children or leaf.category != node.category
                or leaf.head != node.head or leaf.token.index != node.head):
            raise NotFlatForm("%s does not project its bar-0 child" % node.label)
        if parent_head is not None:
            if node.head == parent_head:
                raise NotFlatForm("stacked %s over %s" % (node.label, node.label))
            if node.role is None:
                raise NotFlatForm("%s carries no dependency role" % node.label)
            arcs.append(Arc(node.head, parent_head, node.role))
        for child in node.children:
            if child is leaf:
                tokens.append(leaf.token)
            else:
                visit(child, node.head)

    visit(xbar.root, None)
    positions = [t.index for t in tokens]
    if positions != sorted(positions):
        raise NotFlatForm("leaves are not in word order")
    return build_tree(tokens, arcs)


# -- interleavings ----------------------------------------------------------

def _merges(left, right):
    if not left:
        yield tuple(right)
        return
    if not right:
        yield tuple(left)
        return
    for rest in _merges(left[1:], right):
        yield (left[0],) + rest
    for rest in _merges(left, right[1:]):
        yield (right[0],) + rest


def enumerate_interleavings(tree: DependencyTree, head: int) -> list[Interleaving]:
    """Every order of ``head``'s modifiers that works outward on each side."""
    left, right = tree.modifiers(head)
    return [Interleaving(order) for order in sorted(_merges(left, right))]


def is_valid_interleaving(tree: DependencyTree, head: int, order: Sequence[int]) -> bool:
    left, right = tree.modifiers(head)
    order = tuple(order)
    if len(order) != len(left) + len(right) or set(order) != set(left) | set(right):
        return False
    return (tuple(m for m in order if m < head) == left
            and tuple(m for m in order if m > head) == right)


# -- stacked interpretation -------------------------------------------------

_RANK = {DepType.COMPLEMENT: 0, DepType.MODIFIER: 1, DepType.SPECIFIER: 2}


def check_stackable(tree: DependencyTree) -> None:
    """Raise :class:`UnstackableOrder` unless, on each side of every head,
    complements come nearest, then modifiers, then the specifier."""
    for tok in tree.tokens:
        h = tok.index
        deps = tree.dependents(h)
        left = [d for d in reversed(deps) if d < h]
        right = [d for d in deps if d > h]
        for side in (left, right):
            ranks = [_RANK[tree.role_of(d)] for d in side]
            for i in range(1, len(ranks)):
                if ranks[i] < ranks[i - 1]:
                    raise UnstackableOrder(h, side[i - 1])


def _order_for(tree, head, choice):
    given = choice.get(head) if choice else None
    if given is None:
        left, right = tree.modifiers(head)
        return next(_merges(left, right)) if (left or right) else ()
    order = given.order if isinstance(given, Interleaving) else tuple(given)
    if not is_valid_interleaving(tree, head, order):
        raise InvalidInterleaving(head, order)
    return order


def to_stacked_xbar(tree: DependencyTree,
                    choice: Mapping[int, Interleaving | Sequence[int]] | None = None,
                    ) -> XBarTree:
    """Build the stacked tree: complements under the innermost bar-1 node, one
    extra bar-1 node per modifier in ``choice`` order, a bar-2 node on top
    carrying the specifier.

    Heads missing from ``choice`` get their lexicographically first
    interleaving.
    """
    _require_projective(tree)
    check_stackable(tree)
    orders = {t.index: _order_for(tree, t.index, choice) for t in tree.tokens}
    if choice:
        for h in choice:
            tree.token(h)
    return XBarTree(_project_stacked(tree, tree.root, orders), tree)


def _project_stacked(tree, w, orders):
    tok = tree.token(w)
    role = tree.role_of(w)
    cat = tok.category
    core = [_leaf(tok)]
    core += [_project_stacked(tree, c, orders)
             for c in tree.dependents(w, DepType.COMPLEMENT)]
    core.sort(key=lambda n: n.start)
    bar1 = XBarNode(cat, 1, w, tuple(core))
    for m in orders[w]:
        sub = _project_stacked(tree, m, orders)
        pair = (bar1, sub) if bar1.start < sub.start else (sub, bar1)
        bar1 = XBarNode(cat, 1, w, pair)
    top = [bar1]
    spec = tree.specifier(w)
    if spec is not None:
        top.append(_project_stacked(tree, spec, orders))
        top.sort(key=lambda n: n.start)
    return XBarNode(cat, 2, w, tuple(top), None, role)


def interleaving_space(tree: DependencyTree) -> list[tuple[int, list[Interleaving]]]:
    """(head, interleavings) for every token, in index order."""
    return [(t.index, enumerate_interleavings(tree, t.index)) for t in tree.tokens]


def enumerate_stacked(tree: DependencyTree) -> list[XBarTree]:
    """All stacked trees licensed by ``tree``, one per combination of
    per-head interleavings; heads vary in index order, last head fastest."""
    _require_projective(tree)
    check_stackable(tree)
    space = interleaving_space(tree)
    heads = [h for h, _ in space]
    out = []
    for combo in itertools.product(*(opts for _, opts in space)):
        out.append(to_stacked_xbar(tree, dict(zip(heads, combo))))
    return out


def bar1_spans(xbar: XBarTree, category: str, head: int | None = None) -> set[str]:
    """Yield strings of the bar-1 nodes of ``category`` (optionally only those
    projected from token ``head``)."""
    return {n.text() for n in xbar.nodes()
            if n.bar == 1 and n.category == category
            and (head is None or n.head == head)}
