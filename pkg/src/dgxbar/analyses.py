"""One-anaphora antecedents and modifier scope, read off stacked trees."""

from __future__ import annotations

from dataclasses import dataclass

from .model import DependencyTree
from .xbar import (
    XBarNode,
    XBarTree,
    bar1_spans,
    check_stackable,
    enumerate_interleavings,
    to_stacked_xbar,
    _require_projective,
)


@dataclass(frozen=True)
class AntecedentSet:
    head: int
    candidates: frozenset[str]

    def sorted(self) -> list[str]:
        """Candidates from smallest to largest, ties broken alphabetically."""
        return sorted(self.candidates, key=lambda s: (len(s.split()), s))


@dataclass(frozen=True)
class ScopeBracketing:
    text: str

    def __str__(self):
        return self.text

    def words(self) -> list[str]:
        return [w for w in self.text.split() if w not in ("[", "]")]


def _head_variants(tree: DependencyTree, head: int) -> list[XBarTree]:
    # Only the head's own interleaving changes its bar-1 chain; other heads
    # keep their default order.
    _require_projective(tree)
    check_stackable(tree)
    return [to_stacked_xbar(tree, {head: order})
            for order in enumerate_interleavings(tree, head)]


def one_antecedents(tree: DependencyTree, head: int) -> AntecedentSet:
    """Every bar-1 yield of ``head`` over all licensed stackings."""
    cat = tree.token(head).category
    found: set[str] = set()
    for xbar in _head_variants(tree, head):
        found |= bar1_spans(xbar, cat, head)
    return AntecedentSet(head, frozenset(found))


def _top_bar1(xbar: XBarTree, head: int) -> XBarNode:
    for node in xbar.nodes():
        if node.bar == 2 and node.head == head:
            return next(c for c in node.children if c.head == head)
    raise LookupError(head)


def _render_chain(node: XBarNode) -> str:
    inner = [c for c in node.children if c.bar == 1 and c.head == node.head]
    if not inner:
        return node.text()
    parts = [_render_chain(c) if c is inner[0] else c.text() for c in node.children]
    return "[ %s ]" % " ".join(parts)


def render_scope(xbar: XBarTree, head: int) -> ScopeBracketing:
    """Bracket the stacked bar-1 chain of ``head``; one pair per modifier,
    or a single pair around the core when there are no modifiers."""
    top = _top_bar1(xbar, head)
    text = _render_chain(top)
    if not text.startswith("["):
        text = "[ %s ]" % text
    return ScopeBracketing(text)


def scope_bracketings(tree: DependencyTree, head: int) -> set[ScopeBracketing]:
    tree.token(head)
    return {render_scope(x, head) for x in _head_variants(tree, head)}
