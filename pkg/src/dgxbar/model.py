"""Typed dependency trees, constituents and the contiguity rule."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    CycleDetected,
    DanglingArc,
    DuplicateSpecifier,
    MultipleHeads,
    MultipleRoots,
    NoRoot,
    TreeError,
    UnknownIndex,
)

_BAD_CATEGORY = re.compile(r"[\s()]")


class DepType(enum.Enum):
    COMPLEMENT = "comp"
    MODIFIER = "mod"
    SPECIFIER = "spec"

    @classmethod
    def parse(cls, text: str) -> "DepType":
        return cls(text.strip().lower())


def check_category(name: str) -> str:
    if not isinstance(name, str) or not name or _BAD_CATEGORY.search(name):
        raise ValueError("invalid category %r" % (name,))
    return name


@dataclass(frozen=True)
class Token:
    index: int
    form: str
    category: str

    def __post_init__(self):
        if not self.form or "\t" in self.form or "\n" in self.form or "\r" in self.form:
            raise ValueError("invalid token form %r" % (self.form,))
        check_category(self.category)


@dataclass(frozen=True)
class Arc:
    dependent: int
    head: int
    role: DepType

    def __post_init__(self):
        if self.dependent == self.head:
            raise ValueError("token %d cannot depend on itself" % self.head)


@dataclass(frozen=True)
class Constituent:
    head: int
    indices: tuple[int, ...]

    def is_contiguous(self) -> bool:
        return self.indices[-1] - self.indices[0] + 1 == len(self.indices)


@dataclass(frozen=True)
class Violation:
    """A constituent whose yield skips the listed positions."""

    head: int
    gaps: tuple[int, ...]


@dataclass(frozen=True)
class DependencyTree:
    """Immutable dependency tree.  Build instances with :func:`build_tree`."""

    tokens: tuple[Token, ...]
    arcs: frozenset[Arc]
    root: int

    def __len__(self):
        return len(self.tokens)

    def token(self, index: int) -> Token:
        if not isinstance(index, int) or not 1 <= index <= len(self.tokens):
            raise UnknownIndex(index)
        return self.tokens[index - 1]

    @cached_property
    def _arc_of(self) -> dict[int, Arc]:
        return {arc.dependent: arc for arc in self.arcs}

    @cached_property
    def _children(self) -> dict[int, tuple[int, ...]]:
        children: dict[int, list[int]] = {t.index: [] for t in self.tokens}
        for arc in self.arcs:
            children[arc.head].append(arc.dependent)
        return {h: tuple(sorted(deps)) for h, deps in children.items()}

    def head_of(self, index: int) -> int | None:
        self.token(index)
        arc = self._arc_of.get(index)
        return None if arc is None else arc.head

    def role_of(self, index: int) -> DepType | None:
        self.token(index)
        arc = self._arc_of.get(index)
        return None if arc is None else arc.role

    def dependents(self, head: int, role: DepType | None = None) -> tuple[int, ...]:
        """Dependents of ``head`` in word order, optionally filtered by role."""
        self.token(head)
        deps = self._children[head]
        if role is None:
            return deps
        return tuple(d for d in deps if self._arc_of[d].role is role)

    def specifier(self, head: int) -> int | None:
        specs = self.dependents(head, DepType.SPECIFIER)
        return specs[0] if specs else None

    def modifiers(self, head: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Left and right modifiers of ``head``, each listed nearest-first."""
        mods = self.dependents(head, DepType.MODIFIER)
        left = tuple(sorted((m for m in mods if m < head), reverse=True))
        right = tuple(m for m in mods if m > head)
        return left, right

    def text(self, indices: Iterable[int]) -> str:
        return " ".join(self.token(i).form for i in sorted(indices))

    @cached_property
    def _yields(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, tuple[int, ...]] = {}

        def visit(h):
            acc = [h]
            for d in self._children[h]:
                acc.extend(visit(d))
            out[h] = tuple(sorted(acc))
            return out[h]

        if self.tokens:
            visit(self.root)
        return out


def build_tree(tokens: Sequence[Token], arcs: Iterable[Arc]) -> DependencyTree:
    """Validate ``tokens`` and ``arcs`` and return the tree they describe.

    The root is the single token that is not the dependent of any arc.
    """
    tokens = tuple(tokens)
    arcs = frozenset(arcs)
    for pos, tok in enumerate(tokens, start=1):
        if tok.index != pos:
            raise TreeError("token indices must run 1..n; got %r at position %d"
                            % (tok.index, pos))
    n = len(tokens)

    head_of: dict[int, int] = {}
    for arc in sorted(arcs, key=lambda a: (a.dependent, a.head, a.role.value)):
        if not (1 <= arc.head <= n and 1 <= arc.dependent <= n):
            raise DanglingArc(arc)
        if arc.dependent in head_of:
            raise MultipleHeads(arc.dependent)
        head_of[arc.dependent] = arc.head

    # Every token has at most one head, so any cycle shows up by chasing heads.
    state: dict[int, int] = {}  # 1 = on current path, 2 = reaches a root
    for start in range(1, n + 1):
        path = []
        node = start
        while node is not None and node not in state:
            state[node] = 1
            path.append(node)
            node = head_of.get(node)
        if node is not None and state[node] == 1:
            raise CycleDetected(path[path.index(node):])
        for p in path:
            state[p] = 2

    roots = [i for i in range(1, n + 1) if i not in head_of]
    if not roots:
        raise NoRoot()
    if len(roots) > 1:
        raise MultipleRoots(roots)

    spec_heads: set[int] = set()
    for arc in sorted(arcs, key=lambda a: a.dependent):
        if arc.role is DepType.SPECIFIER:
            if arc.head in spec_heads:
                raise DuplicateSpecifier(arc.head)
            spec_heads.add(arc.head)

    return DependencyTree(tokens, arcs, roots[0])


def constituent_of(tree: DependencyTree, head: int) -> Constituent:
    tree.token(head)
    return Constituent(head, tree._yields[head])


def all_constituents(tree: DependencyTree) -> list[Constituent]:
    return [constituent_of(tree, t.index) for t in tree.tokens]


def check_contiguity(tree: DependencyTree) -> list[Violation]:
    violations = []
    for c in all_constituents(tree):
        if not c.is_contiguous():
            present = set(c.indices)
            gaps = tuple(i for i in range(c.indices[0], c.indices[-1]) if i not in present)
            violations.append(Violation(c.head, gaps))
    return violations


def is_projective(tree: DependencyTree) -> bool:
    return not check_contiguity(tree)
