"""Five-column TSV treebank: INDEX FORM CAT HEAD ROLE, blank-line separated."""

from __future__ import annotations

import io
from typing import Iterable, TextIO

from .errors import ParseError, TreeError
from .model import Arc, DependencyTree, DepType, Token, build_tree

ROOT_ROLE = "root"


def read_treebank(source: TextIO | str) -> list[DependencyTree]:
    """Parse every sentence block in ``source`` (a stream or a string)."""
    if isinstance(source, str):
        source = io.StringIO(source)
    trees = []
    block: list[tuple[int, list[str]]] = []
    lineno = 0
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if line.startswith("#"):
            continue
        if not line.strip():
            if block:
                trees.append(_build(block))
                block = []
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise ParseError(lineno, "expected 5 tab-separated fields, got %d" % len(fields))
        block.append((lineno, fields))
    if block:
        trees.append(_build(block))
    return trees


def _build(block):
    n = len(block)
    tokens = []
    arcs = []
    line_of = {}
    for pos, (lineno, (idx, form, cat, head, role)) in enumerate(block, start=1):
        try:
            idx_i = int(idx)
            head_i = int(head)
        except ValueError:
            raise ParseError(lineno, "INDEX and HEAD must be integers") from None
        if idx_i != pos:
            raise ParseError(lineno, "expected INDEX %d, got %s" % (pos, idx))
        if not 0 <= head_i <= n:
            raise ParseError(lineno, "HEAD %d out of range 0..%d" % (head_i, n))
        line_of[idx_i] = lineno
        try:
            tokens.append(Token(idx_i, form, cat))
        except ValueError as err:
            raise ParseError(lineno, str(err)) from None
        if head_i == 0:
            if role != ROOT_ROLE:
                raise ParseError(lineno, "HEAD 0 requires ROLE %r" % ROOT_ROLE)
            continue
        if role == ROOT_ROLE:
            raise ParseError(lineno, "ROLE root requires HEAD 0")
        try:
            dep_type = DepType(role)
        except ValueError:
            raise ParseError(lineno, "unknown ROLE %r" % role) from None
        try:
            arcs.append(Arc(idx_i, head_i, dep_type))
        except ValueError as err:
            raise ParseError(lineno, str(err)) from None
    try:
        return build_tree(tokens, arcs)
    except TreeError as err:
        where = None
        for attr in ("token", "head"):
            if getattr(err, attr, None) in line_of:
                where = line_of[getattr(err, attr)]
                break
        if where is None and getattr(err, "cycle", None):
            where = line_of[err.cycle[0]]
        raise ParseError(where if where is not None else block[0][0], str(err)) from err


def format_tree(tree: DependencyTree) -> str:
    lines = []
    for tok in tree.tokens:
        head = tree.head_of(tok.index)
        role = tree.role_of(tok.index)
        lines.append("\t".join([str(tok.index), tok.form, tok.category,
                                str(head or 0), role.value if role else ROOT_ROLE]))
    return "\n".join(lines) + "\n"


def write_treebank(trees: Iterable[DependencyTree]) -> str:
    return "\n".join(format_tree(t) for t in trees)
