"""Bracket notation and indented ASCII rendering of X-bar trees.

Bracket grammar::

    tree  := "(" LABEL " " form ")"              bar-0 leaf
           | "(" LABEL (" " tree)+ ")"           bar >= 1
    LABEL := category bar-digit
"""

from __future__ import annotations

from .xbar import XBarNode, XBarTree


def _brackets(node: XBarNode) -> str:
    if node.token is not None:
        return "(%s %s)" % (node.label, node.token.form)
    return "(%s %s)" % (node.label, " ".join(_brackets(c) for c in node.children))


def write_brackets(xbar: XBarTree) -> str:
    return _brackets(xbar.root)


def render_ascii(xbar: XBarTree) -> str:
    lines = []

    def visit(node, depth):
        pad = "  " * depth
        if node.token is not None:
            lines.append("%s%s %s" % (pad, node.label, node.token.form))
        else:
            lines.append(pad + node.label)
            for child in node.children:
                visit(child, depth + 1)

    visit(xbar.root, 0)
    return "\n".join(lines)
