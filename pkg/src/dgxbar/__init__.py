"""Dependency trees mapped onto flat and stacked X-bar constituency trees."""

from .analyses import AntecedentSet, ScopeBracketing, one_antecedents, scope_bracketings
from .errors import *  # noqa: F401,F403
from .model import (
    Arc,
    Constituent,
    DependencyTree,
    DepType,
    Token,
    Violation,
    all_constituents,
    build_tree,
    check_contiguity,
    constituent_of,
    is_projective,
)
from .render import render_ascii, write_brackets
from .treebank import format_tree, read_treebank, write_treebank
from .xbar import (
    Interleaving,
    XBarNode,
    XBarTree,
    bar1_spans,
    enumerate_interleavings,
    enumerate_stacked,
    from_flat_xbar,
    to_flat_xbar,
    to_stacked_xbar,
)

__version__ = "0.1.0"
