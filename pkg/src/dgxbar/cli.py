"""Command-line interface.

Exit status: 0 success, 1 a sentence was linguistically rejected (for
example non-projective input to ``flat``), 2 usage or input-format error.
"""

from __future__ import annotations

import argparse
import sys

from .analyses import one_antecedents, scope_bracketings
from .errors import DGError, NonProjectiveInput, ParseError, UnknownIndex, UnstackableOrder
from .model import all_constituents, check_contiguity, constituent_of
from .render import render_ascii, write_brackets
from .treebank import read_treebank
from .xbar import enumerate_stacked, to_flat_xbar

EXIT_OK, EXIT_REJECTED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common(suppress):
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", metavar="FILE",
                   default=argparse.SUPPRESS if suppress else None,
                   help="treebank file (default: standard input)")
    p.add_argument("--ascii", action="store_true",
                   default=argparse.SUPPRESS if suppress else False,
                   help="draw trees as indented text instead of brackets")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dgxbar", parents=[_common(False)],
        description="Dependency trees and their flat and stacked X-bar readings.")
    # Subcommand copies of the shared flags must not clobber values given
    # before the subcommand name.
    sub_common = _common(True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sub.add_parser("check", parents=[sub_common],
                   help="report discontinuous constituents")
    sub.add_parser("constituents", parents=[sub_common],
                   help="list each word's constituent")
    sub.add_parser("flat", parents=[sub_common], help="flat X-bar tree")
    p = sub.add_parser("stacked", parents=[sub_common], help="stacked X-bar tree(s)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="print every licensed tree")
    g.add_argument("--index", type=int, default=1, metavar="K",
                   help="print the K-th licensed tree (1-based, default 1)")
    p = sub.add_parser("antecedents", parents=[sub_common],
                       help="possible antecedents of 'one' for a noun")
    p.add_argument("--head", type=int, metavar="INDEX")
    p = sub.add_parser("brackets", parents=[sub_common],
                       help="modifier scope bracketings for a head")
    p.add_argument("--head", type=int, metavar="INDEX")
    return parser


def _draw(xbar, ascii_mode):
    return render_ascii(xbar) if ascii_mode else write_brackets(xbar)


def _default_head(tree, args, category):
    if args.head is not None:
        tree.token(args.head)
        return args.head
    if tree.token(tree.root).category == category:
        return tree.root
    raise UsageError("--head is required: sentence root %r is not %s"
                     % (tree.token(tree.root).form, category))


def describe_violations(tree, violations):
    lines = []
    for v in violations:
        c = constituent_of(tree, v.head)
        lines.append("discontinuous: constituent of %d %s \"%s\" gap at %s (%s)" % (
            v.head, tree.token(v.head).form, tree.text(c.indices),
            ",".join(map(str, v.gaps)), tree.text(v.gaps)))
    return "\n".join(lines)


def _run_check(tree, args):
    violations = check_contiguity(tree)
    if not violations:
        return "projective", EXIT_OK
    return describe_violations(tree, violations), EXIT_REJECTED


def _run_constituents(tree, args):
    return "\n".join("%d\t%s\t%s" % (c.head, tree.token(c.head).form, tree.text(c.indices))
                     for c in all_constituents(tree)), EXIT_OK


def _run_flat(tree, args):
    return _draw(to_flat_xbar(tree), args.ascii), EXIT_OK


def _run_stacked(tree, args):
    trees = enumerate_stacked(tree)
    sep = "\n\n" if args.ascii else "\n"
    if args.all:
        return sep.join(_draw(x, args.ascii) for x in trees), EXIT_OK
    if not 1 <= args.index <= len(trees):
        raise UsageError("--index %d out of range 1..%d" % (args.index, len(trees)))
    return _draw(trees[args.index - 1], args.ascii), EXIT_OK


def _run_antecedents(tree, args):
    head = _default_head(tree, args, "N")
    return "\n".join(one_antecedents(tree, head).sorted()), EXIT_OK


def _run_brackets(tree, args):
    head = _default_head(tree, args, "V")
    return "\n".join(sorted(b.text for b in scope_bracketings(tree, head))), EXIT_OK


COMMANDS = {
    "check": _run_check,
    "constituents": _run_constituents,
    "flat": _run_flat,
    "stacked": _run_stacked,
    "antecedents": _run_antecedents,
    "brackets": _run_brackets,
}


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        if args.input in (None, "-"):
            trees = read_treebank(stdin or sys.stdin)
        else:
            with open(args.input, encoding="utf-8", newline="") as fh:
                trees = read_treebank(fh)
    except OSError as err:
        print("dgxbar: %s" % err, file=stderr)
        return EXIT_USAGE
    except (ParseError, UnicodeDecodeError) as err:
        print("dgxbar: %s: %s" % (args.input or "<stdin>", err), file=stderr)
        return EXIT_USAGE

    run = COMMANDS[args.command]
    status = EXIT_OK
    blocks = []
    for number, tree in enumerate(trees, start=1):
        try:
            text, code = run(tree, args)
        except (UsageError, UnknownIndex) as err:
            print("dgxbar: sentence %d: %s" % (number, err), file=stderr)
            return EXIT_USAGE
        except NonProjectiveInput as err:
            print("dgxbar: sentence %d: non-projective\n%s"
                  % (number, describe_violations(tree, err.violations)), file=stderr)
            status = max(status, EXIT_REJECTED)
            continue
        except (UnstackableOrder, DGError) as err:
            print("dgxbar: sentence %d: %s" % (number, err), file=stderr)
            status = max(status, EXIT_REJECTED)
            continue
        blocks.append(text)
        status = max(status, code)
    if blocks:
        stdout.write("\n\n".join(blocks) + "\n")
    return status


def entry_point():
    sys.exit(main())
