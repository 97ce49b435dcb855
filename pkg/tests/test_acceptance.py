"""Exit criteria.  Each test prints one PASS/FAIL line in the summary."""

import io
import math

import pytest

from conftest import BIG_RED_HOUSE, CAMBRIDGE, DATA, KNOCKED, TYPICAL_HOUSE, YOUNG_STUDENT
from conftest import make_tree
from dgxbar import (
    check_contiguity,
    enumerate_interleavings,
    enumerate_stacked,
    from_flat_xbar,
    one_antecedents,
    scope_bracketings,
    to_flat_xbar,
    to_stacked_xbar,
    write_brackets,
)
from dgxbar.cli import main
from oracles import brute_interleavings
from structure import (
    bar1_contiguous,
    bar_counts,
    has_stacking,
    leaf_order_ok,
    modifier_count,
)
from treegen import corpus

FIG2 = ("(V1 (N1 (D1 (D0 the)) (Adj1 (Adj0 old)) (N0 dog)) (V0 chased) "
        "(N1 (D1 (D0 the)) (N0 cat)) (P1 (P0 into) (N1 (D1 (D0 the)) (N0 garden))))")
BIG_RED_STACKED = ("(N2 (D2 (D1 (D0 the))) (N1 (Adj2 (Adj1 (Adj0 big))) "
                   "(N1 (Adj2 (Adj1 (Adj0 red))) (N1 (N0 house)))))")
FROM_CAMBRIDGE = "(P2 (P1 (P0 from) (N2 (N1 (N0 Cambridge)))))"
LONG_HAIRED = "(Adj2 (Adj1 (Adj0 long-haired)))"
FIG5_TOP = ("(N2 (D2 (D1 (D0 the))) (N1 (N1 %s (N1 (N0 student))) %s))"
            % (LONG_HAIRED, FROM_CAMBRIDGE))
FIG5_BOTTOM = ("(N2 (D2 (D1 (D0 the))) (N1 %s (N1 (N1 (N0 student)) %s)))"
               % (LONG_HAIRED, FROM_CAMBRIDGE))

ROUND_TRIP_TREES = 1000
COUNT_TREES = 500


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def any_corpus():
    return corpus(ROUND_TRIP_TREES, seed=1, max_tokens=12, stackable=False)


@pytest.fixture(scope="module")
def stack_corpus():
    return corpus(COUNT_TREES, seed=2, max_tokens=12, stackable=True)


@pytest.mark.criterion(1, "flat conversion of the chased-the-cat sentence (exact string)")
def test_c1_flat_golden():
    code, out, _ = cli("flat", "--input", str(DATA / "fig1.tsv"))
    assert code == 0
    assert out == FIG2 + "\n"


@pytest.mark.criterion(2, "stacked 'the big red house' (exact string, top node bar 2)")
def test_c2_stacked_golden():
    tree = make_tree(BIG_RED_HOUSE)
    assert write_brackets(to_stacked_xbar(tree)) == BIG_RED_STACKED
    code, out, _ = cli("stacked", "--input", str(DATA / "big_red_house.tsv"))
    assert (code, out) == (0, BIG_RED_STACKED + "\n")


@pytest.mark.criterion(3, "one-anaphora antecedents, modifiers on one side")
def test_c3_antecedents_one_sided():
    got = one_antecedents(make_tree(YOUNG_STUDENT), 3).candidates
    assert got == {"student", "long-haired student", "young long-haired student"}


@pytest.mark.criterion(4, "one-anaphora antecedents, modifiers on both sides; two trees")
def test_c4_antecedents_two_sided():
    tree = make_tree(CAMBRIDGE)
    got = one_antecedents(tree, 3).candidates
    assert got == {"student", "student from Cambridge", "long-haired student",
                   "long-haired student from Cambridge"}
    trees = [write_brackets(x) for x in enumerate_stacked(tree)]
    assert trees == [FIG5_TOP, FIG5_BOTTOM]


@pytest.mark.criterion(5, "modifier scope bracketings (exact strings)")
def test_c5_scope():
    knocked = {b.text for b in scope_bracketings(make_tree(KNOCKED), 2)}
    assert knocked == {"[ [ intentionally knocked ] twice ]",
                       "[ intentionally [ knocked twice ] ]"}
    typical = {b.text for b in scope_bracketings(make_tree(TYPICAL_HOUSE), 3)}
    assert typical == {"[ typical [ French house ] ]"}


@pytest.mark.criterion(6, "flat round trip on 1000 random projective trees")
def test_c6_round_trip(any_corpus):
    assert len(any_corpus) >= 1000
    assert max(len(t) for t in any_corpus) <= 12
    roles = {a.role for t in any_corpus for a in t.arcs}
    assert len(roles) == 3
    failures = [t for t in any_corpus if from_flat_xbar(to_flat_xbar(t)) != t]
    assert failures == []


@pytest.mark.criterion(7, "enumeration count = product of binomials, 500 trees, brute force")
def test_c7_enumeration_count(stack_corpus):
    mismatches = 0
    ambiguous = 0
    for tree in stack_corpus:
        expected = 1
        for tok in tree.tokens:
            h = tok.index
            mods = [a.dependent for a in tree.arcs if a.head == h and a.role.value == "mod"]
            left = sum(1 for m in mods if m < h)
            expected *= math.comb(len(mods), left)
            if [i.order for i in enumerate_interleavings(tree, h)] != \
                    brute_interleavings(tree, h):
                mismatches += 1
        if len(enumerate_stacked(tree)) != expected:
            mismatches += 1
        ambiguous += expected > 1
    assert mismatches == 0
    assert ambiguous >= COUNT_TREES // 10


@pytest.mark.criterion(8, "structural invariants on the random corpora")
def test_c8_structure(any_corpus, stack_corpus):
    failures = 0
    for tree in any_corpus + stack_corpus:
        flat = to_flat_xbar(tree)
        if not leaf_order_ok(flat, tree) or has_stacking(flat) or not bar1_contiguous(flat):
            failures += 1
    for tree in stack_corpus:
        for xbar in enumerate_stacked(tree):
            counts = bar_counts(xbar)
            if (not leaf_order_ok(xbar, tree) or not bar1_contiguous(xbar)
                    or counts[1] != len(tree) + modifier_count(tree)):
                failures += 1
    assert failures == 0


@pytest.mark.criterion(9, "projectivity gate: crossing example built, reported, rejected")
def test_c9_projectivity_gate():
    from conftest import CROSSING
    tree = make_tree(CROSSING)
    assert len(tree) == 3
    (violation,) = check_contiguity(tree)
    assert (violation.head, violation.gaps) == (3, (2,))
    path = str(DATA / "crossing.tsv")
    code, out, _ = cli("check", "--input", path)
    assert code == 1 and "gap at 2" in out
    for cmd in ("flat", "stacked"):
        code, out, err = cli(cmd, "--input", path)
        assert code == 1 and out == "" and "gap at 2" in err
