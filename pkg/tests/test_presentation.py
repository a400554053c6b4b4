import warnings

import pytest

from biquandles.core import OpKind, alexander_biquandle
from biquandles.gauss import parse_gauss_code
from biquandles.presentation import (Gen, OpWord, Presentation, Relation,
                                     eval_word, format_presentation,
                                     format_relation, format_word,
                                     knot_presentation, reduce_presentation,
                                     reduce_with_trace, word_generators)

# the 22 crossing relations of an 11-crossing virtual knot diagram,
# two per crossing, one per semi-arc
CONWAY_RELATIONS = [
    "1^16=2", "2_15=3", "3_8=4", "4^9=5", "5_22=6", "6^-11=7", "7_-20=8",
    "8^3=9", "9_4=10", "10^-21=11", "11_-6=12", "12_-17=13", "13^-18=14",
    "14_-19=15", "15^2=16", "16_1=17", "17^-12=18", "18_-13=19", "19^-14=20",
    "20^-7=21", "21_-10=22", "22^5=1",
]


def test_trefoil_relations(trefoil_code):
    pres = knot_presentation(trefoil_code)
    assert [format_relation(r) for r in pres.relations] == [
        "1^4=2", "2_5=3", "3^6=4", "4_1=5", "5^2=6", "6_3=1",
    ]
    assert pres.generators == tuple(range(1, 7))


def test_conway_relations_verbatim(conway_code):
    pres = knot_presentation(conway_code)
    assert [format_relation(r) for r in pres.relations] == CONWAY_RELATIONS


def test_two_relations_per_crossing(kishino_code):
    pres = knot_presentation(kishino_code)
    assert len(pres.relations) == 2 * kishino_code.n_crossings
    # every semi-arc is the isolated side of exactly one relation
    assert sorted(r.rhs for r in pres.relations) == list(range(1, 9))


def test_conway_reduction_keeps_five(conway_code):
    reduced = reduce_presentation(knot_presentation(conway_code))
    assert sorted(reduced.generators) == [1, 8, 15, 16, 21]


def test_trefoil_reduction(trefoil_code):
    reduced = reduce_presentation(knot_presentation(trefoil_code))
    assert len(reduced.generators) <= 3


def test_reduce_idempotent(conway_code, trefoil_code):
    for code in (conway_code, trefoil_code):
        once = reduce_presentation(knot_presentation(code))
        assert reduce_presentation(once).relations == once.relations


def test_reduce_empty():
    empty = Presentation((), ())
    assert reduce_presentation(empty) == empty


def test_trace_words_reference_later_survivors(trefoil_code):
    reduced, trace = reduce_with_trace(knot_presentation(trefoil_code))
    seen = set(reduced.generators)
    for g, word in reversed(trace):
        assert word_generators(word) <= seen
        seen.add(g)


def test_duplicate_isolated_generator_rejected():
    rel = Relation(Gen(1), 2)
    with pytest.raises(ValueError, match="distinct"):
        reduce_with_trace(Presentation((1, 2), (rel, rel)))


def test_node_budget_warning(conway_code):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        reduce_presentation(knot_presentation(conway_code), max_nodes=10)
    assert any("stopped early" in str(w.message) for w in caught)


def test_eval_word_basics():
    one = alexander_biquandle(1, 1, 1)
    assert eval_word(Gen(3), one, {3: 1}) == 1
    assert eval_word(OpWord(OpKind.UP, Gen(1), Gen(2)), one, {1: 1, 2: 1}) == 1


def test_eval_word_unassigned():
    with pytest.raises(ValueError, match="unassigned"):
        eval_word(Gen(2), alexander_biquandle(1, 1, 1), {1: 1})


def test_eval_word_matches_manual_lookup():
    T = alexander_biquandle(5, 2, 3)
    # the word 1^(2_(3_2 barred)) evaluated stepwise
    word = OpWord(OpKind.UP, Gen(1),
                  OpWord(OpKind.DOWN, Gen(2),
                         OpWord(OpKind.DOWNBAR, Gen(3), Gen(2))))
    for a in range(1, 6):
        for b in range(1, 6):
            for c in range(1, 6):
                inner = T.downbar(c, b)
                mid = T.down(b, inner)
                assert eval_word(word, T, {1: a, 2: b, 3: c}) == T.up(a, mid)


def test_format_word_barred_notation():
    w = OpWord(OpKind.UPBAR, Gen(6), Gen(11))
    assert format_word(w) == "6^-11"
    w2 = OpWord(OpKind.DOWNBAR, Gen(11), Gen(6))
    assert format_word(w2) == "11_-6"
    nested = OpWord(OpKind.UP, w, Gen(2))
    assert format_word(nested) == "(6^-11)^2"


def test_format_presentation_lists_generators(trefoil_code):
    text = format_presentation(knot_presentation(trefoil_code))
    assert text.splitlines()[0] == "generators: 1,2,3,4,5,6"
    assert "1^4=2" in text
