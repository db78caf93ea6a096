import random

import pytest
from hypothesis import given, settings, strategies as st

from relpat.charset import (
    EQUIVALENT,
    INAPPLICABLE,
    INCLUSION_HOLDS,
    REFUTED,
    LabeledSample,
    SliceOracle,
    binary_congruous_parts,
    charset_from_telltales,
    classify_incongruous_pair,
    decide_equiv,
    decide_inclusion,
    decide_inclusion_congruous,
    gen_s2_nonerasing,
    gen_seps,
    telltales_from_charsets,
    unambiguity_violations,
    witness_set_binary_congruous,
    witness_set_sigma3,
)
from relpat.errors import AlphabetTooSmall, NegativeLabelPresent, NotP23, WitnessNotFoundWithinBound, WrongKind
from relpat.member import member, member_len, slice_compare
from relpat.subst import Sampled
from relpat.text import make_pattern

from helpers import load, random_p23, random_pattern

SINGLE = make_pattern("x1 x2 aaa x3 x4", "(x1,x2) (x1,x3) (x1,x4)")
SPLIT = make_pattern("y1 y2 aaa y3 y4", "(y1,y2) (y3,y4)")


def test_seps_small_golden():
    rp = make_pattern("x1 aaa x2", "(x1,x2)")
    assert gen_seps(rp, 1).words() == ["aaa", "aaaaa", "aaaab", "baaaa", "baaab"]


def test_seps_words_are_members():
    rp = load("dependent_group.pat")
    for w in gen_seps(rp, 1).words():
        assert member_len(w, rp) is not None


def test_seps2_of_long_block_inside_cover():
    p, q = load("long_block.pat"), load("long_block_cover.pat")
    words = gen_seps(p, 2).words()
    assert len(words) > 60
    assert all(member_len(w, q) is not None for w in words)


def test_s2_lengths_and_soundness():
    rp = load("gap_parity.pat")
    allowed = {2 * k1 + 2 + 3 * k2 + 2 + 5 * k3 for k1, k2, k3 in ((2, 1, 1), (1, 2, 1), (1, 1, 2))}
    sample = gen_s2_nonerasing(rp, Sampled(30, seed=1))
    for w in sample.words():
        assert len(w) in allowed
        assert member_len(w, rp, erasing=False) is not None


def test_s2_single_variable():
    assert gen_s2_nonerasing(make_pattern("x1")).words() == ["aa", "ab", "ba", "bb"]


def test_sigma3_witness_words():
    rp = make_pattern("x1 ab x2", "(x1,x2)", alphabet="abc")
    assert witness_set_sigma3(rp).words() == ["ab", "baba"]
    assert witness_set_sigma3(make_pattern("x1 x2", "(x1,x2)", alphabet="abc")).words() == ["", "aa"]
    with pytest.raises(AlphabetTooSmall):
        witness_set_sigma3(make_pattern("x1 ab x2", "(x1,x2)"))


def test_sigma3_sample_size_is_linear():
    rp = make_pattern("x1 ab x2 y1 c z1 z2 ba", "(x1,x2) (z1,z2)", alphabet="abc")
    assert len(witness_set_sigma3(rp)) == len(rp.groups) + 1


def test_binary_unambiguous_word_golden():
    rp = make_pattern("x1 x2 aaa x3 x4 bbb x5 x6", "(x1,x2) (x1,x3) (x1,x4) (x1,x5) (x1,x6)")
    assert binary_congruous_parts(rp, 0) == ["bb", "ba", "aa"]
    assert witness_set_binary_congruous(rp).words() == ["bbaaababbbaa"]


def test_binary_unambiguous_table_rows():
    # odd run between unary blocks ends with the second letter of the pair
    rp = make_pattern("x1 x2 aaa x3 x4 x5 bbb x6 x7", "(x1,x2) (x1,x3) (x1,x4) (x1,x5) (x1,x6) (x1,x7)")
    assert binary_congruous_parts(rp, 0)[1] == "baa"
    # mixed blocks on both sides leave the letter free: a by tie-break
    rp = make_pattern("x1 x2 aba x3 x4 abba x5 x6", "(x1,x2) (x1,x3) (x1,x4) (x1,x5) (x1,x6)")
    assert binary_congruous_parts(rp, 0)[1] == "aa"


def test_binary_witness_requires_p23():
    with pytest.raises(NotP23):
        witness_set_binary_congruous(make_pattern("x1 a x2"))


def test_equiv_self_and_sigma3():
    assert decide_equiv(SINGLE, SINGLE).decision == EQUIVALENT
    a = make_pattern("x1 a x2", "(x1,x2)", alphabet="abc")
    b = make_pattern("y1 y2 a y3 y4", "(y1,y3) (y2,y4)", alphabet="abc")
    v = decide_equiv(a, b)
    assert (v.decision, v.method, v.bounded) == (EQUIVALENT, "sigma3", False)
    assert slice_compare(a, b, 7).relation == "equal"


def test_equiv_slice_refutes_gap_parity_pair():
    p, q = load("gap_parity.pat"), load("gap_parity_cover.pat")
    v = decide_equiv(p, q, "slice", erasing=False)
    assert v.decision == REFUTED and v.bounded
    assert member(v.witness, q, erasing=False) is not None
    assert member(v.witness, p, erasing=False) is None


def test_equiv_inapplicable_method():
    p, q = load("gap_parity.pat"), load("gap_parity_cover.pat")
    v = decide_equiv(p, q, "sigma3")
    assert v.decision == INAPPLICABLE and v.note
    assert decide_equiv(p, q, "binary_p23").decision == INAPPLICABLE


def test_equiv_wrong_kind():
    with pytest.raises(WrongKind):
        decide_equiv(make_pattern("x", kind="eq"), make_pattern("x", kind="eq"), "sigma3")


def test_congruous_inclusion_examples():
    v = decide_inclusion_congruous(SINGLE, SPLIT)
    assert v.decision == INCLUSION_HOLDS and not v.bounded
    assert slice_compare(SINGLE, SPLIT, 10).relation == "subset"
    v = decide_inclusion_congruous(SPLIT, SINGLE)
    assert v.decision == REFUTED
    assert member_len(v.witness, SPLIT) is not None and member_len(v.witness, SINGLE) is None
    assert decide_inclusion_congruous(SINGLE, SINGLE).decision == INCLUSION_HOLDS


def test_decide_inclusion_routes():
    assert decide_inclusion(SINGLE, SPLIT).decision == INCLUSION_HOLDS
    p, q = load("gap_parity.pat"), load("gap_parity_cover.pat")
    v = decide_inclusion(q, p)
    assert v.decision == REFUTED and v.bounded


def test_classify_reports():
    report = classify_incongruous_pair(load("long_block.pat"), load("long_block_cover.pat"))
    assert not report["congruous"]
    assert report["forbidden_shapes_long"]
    assert not report["incongruous_premises_hold"] and report["route"] == "slice"
    same = classify_incongruous_pair(SINGLE, SINGLE)
    assert same["congruous"] and same["route"].startswith("congruous")
    conj = classify_incongruous_pair(make_pattern("x1 ab x2 ab x3"), make_pattern("y1 a y2 ba y3 b y4"))
    assert conj["telltale_conjugates"] is not None


def test_charsets_single_language():
    rp = make_pattern("x1 aaa x2", "(x1,x2)")
    (sample,) = charset_from_telltales([rp], [["aaa"]])
    assert sample.words() == ["aaa"]


def test_charsets_add_separator_only_when_needed():
    samples = charset_from_telltales([SPLIT, SINGLE], [["aaa"], ["aaa"]])
    assert samples[1].words() == ["aaa"]
    samples = charset_from_telltales([SINGLE, SPLIT], [["aaa"], ["aaa"]])
    extra = set(samples[1].words()) - {"aaa"}
    assert len(extra) == 1
    (w,) = extra
    assert member_len(w, SPLIT) is not None and member_len(w, SINGLE) is None


def test_charsets_missing_witness():
    class Liar(SliceOracle):
        def included(self, a, b):
            return False

    with pytest.raises(WitnessNotFoundWithinBound):
        charset_from_telltales([SPLIT, SPLIT], [["aaa"], ["aaa"]], Liar(4), search_bound=4)


def test_telltales_projection():
    assert telltales_from_charsets([LabeledSample.positive(["aaa"])]) == [{"aaa"}]
    assert telltales_from_charsets([LabeledSample.positive([])]) == [set()]
    with pytest.raises(NegativeLabelPresent):
        telltales_from_charsets([LabeledSample.build([("a", 0)])])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_sigma3_equivalence_agrees_with_slice(seed):
    rng = random.Random(seed)
    a = random_pattern(rng, "len", max_blocks=2, max_groups=2, max_vars=4, max_term=2, alphabet=("a", "b", "c"))
    b = random_pattern(rng, "len", max_blocks=2, max_groups=2, max_vars=4, max_term=2, alphabet=("a", "b", "c"))
    for x, y in ((a, b), (a, a)):
        v = decide_equiv(x, y)
        s = slice_compare(x, y, 6)
        if v.decision == EQUIVALENT:
            assert s.relation == "equal"
        else:
            w = v.witness
            assert (member(w, x) is None) != (member(w, y) is None)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_unambiguous_words_pass_substring_checks(seed):
    rp = random_p23(random.Random(seed), max_groups=3, max_blocks=3)
    for gi in range(len(rp.groups)):
        parts = binary_congruous_parts(rp, gi)
        assert unambiguity_violations(rp.blocks.terminal_blocks, parts) == []
    for w in witness_set_binary_congruous(rp).words():
        assert member_len(w, rp) is not None


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_congruous_inclusion_agrees_with_slice(seed):
    rng = random.Random(seed)
    p = random_p23(rng)
    q = random_p23(rng)
    q = q.replace(items=p.items, pairs=set()) if rng.random() < 0.5 else p
    v = decide_inclusion_congruous(p, q)
    if v.decision == INCLUSION_HOLDS:
        assert slice_compare(p, q, 10).relation in ("subset", "equal")
    else:
        assert member(v.witness, p) is not None and member(v.witness, q) is None
