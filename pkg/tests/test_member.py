import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from relpat.errors import BudgetExceeded, DimensionMismatch, InstanceTooLarge, WrongKind, ZeroGenerator
from relpat.member import (
    NONNEGATIVE,
    STRICTLY_POSITIVE,
    lang_upto,
    member,
    member_len,
    member_unify,
    nonneg_combination,
    slice_compare,
)
from relpat.reversal import parse_signed, square_source, to_relational
from relpat.subst import apply, random_lz_substitution
from relpat.text import expand_word, make_pattern

from helpers import load, random_pattern


def test_combination_golden():
    assert nonneg_combination((4, 0, 2, 2), [(2, 0, 1, 1)], STRICTLY_POSITIVE) == (2,)
    assert nonneg_combination((0, 0), [(1, 0), (0, 1)], NONNEGATIVE) == (0, 0)
    assert nonneg_combination((0, 0), [(1, 0)], STRICTLY_POSITIVE) is None


def test_combination_errors():
    with pytest.raises(ZeroGenerator):
        nonneg_combination((1, 1), [(0, 0)])
    with pytest.raises(DimensionMismatch):
        nonneg_combination((1, 1), [(1,)])


def _box(target, gens, mode):
    lo = 1 if mode == STRICTLY_POSITIVE else 0
    bounds = [min(t // g for t, g in zip(target, gen) if g) for gen in gens]
    for coeffs in itertools.product(*(range(lo, b + 1) for b in bounds)):
        if all(sum(c * gen[j] for c, gen in zip(coeffs, gens)) == target[j] for j in range(len(target))):
            return True
    return False


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(0, 9), min_size=3, max_size=3),
    st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3).filter(any), min_size=1, max_size=3),
    st.sampled_from([NONNEGATIVE, STRICTLY_POSITIVE]),
)
def test_combination_matches_box_enumeration(target, gens, mode):
    got = nonneg_combination(target, gens, mode)
    assert (got is not None) == _box(target, gens, mode)
    if got is not None:
        assert [sum(c * g[j] for c, g in zip(got, gens)) for j in range(3)] == target


def test_gap_parity_membership():
    w = expand_word("a^2aba^9aba^5")
    wit = member_len(w, load("gap_parity.pat"), erasing=False)
    assert wit.coefficients == {0: 1, 1: 3, 2: 1}
    assert wit.anchoring.gaps == (2, 9, 5)
    assert member_len(w, load("gap_parity_cover.pat"), erasing=False) is None


def test_long_block_membership():
    w = expand_word("ab^100a^9ab^100")
    assert member_len(w, load("long_block.pat")) is not None
    assert member_len(w, load("long_block_cover.pat")) is None


def test_all_terminal_membership():
    rp = make_pattern("abb")
    assert member_len("abb", rp) is not None
    assert member_len("ab", rp) is None
    assert lang_upto(rp, 5) == ["abb"]


def test_member_len_rejects_other_kinds():
    with pytest.raises(WrongKind):
        member_len("a", make_pattern("x", kind="eq"))


def test_palindromes():
    rp = to_relational(parse_signed("x1 x1^rev"))
    assert member_unify("abba", rp) is not None
    assert member_unify("aba", rp) is None
    assert lang_upto(rp, 4) == ["", "aa", "bb", "aaaa", "abba", "baab", "bbbb"]


def test_square_source_member():
    wit = member_unify("aabbaaaa", square_source())
    assert wit is not None
    assert apply(square_source(), wit.substitution) == "aabbaaaa"


def test_unify_guards():
    rp = to_relational(parse_signed("x1 x1^rev"))
    with pytest.raises(InstanceTooLarge):
        member_unify("a" * 40, rp)
    assert member_unify("a" * 40, rp, word_guard=40) is not None


def test_nonerasing_gap_parity_slice_empty():
    assert lang_upto(load("gap_parity.pat"), 12, erasing=False) == []


def test_lang_budget():
    with pytest.raises(BudgetExceeded):
        lang_upto(make_pattern("x1"), 30)


def test_slice_compare():
    p = make_pattern("x1 x2 aaa x3 x4", "(x1,x2) (x1,x3) (x1,x4)")
    q = make_pattern("x1 x2 aaa x3 x4", "(x1,x2) (x3,x4)")
    assert slice_compare(p, p, 8).relation == "equal"
    v = slice_compare(p, q, 10)
    assert v.relation == "subset" and v.a_not_b is None and v.b_not_a is not None
    assert member(v.b_not_a, q) is not None and member(v.b_not_a, p) is None


def test_slice_candidates_find_long_witness():
    p, q = load("long_block.pat"), load("long_block_cover.pat")
    w = expand_word("ab^100a^9ab^100")
    v = slice_compare(p, q, 211, candidates=[w])
    assert v.a_not_b == w


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["eq", "rev", "len"]))
def test_witness_reconstructs_word(seed, kind):
    rng = random.Random(seed)
    rp = random_pattern(rng, kind, max_vars=6)
    w = apply(rp, random_lz_substitution(rp, 2, rng, erasing=False))
    wit = member(w, rp, erasing=False)
    assert wit is not None
    assert apply(rp, wit.substitution) == w
    # non-erasing membership implies erasing membership
    assert member(w, rp, erasing=True) is not None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_len_gap_contents_are_free(seed):
    rng = random.Random(seed)
    rp = random_pattern(rng, "len", max_vars=6)
    w = apply(rp, random_lz_substitution(rp, 3, rng))
    wit = member_len(w, rp)
    chars = list(w)
    for gap, start in zip(wit.anchoring.gaps, (*wit.anchoring.positions, len(w))):
        for k in range(start - gap, start):
            chars[k] = rng.choice("ab")
    assert member_len("".join(chars), rp) is not None
