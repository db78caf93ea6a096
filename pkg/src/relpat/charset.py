"""Characteristic samples and the equivalence / inclusion deciders built on them.

For equal-length patterns a handful of short substitution instances
already pins the language down in several settings:

* alphabets of three or more letters: one-group substitutions with
  lengths 0/1 (erasing) or 2 with everything else at length 1
  (non-erasing), checked in both directions;
* binary alphabets, patterns whose terminal blocks have length >= 3 and
  whose interior blocks meet every group at least twice: for patterns
  with the same terminal skeleton, one carefully chosen word per group
  decides inclusion; otherwise one-group substitutions of length <= 2.

Everything else falls back to a bounded brute-force slice comparison,
which is flagged as ``bounded`` in the verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .core import (
    RelationalPattern,
    are_congruous,
    find_telltale_conjugates,
    forbidden_block_shapes,
    is_p23,
    pattern_str,
)
from .errors import (
    AlphabetTooSmall,
    GroupTooLarge,
    NegativeLabelPresent,
    NonBinaryAlphabet,
    NotAMember,
    NotP23,
    PreconditionViolated,
    UnambiguityCheckFailed,
    WitnessNotFoundWithinBound,
    WrongKind,
)
from .member import all_words, member, slice_compare
from .reversal import morphism_inclusion, morphism_verdict
from .subst import Content, LengthBound, Sampled, apply, enumerate_single_group_lz
from .verdict import EQUIVALENT, INAPPLICABLE, INCLUSION_HOLDS, REFUTED, Verdict



@dataclass(frozen=True)
class LabeledSample:
    entries: tuple[tuple[str, int], ...]
    generator: str = ""

    @classmethod
    def positive(cls, words: Iterable[str], generator: str = "") -> "LabeledSample":
        return cls.build(((w, 1) for w in words), generator)

    @classmethod
    def build(cls, entries: Iterable[tuple[str, int]], generator: str = "") -> "LabeledSample":
        seen: dict = {}
        for w, label in entries:
            if label not in (0, 1):
                raise ValueError(f"label must be 0 or 1, got {label}")
            if seen.get(w, label) != label:
                raise ValueError(f"word {w!r} carries both labels")
            seen[w] = label
        ordered = sorted(seen.items(), key=lambda e: (len(e[0]), e[0]))
        return cls(tuple(ordered), generator)

    def words(self) -> list[str]:
        return [w for w, _ in self.entries]

    def positives(self) -> list[str]:
        return [w for w, label in self.entries if label == 1]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def union(self, other: "LabeledSample", generator: str = "") -> "LabeledSample":
        return LabeledSample.build([*self.entries, *other.entries], generator or self.generator)

    def inconsistency(self, accepts: Callable[[str], bool]) -> Optional[str]:
        """First word whose label disagrees with ``accepts``."""
        for w, label in self.entries:
            if accepts(w) != bool(label):
                return w
        return None

    def consistent_with(self, accepts: Callable[[str], bool]) -> bool:
        return self.inconsistency(accepts) is None


def _require_len(*patterns: RelationalPattern) -> None:
    for rp in patterns:
        if rp.kind != "len":
            raise WrongKind(f"expected the equal-length relation, got {rp.kind}")


def accepts(rp: RelationalPattern, erasing: bool = True, **guards) -> Callable[[str], bool]:
    return lambda w: member(w, rp, erasing, **guards) is not None


# ---------------------------------------------------------------------------
# sample generators


def seps_size(rp: RelationalPattern, ell: int) -> int:
    """Number of substitutions behind the erasing one-group sample (skeleton counted once)."""
    k = len(rp.alphabet)
    total = 1
    for members in rp.groups.groups:
        per = len(members) if rp.kind == "len" else 1
        total += sum(k ** (z * per) for z in range(1, ell + 1))
    return total


def gen_seps(rp: RelationalPattern, ell: int, content: Content = "all", cap: int = 10**6) -> LabeledSample:
    """Erasing one-group sample: one group at a common length <= ell, the rest erased."""
    _require_len(rp)
    if ell < 1:
        raise ValueError("ell must be at least 1")
    if content == "all" and seps_size(rp, ell) > cap:
        raise GroupTooLarge(f"erasing sample has {seps_size(rp, ell)} items, cap is {cap}")
    words = {rp.skeleton()}
    for gi in range(len(rp.groups)):
        for _, w in enumerate_single_group_lz(rp, gi, LengthBound(ell), content, cap, include_zero=False):
            words.add(w)
    return LabeledSample.positive(words, f"seps{ell}")


def s2_size(rp: RelationalPattern) -> int:
    k = len(rp.alphabet)
    sizes = [len(g) if rp.kind == "len" else 1 for g in rp.groups.groups]
    total = 0
    for gi, n in enumerate(sizes):
        rest = sum(sizes) - n
        total += k ** (2 * n + rest)
    return total


def gen_s2_nonerasing(rp: RelationalPattern, content: Content = "all", cap: int = 10**6) -> LabeledSample:
    """Non-erasing sample: one group at length 2, every other variable at length 1."""
    _require_len(rp)
    if content == "all" and s2_size(rp) > cap:
        raise GroupTooLarge(f"non-erasing sample has {s2_size(rp)} items, cap is {cap}")
    words = set()
    for gi in range(len(rp.groups)):
        for _, w in enumerate_single_group_lz(rp, gi, LengthBound(2, erasing=False), content, cap):
            words.add(w)
    return LabeledSample.positive(words, "s2")


def _boundary_letters(rp: RelationalPattern, j: int) -> tuple[Optional[str], Optional[str]]:
    """Last letter of the terminal block before variable block j and first letter after it."""
    terms = rp.blocks.terminal_blocks
    before = terms[j - 1][-1] if j > 0 else None
    after = terms[j][0] if j < len(terms) else None
    return before, after


def _fill_group(rp: RelationalPattern, gi: int, block_words: Sequence[str]) -> str:
    """Word with group gi's members in block j spelling block_words[j], others erased."""
    members = set(rp.groups.groups[gi])
    s = {v: "" for v in rp.variables}
    for j, blk in enumerate(rp.blocks.variable_blocks):
        mine = [v for v in blk if v in members]
        word = block_words[j]
        assert len(word) == len(mine)
        for v, c in zip(mine, word):
            s[v] = c
    return apply(rp, s)


def _group_block_sizes(rp: RelationalPattern, gi: int) -> list[int]:
    members = set(rp.groups.groups[gi])
    return [sum(1 for v in blk if v in members) for blk in rp.blocks.variable_blocks]


def boundary_avoiding_words(rp: RelationalPattern) -> list[str]:
    """One word per group: each member gets a letter unlike both neighbouring terminal letters."""
    words = []
    for gi in range(len(rp.groups)):
        parts = []
        for j, k in enumerate(_group_block_sizes(rp, gi)):
            before, after = _boundary_letters(rp, j)
            c = next(c for c in rp.alphabet if c not in (before, after))
            parts.append(c * k)
        words.append(_fill_group(rp, gi, parts))
    return words


def witness_set_sigma3(rp: RelationalPattern) -> LabeledSample:
    """Skeleton plus one boundary-avoiding word per group."""
    _require_len(rp)
    if len(rp.alphabet) < 3:
        raise AlphabetTooSmall("boundary-avoiding words need at least three letters")
    return LabeledSample.positive([rp.skeleton(), *boundary_avoiding_words(rp)], "sigma3-witness")


def constant_letter_words(rp: RelationalPattern, length: int = 1) -> list[str]:
    """For each group and letter c, the word with every member mapped to c^length."""
    words = []
    for gi in range(len(rp.groups)):
        sizes = _group_block_sizes(rp, gi)
        for c in rp.alphabet:
            words.append(_fill_group(rp, gi, [c * (length * k) for k in sizes]))
    return words


def _unary_letter(w: str) -> Optional[str]:
    return w[0] if w and w == w[0] * len(w) else None


def unambiguous_block_word(alphabet: Sequence[str], before: Optional[str], after: Optional[str], k: int) -> str:
    """Block word for one group between two terminal blocks on a binary alphabet.

    ``before``/``after`` are the neighbouring terminal blocks (None at an end).
    """
    a, b = alphabet
    other = lambda c: b if c == a else a  # noqa: E731
    if before is None and after is None:
        return a * k
    if before is None:
        return other(after[0]) * k
    if after is None:
        return other(before[-1]) * k
    left, right = _unary_letter(before), _unary_letter(after)
    if left is not None and right is not None and left != right:
        # alternate, starting with the following block's letter
        pair = right + left
        return pair * (k // 2) + (left if k % 2 else "")
    if left is not None:
        return other(left) * k
    if right is not None:
        return other(right) * k
    return a * k


def unambiguity_violations(terms: Sequence[str], parts: Sequence[str]) -> list[str]:
    """Check that no terminal block re-anchors across a neighbouring block word."""
    bad = []
    for j, w in enumerate(terms):
        if w in parts[j] + w[:-1]:
            bad.append(f"omega_{j + 1}={w!r} occurs in {parts[j] + w[:-1]!r}")
        if w in w[1:] + parts[j + 1]:
            bad.append(f"omega_{j + 1}={w!r} occurs in {w[1:] + parts[j + 1]!r}")
    return bad


def binary_congruous_parts(rp: RelationalPattern, gi: int) -> list[str]:
    terms = rp.blocks.terminal_blocks
    parts = []
    for j, k in enumerate(_group_block_sizes(rp, gi)):
        before = terms[j - 1] if j > 0 else None
        after = terms[j] if j < len(terms) else None
        parts.append(unambiguous_block_word(rp.alphabet, before, after, k))
    bad = unambiguity_violations(terms, parts)
    if bad:
        raise UnambiguityCheckFailed("; ".join(bad))
    return parts


def witness_set_binary_congruous(rp: RelationalPattern) -> LabeledSample:
    """One unambiguous single-group word per group (binary alphabet, P23 patterns)."""
    _require_len(rp)
    if len(rp.alphabet) != 2:
        raise NonBinaryAlphabet("the unambiguous witness words need a binary alphabet")
    ok, report = is_p23(rp)
    if not ok:
        raise NotP23("; ".join(report))
    words = [_fill_group(rp, gi, binary_congruous_parts(rp, gi)) for gi in range(len(rp.groups))]
    return LabeledSample.positive(words, "p23-witness")


def perturbation_words(rp: RelationalPattern) -> list[str]:
    """Length-1 and length-2 constant words plus single-defect length-2 words per group.

    Every member of a group gets c or cc, except that one member may get
    a two-letter word containing the other letter once.
    """
    words = set(constant_letter_words(rp, 1)) | set(constant_letter_words(rp, 2))
    for gi, members in enumerate(rp.groups.groups):
        for c in rp.alphabet:
            for d in rp.alphabet:
                if d == c:
                    continue
                for v in members:
                    for odd in (c + d, d + c):
                        s = {u: "" for u in rp.variables}
                        for u in members:
                            s[u] = c * 2
                        s[v] = odd
                        words.add(apply(rp, s))
    return sorted(words, key=lambda w: (len(w), w))


def linear_seps2(rp: RelationalPattern) -> LabeledSample:
    return LabeledSample.positive([rp.skeleton(), *perturbation_words(rp)], "seps2-linear")


def linear_seps1(rp: RelationalPattern) -> LabeledSample:
    words = [rp.skeleton(), *constant_letter_words(rp)]
    if len(rp.alphabet) >= 3:
        words += boundary_avoiding_words(rp)
    return LabeledSample.positive(words, "seps1-linear")


# ---------------------------------------------------------------------------
# deciders


def _first_rejected(sample: LabeledSample, rp: RelationalPattern, erasing: bool) -> Optional[str]:
    for w in sample.positives():
        if member(w, rp, erasing) is None:
            return w
    return None


def _refutation(w: str, source: RelationalPattern, other: RelationalPattern, erasing: bool) -> str:
    if member(w, source, erasing) is None:
        raise UnambiguityCheckFailed(f"sample word {w!r} is not generated by its own pattern")
    if member(w, other, erasing) is not None:
        raise UnambiguityCheckFailed(f"refuting word {w!r} is accepted after all")
    return w


def _mutual(a, b, sample_a, sample_b, method, erasing, note="") -> Verdict:
    size = len(sample_a) + len(sample_b)
    w = _first_rejected(sample_a, b, erasing)
    if w is not None:
        return Verdict(REFUTED, method, _refutation(w, a, b, erasing), False, note, "a_not_b", size)
    w = _first_rejected(sample_b, a, erasing)
    if w is not None:
        return Verdict(REFUTED, method, _refutation(w, b, a, erasing), False, note, "b_not_a", size)
    return Verdict(EQUIVALENT, method, None, False, note, None, size)


def _sample_or(full: Callable[[], LabeledSample], size: int, cap: int, fallback: Callable[[], LabeledSample]):
    if size <= cap:
        return full(), ""
    return fallback(), "full sample over cap; structured subset used"


def decide_inclusion_congruous(a: RelationalPattern, b: RelationalPattern, cap: int = 4096) -> Verdict:
    """Inclusion of erasing equal-length languages for congruous binary patterns.

    ``a`` must have terminal blocks of length >= 3 and meet every group at
    least twice in every interior variable block.
    """
    _require_len(a, b)
    if len(a.alphabet) != 2 or set(a.alphabet) != set(b.alphabet):
        raise NonBinaryAlphabet("both patterns need the same binary alphabet")
    if not are_congruous(a, b):
        raise PreconditionViolated("patterns are not congruous (terminal blocks or end blocks differ)")
    ok, report = is_p23(a)
    if not ok:
        raise NotP23("; ".join(report))
    sample = witness_set_binary_congruous(a)
    note = ""
    if seps_size(a, 1) <= cap:
        sample = sample.union(gen_seps(a, 1))
    else:
        note = "erasing one-group sample over cap; unambiguous witness words only"
    w = _first_rejected(sample, b, True)
    if w is not None:
        return Verdict(REFUTED, "binary_p23:congruous", _refutation(w, a, b, True), False, note, "a_not_b", len(sample))
    return Verdict(INCLUSION_HOLDS, "binary_p23:congruous", None, False, note, None, len(sample))


def binary_p23_clause(a: RelationalPattern, b: RelationalPattern) -> Optional[str]:
    """Why the binary deciders do not apply, or None."""
    if len(a.alphabet) != 2 or set(a.alphabet) != set(b.alphabet):
        return "needs the same binary alphabet"
    for name, rp in (("first", a), ("second", b)):
        ok, report = is_p23(rp)
        if not ok:
            return f"{name} pattern not in P23: {report[0]}"
        bad = forbidden_block_shapes(rp)
        if bad:
            return f"{name} pattern has terminal block {bad[0][1]!r} of shape s^n t / s t^n"
    return None


def classify_incongruous_pair(a: RelationalPattern, b: RelationalPattern) -> dict:
    """Structural report on a binary pair: which decision route applies."""
    if len(a.alphabet) != 2:
        raise NonBinaryAlphabet("classification needs a binary alphabet")
    congruous = are_congruous(a, b)
    shapes = forbidden_block_shapes(a, include_short=True)
    shapes_long = forbidden_block_shapes(a)
    pair = find_telltale_conjugates(a, b, a.alphabet) or find_telltale_conjugates(b, a, a.alphabet)
    p23_a, report_a = is_p23(a) if a.kind == "len" else (False, ["not equal-length"])
    p23_b, report_b = is_p23(b) if b.kind == "len" else (False, ["not equal-length"])
    if congruous:
        route = "congruous: unambiguous witness words decide inclusion" if p23_a else "slice"
    elif not shapes:
        route = "incongruous: erasing length<=2 one-group samples, checked both ways"
    else:
        route = "slice"
    return {
        "congruous": congruous,
        "forbidden_shapes": [w for _, w in shapes],
        "forbidden_shapes_long": [w for _, w in shapes_long],
        "telltale_conjugates": None if pair is None else {
            "left": _items_text(pair.left),
            "right": _items_text(pair.right),
            "n": list(pair.n),
            "m": list(pair.m),
        },
        "p23": {"first": p23_a, "second": p23_b, "first_report": report_a, "second_report": report_b},
        "incongruous_premises_hold": (not congruous) and not shapes,
        "route": route,
    }


def _items_text(items) -> str:
    return pattern_str(items)


def decide_equiv(
    a: RelationalPattern,
    b: RelationalPattern,
    method: str = "auto",
    erasing: bool = True,
    max_len: int = 12,
    cap: int = 4096,
    **guards,
) -> Verdict:
    """Language equivalence by the first applicable sample test.

    ``method`` is one of auto, sigma3, binary_p23, slice (and morphism for
    terminal-free reversal patterns).  An explicitly requested method whose
    preconditions fail yields an ``inapplicable`` verdict naming the clause.
    """
    method = method.replace("-", "_")
    if method not in ("auto", "sigma3", "binary_p23", "slice", "morphism"):
        raise ValueError(f"unknown method {method!r}")

    if a.kind != b.kind:
        if method not in ("auto", "slice"):
            raise WrongKind("patterns use different relation kinds")
        return _slice_verdict(a, b, max_len, erasing, **guards)

    if a.kind != "len":
        if method in ("sigma3", "binary_p23"):
            raise WrongKind(f"{method} is defined for the equal-length relation")
        if method in ("auto", "morphism") and a.kind == "rev" and erasing:
            v = morphism_verdict(a, b, **guards)
            if v is not None or method == "morphism":
                return v or Verdict(INAPPLICABLE, "morphism", note="patterns are not terminal-free")
        return _slice_verdict(a, b, max_len, erasing, **guards)
    if method == "morphism":
        raise WrongKind("morphism search is defined for the reversal relation")

    if a == b:
        return Verdict(EQUIVALENT, "identical", None, False)

    if method == "auto":
        if len(a.alphabet) >= 3 and set(a.alphabet) == set(b.alphabet):
            method = "sigma3"
        elif erasing and binary_p23_clause(a, b) is None:
            method = "binary_p23"
        else:
            return _slice_verdict(a, b, max_len, erasing, **guards)

    if method == "slice":
        return _slice_verdict(a, b, max_len, erasing, **guards)

    if method == "sigma3":
        if len(a.alphabet) < 3 or set(a.alphabet) != set(b.alphabet):
            return Verdict(INAPPLICABLE, "sigma3", note="needs the same alphabet of at least three letters")
        if erasing:
            sa, na = _sample_or(lambda: gen_seps(a, 1), seps_size(a, 1), cap, lambda: linear_seps1(a))
            sb, nb = _sample_or(lambda: gen_seps(b, 1), seps_size(b, 1), cap, lambda: linear_seps1(b))
            return _mutual(a, b, sa, sb, "sigma3", erasing, na or nb)
        sa, na = _sample_or(lambda: gen_s2_nonerasing(a), s2_size(a), cap, lambda: _s2_subset(a))
        sb, nb = _sample_or(lambda: gen_s2_nonerasing(b), s2_size(b), cap, lambda: _s2_subset(b))
        return _mutual(a, b, sa, sb, "sigma3:s2", erasing, na or nb)

    # binary_p23
    if not erasing:
        return Verdict(INAPPLICABLE, "binary_p23", note="defined for erasing languages only")
    clause = binary_p23_clause(a, b)
    if clause is not None:
        return Verdict(INAPPLICABLE, "binary_p23", note=clause)
    if are_congruous(a, b):
        forward = decide_inclusion_congruous(a, b, cap)
        if forward.decision == REFUTED:
            return Verdict(REFUTED, forward.method, forward.witness, False, forward.note, "a_not_b", forward.sample_size)
        backward = decide_inclusion_congruous(b, a, cap)
        if backward.decision == REFUTED:
            return Verdict(REFUTED, backward.method, backward.witness, False, backward.note, "b_not_a", backward.sample_size)
        return Verdict(EQUIVALENT, "binary_p23:congruous", None, False, forward.note or backward.note)
    sa, na = _sample_or(lambda: gen_seps(a, 2), seps_size(a, 2), cap, lambda: linear_seps2(a))
    sb, nb = _sample_or(lambda: gen_seps(b, 2), seps_size(b, 2), cap, lambda: linear_seps2(b))
    note = "mutual sample test; sound for equivalence when one inclusion is known"
    if na or nb:
        note += "; " + (na or nb)
    return _mutual(a, b, sa, sb, "binary_p23:incongruous", erasing, note)


def _s2_subset(rp: RelationalPattern) -> LabeledSample:
    return gen_s2_nonerasing(rp, Sampled(256, seed=0))


def _slice_verdict(a, b, max_len, erasing, **guards) -> Verdict:
    v = slice_compare(a, b, max_len, erasing, **guards)
    if v.relation == "equal":
        return Verdict(EQUIVALENT, f"slice(L={max_len})", None, True, "bounded slice check, not a proof")
    if v.a_not_b is not None:
        return Verdict(REFUTED, f"slice(L={max_len})", v.a_not_b, True, "", "a_not_b")
    return Verdict(REFUTED, f"slice(L={max_len})", v.b_not_a, True, "", "b_not_a")


def decide_inclusion(a: RelationalPattern, b: RelationalPattern, max_len: int = 12, cap: int = 4096, erasing: bool = True, **guards) -> Verdict:
    """Inclusion of L(a) in L(b): exact on congruous binary P23 input, else a slice check."""
    if (
        erasing
        and a.kind == b.kind == "len"
        and len(a.alphabet) == 2
        and set(a.alphabet) == set(b.alphabet)
        and are_congruous(a, b)
        and is_p23(a)[0]
    ):
        return decide_inclusion_congruous(a, b, cap)
    if a.kind == b.kind == "rev" and erasing:
        v = morphism_inclusion(a, b, **guards)
        if v is not None:
            return v
    v = slice_compare(a, b, max_len, erasing, **guards)
    if v.a_not_b is None:
        return Verdict(INCLUSION_HOLDS, f"slice(L={max_len})", None, True, "bounded slice check, not a proof")
    return Verdict(REFUTED, f"slice(L={max_len})", v.a_not_b, True, "", "a_not_b")


# ---------------------------------------------------------------------------
# telltales and characteristic sets


class SliceOracle:
    """Language comparisons on the slice of words up to ``max_len`` (cached)."""

    def __init__(self, max_len: int = 8, erasing: bool = True, **guards):
        self.max_len = max_len
        self.erasing = erasing
        self.guards = guards
        self._cache: dict = {}

    def language(self, rp: RelationalPattern) -> frozenset:
        if rp not in self._cache:
            words = all_words(rp.alphabet, self.max_len)
            self._cache[rp] = frozenset(w for w in words if member(w, rp, self.erasing, **self.guards))
        return self._cache[rp]

    def included(self, a: RelationalPattern, b: RelationalPattern) -> bool:
        return self.language(a) <= self.language(b)

    def equal(self, a: RelationalPattern, b: RelationalPattern) -> bool:
        return self.language(a) == self.language(b)

    def accepts(self, rp: RelationalPattern, w: str) -> bool:
        if len(w) <= self.max_len:
            return w in self.language(rp)
        return member(w, rp, self.erasing, **self.guards) is not None


def charset_from_telltales(
    family: Sequence[RelationalPattern],
    telltales: Sequence[Iterable[str]],
    oracle=None,
    search_bound: int = 8,
    erasing: bool = True,
) -> list[LabeledSample]:
    """Positive characteristic sets from telltales.

    C_i holds T_i plus, for every earlier j with L_i not included in L_j,
    the first word (length-lexicographic, length <= search_bound) of
    L_i minus L_j.
    """
    oracle = oracle or SliceOracle(search_bound, erasing)
    out = []
    for i, (rp, tell) in enumerate(zip(family, telltales)):
        tell = list(tell)
        for w in tell:
            if member(w, rp, erasing) is None:
                raise NotAMember(f"telltale word {w!r} is not in language {i}")
        extra = []
        for j in range(i):
            if oracle.included(rp, family[j]):
                continue
            found = None
            for w in all_words(rp.alphabet, search_bound):
                if member(w, rp, erasing) is not None and member(w, family[j], erasing) is None:
                    found = w
                    break
            if found is None:
                raise WitnessNotFoundWithinBound(
                    f"no word of length <= {search_bound} separates language {i} from language {j}"
                )
            extra.append(found)
        out.append(LabeledSample.positive([*tell, *extra], "telltale+separators"))
    return out


def telltales_from_charsets(samples: Sequence[LabeledSample]) -> list[set[str]]:
    out = []
    for k, sample in enumerate(samples):
        if any(label != 1 for _, label in sample.entries):
            raise NegativeLabelPresent(f"sample {k} contains a negative example")
        out.append({w for w, _ in sample.entries})
    return out


def check_characteristic_family(family, samples, oracle) -> tuple[bool, list[str]]:
    """Both conditions of a characteristic-set family, with every failure listed."""
    problems = []
    consistent = [[samples[i].consistent_with(lambda w, rp=rp: oracle.accepts(rp, w)) for rp in family]
                  for i in range(len(family))]
    for i in range(len(family)):
        if not consistent[i][i]:
            problems.append(f"C_{i} is inconsistent with its own language")
    for i, j in itertools.combinations(range(len(family)), 2):
        if oracle.equal(family[i], family[j]):
            continue
        if consistent[i][j] and consistent[j][i]:
            problems.append(f"C_{i} and C_{j} are each consistent with the other's language")
    return not problems, problems


def check_telltale_family(family, telltales, oracle) -> tuple[bool, list[str]]:
    problems = []
    for i, rp in enumerate(family):
        if not all(oracle.accepts(rp, w) for w in telltales[i]):
            problems.append(f"T_{i} is not contained in its language")
    for i, j in itertools.permutations(range(len(family)), 2):
        if oracle.equal(family[i], family[j]):
            continue
        inside = all(oracle.accepts(family[j], w) for w in telltales[i])
        if inside and oracle.included(family[j], family[i]):
            problems.append(f"T_{i} lies in language {j}, a proper subset of language {i}")
    return not problems, problems
