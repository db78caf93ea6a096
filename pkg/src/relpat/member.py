"""Membership deciders and brute-force language slices.

Equal-length membership reduces to placing the terminal blocks inside the
word and asking whether the resulting gap lengths are a nonnegative (or
positive) integer combination of the groups' per-block counts.  Equality
and reversal membership use a backtracking unifier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .core import RelationalPattern, Var, block_counts
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InstanceTooLarge,
    UnambiguityCheckFailed,
    WrongKind,
    ZeroGenerator,
)
from .subst import apply, validate

NONNEGATIVE = "nonnegative"
STRICTLY_POSITIVE = "strictly_positive"


@dataclass(frozen=True)
class Anchoring:
    positions: tuple[int, ...]
    gaps: tuple[int, ...]


@dataclass(frozen=True)
class MembershipWitness:
    substitution: dict
    anchoring: Optional[Anchoring] = None
    coefficients: Optional[dict] = None

    def to_json(self) -> dict:
        out = {}
        if self.anchoring is not None:
            out["anchoring"] = list(self.anchoring.positions)
            out["gaps"] = list(self.anchoring.gaps)
        if self.coefficients is not None:
            out["coefficients"] = {str(k): v for k, v in self.coefficients.items()}
        out["substitution"] = dict(self.substitution)
        return out


# ---------------------------------------------------------------------------
# integer combinations


def nonneg_combination(target, generators, mode: str = NONNEGATIVE) -> Optional[tuple[int, ...]]:
    """Coefficients c with sum(c[g] * generators[g]) == target, or None.

    The search is exhaustive inside the box c[g] <= min(target[j] // gen[j])
    and returns the lexicographically smallest solution.
    """
    target = tuple(target)
    gens = tuple(tuple(g) for g in generators)
    for g in gens:
        if len(g) != len(target):
            raise DimensionMismatch(f"generator {g} has dimension {len(g)}, target has {len(target)}")
        if not any(g):
            raise ZeroGenerator("all-zero generator vector")
        if any(x < 0 for x in g):
            raise ValueError("generator entries must be nonnegative")
    if any(x < 0 for x in target):
        return None
    if mode == STRICTLY_POSITIVE:
        reduced = tuple(t - sum(g[j] for g in gens) for j, t in enumerate(target))
        if any(x < 0 for x in reduced):
            return None
        found = _solve(reduced, gens)
        return None if found is None else tuple(c + 1 for c in found)
    if mode != NONNEGATIVE:
        raise ValueError(f"unknown mode {mode!r}")
    return _solve(target, gens)


@lru_cache(maxsize=1 << 16)
def _solve(target: tuple[int, ...], gens: tuple[tuple[int, ...], ...]) -> Optional[tuple[int, ...]]:
    if not gens:
        return () if not any(target) else None
    head, rest = gens[0], gens[1:]
    # dimensions no remaining generator touches must be exhausted by head
    cover = [any(g[j] for g in rest) for j in range(len(target))]
    top = min(target[j] // head[j] for j in range(len(target)) if head[j])
    for c in range(top + 1):
        left = tuple(t - c * h for t, h in zip(target, head))
        if any(left[j] and not cover[j] for j in range(len(left))):
            continue
        sub = _solve(left, rest)
        if sub is not None:
            return (c,) + sub
    return None


# ---------------------------------------------------------------------------
# equal-length membership


def anchorings(w: str, rp: RelationalPattern) -> Iterator[Anchoring]:
    """Every in-order, non-overlapping placement of the terminal blocks.

    Placements are produced leftmost-first.  A block is pinned to the word
    boundary when the neighbouring end variable block is empty.
    """
    blocks = rp.blocks
    terms = blocks.terminal_blocks
    n = len(terms)
    pin_left = not blocks.variable_blocks[0]
    pin_right = not blocks.variable_blocks[-1]
    if n == 0:
        yield Anchoring((), (len(w),))
        return
    suffix_need = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix_need[j] = suffix_need[j + 1] + len(terms[j])

    def rec(j: int, start: int, pos: tuple[int, ...]):
        if j == n:
            end = pos[-1] + len(terms[-1])
            if pin_right and end != len(w):
                return
            gaps = [pos[0]]
            for k in range(1, n):
                gaps.append(pos[k] - pos[k - 1] - len(terms[k - 1]))
            gaps.append(len(w) - end)
            yield Anchoring(pos, tuple(gaps))
            return
        last = len(w) - suffix_need[j]
        if j == 0 and pin_left:
            candidates = [0] if last >= 0 else []
        elif j == n - 1 and pin_right:
            candidates = [last] if last >= start else []
        else:
            candidates = range(start, last + 1)
        for i in candidates:
            if w.startswith(terms[j], i):
                yield from rec(j + 1, i + len(terms[j]), pos + (i,))

    yield from rec(0, 0, ())


def _check_kind(rp: RelationalPattern, kinds: Iterable[str]) -> None:
    if rp.kind not in kinds:
        raise WrongKind(f"relation kind {rp.kind} not supported here")


def _len_substitution(w: str, rp: RelationalPattern, anchor: Anchoring, coeffs: Sequence[int]) -> dict:
    table = rp.groups
    blocks = rp.blocks
    s = {}
    starts = [0] + [p + len(t) for p, t in zip(anchor.positions, blocks.terminal_blocks)]
    for blk, pos in zip(blocks.variable_blocks, starts):
        for v in blk:
            n = coeffs[table.group_of(v)]
            s[v] = w[pos:pos + n]
            pos += n
    return s


def member_len(w: str, rp: RelationalPattern, erasing: bool = True) -> Optional[MembershipWitness]:
    _check_kind(rp, ("len",))
    if any(c not in rp.alphabet for c in w):
        return None
    gens = [block_counts(rp, g) for g in range(len(rp.groups))]
    mode = NONNEGATIVE if erasing else STRICTLY_POSITIVE
    for anchor in anchorings(w, rp):
        coeffs = nonneg_combination(anchor.gaps, gens, mode)
        if coeffs is None:
            continue
        s = _len_substitution(w, rp, anchor, coeffs)
        _verify(w, rp, s, erasing)
        return MembershipWitness(s, anchor, {g: c for g, c in enumerate(coeffs)})
    return None


def _verify(w: str, rp: RelationalPattern, s: dict, erasing: bool) -> None:
    ok, why = validate(rp, s)
    if not ok or apply(rp, s) != w or (not erasing and any(not v for v in s.values())):
        raise UnambiguityCheckFailed(f"membership witness does not reproduce {w!r}: {why}")


# ---------------------------------------------------------------------------
# unification for equality and reversal


def _reverse_str(x):
    return x[::-1]


def unify(
    target: Sequence,
    items: Sequence,
    min_len: int = 0,
    reverse: Callable = _reverse_str,
) -> Optional[dict]:
    """Match ``items`` against ``target`` by binding keys to slices.

    ``items`` holds literals (matched against one target element) and
    ``(key, flipped)`` occurrences; a flipped occurrence matches the
    reverse of its key's binding.  Keys are bound in order of first
    occurrence, shortest candidate first.  Returns the bindings or None.
    """
    target = tuple(target)
    items = list(items)
    total = len(target)
    occ_count: dict = {}
    for it in items:
        if isinstance(it, tuple):
            occ_count[it[0]] = occ_count.get(it[0], 0) + 1

    # minimum length still needed by items[k:] for unbound keys
    def need(k: int, bound: dict) -> int:
        n = 0
        for it in items[k:]:
            if isinstance(it, tuple):
                b = bound.get(it[0])
                n += len(b) if b is not None else min_len
            else:
                n += 1
        return n

    bound: dict = {}

    def rec(k: int, pos: int) -> bool:
        if k == len(items):
            return pos == total
        it = items[k]
        if not isinstance(it, tuple):
            return pos < total and target[pos] == it and rec(k + 1, pos + 1)
        key, flipped = it
        b = bound.get(key)
        if b is not None:
            want = reverse(b) if flipped else b
            n = len(want)
            return tuple(target[pos:pos + n]) == tuple(want) and rec(k + 1, pos + n)
        rest = need(k + 1, bound)
        remaining_occ = sum(1 for x in items[k:] if isinstance(x, tuple) and x[0] == key)
        n = min_len
        while pos + n * remaining_occ + rest - min_len * (remaining_occ - 1) <= total:
            piece = tuple(target[pos:pos + n])
            bound[key] = reverse(piece) if flipped else piece
            if rec(k + 1, pos + n):
                return True
            del bound[key]
            n += 1
        return False

    if not rec(0, 0):
        return None
    return dict(bound)


def member_unify(
    w: str,
    rp: RelationalPattern,
    erasing: bool = True,
    var_guard: int = 12,
    word_guard: int = 30,
) -> Optional[MembershipWitness]:
    """Membership for equality and reversal relations by backtracking.

    ``var_guard`` bounds the number of groups (free unknowns) and
    ``word_guard`` the word length.
    """
    _check_kind(rp, ("eq", "rev"))
    if len(rp.groups) > var_guard or len(w) > word_guard:
        raise InstanceTooLarge(
            f"{len(rp.groups)} groups / length {len(w)} exceed guards {var_guard}/{word_guard}"
        )
    if any(c not in rp.alphabet for c in w):
        return None
    table = rp.groups
    items = [
        (table.group_of(i.name), table.is_reversed(i.name)) if isinstance(i, Var) else i
        for i in rp.items
    ]
    bind = unify(w, items, 0 if erasing else 1)
    if bind is None:
        return None
    s = {}
    for v in rp.variables:
        word = "".join(bind[table.group_of(v)])
        s[v] = word[::-1] if table.is_reversed(v) else word
    _verify(w, rp, s, erasing)
    return MembershipWitness(s)


def member(w: str, rp: RelationalPattern, erasing: bool = True, **guards) -> Optional[MembershipWitness]:
    if rp.kind == "len":
        return member_len(w, rp, erasing)
    return member_unify(w, rp, erasing, **guards)


# ---------------------------------------------------------------------------
# slices


def all_words(alphabet: Sequence[str], max_len: int, budget: int = 1 << 20) -> Iterator[str]:
    """Every word of length <= max_len in length-then-lexicographic order."""
    if len(alphabet) ** max_len > budget:
        raise BudgetExceeded(f"|alphabet|^{max_len} exceeds the slice budget {budget}")
    for n in range(max_len + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


def lang_upto(rp: RelationalPattern, max_len: int, erasing: bool = True, budget: int = 1 << 20, **guards) -> list[str]:
    return [w for w in all_words(rp.alphabet, max_len, budget) if member(w, rp, erasing, **guards)]


def length_lex_key(alphabet: Sequence[str]):
    rank = {c: k for k, c in enumerate(alphabet)}
    return lambda w: (len(w), [rank.get(c, len(rank)) for c in w])


@dataclass(frozen=True)
class SliceVerdict:
    relation: str
    a_not_b: Optional[str]
    b_not_a: Optional[str]
    bound: int
    words_checked: int = field(default=0, compare=False)


def slice_compare(
    a: RelationalPattern,
    b: RelationalPattern,
    max_len: int,
    erasing: bool = True,
    candidates: Optional[Iterable[str]] = None,
    budget: int = 1 << 20,
    **guards,
) -> SliceVerdict:
    """Compare two languages on all words up to ``max_len``.

    With ``candidates`` only the given words are examined; this lets long
    hand-picked words be checked where a full slice is out of reach.
    """
    alphabet = list(dict.fromkeys([*a.alphabet, *b.alphabet]))
    if candidates is None:
        words = all_words(alphabet, max_len, budget)
    else:
        words = sorted(set(candidates), key=length_lex_key(alphabet))
    a_not_b = b_not_a = None
    count = 0
    for w in words:
        count += 1
        in_a = member(w, a, erasing, **guards) is not None
        in_b = member(w, b, erasing, **guards) is not None
        if in_a and not in_b and a_not_b is None:
            a_not_b = w
        elif in_b and not in_a and b_not_a is None:
            b_not_a = w
        if a_not_b is not None and b_not_a is not None:
            break
    if a_not_b is None and b_not_a is None:
        rel = "equal"
    elif a_not_b is None:
        rel = "subset"
    elif b_not_a is None:
        rel = "superset"
    else:
        rel = "incomparable"
    return SliceVerdict(rel, a_not_b, b_not_a, max_len, count)
