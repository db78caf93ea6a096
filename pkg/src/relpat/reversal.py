"""Reversal patterns in signed form, variable morphisms, and the anti-telltale construction.

A signed pattern writes every variable of a reversal group as the group
representative, marked ``rev`` when the variable must be replaced by the
reverse of the representative's word.  For terminal-free patterns,
language inclusion is witnessed by a morphism mapping one signed pattern
onto the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .core import RelationalPattern, Var
from .errors import (
    EmptyConstruction,
    InstanceTooLarge,
    InvalidDecomposition,
    MissingImage,
    NonBinaryAlphabet,
    NotAMember,
    NotExpressible,
    NotTerminalFree,
    WrongKind,
)
from .member import all_words, member, unify
from .subst import apply, validate
from .verdict import EQUIVALENT, INCLUSION_HOLDS, REFUTED, Verdict


@dataclass(frozen=True, order=True)
class SVar:
    base: str
    rev: bool = False

    def flip(self) -> "SVar":
        return SVar(self.base, not self.rev)

    def __str__(self):
        return self.base + ("^rev" if self.rev else "")


def signed_str(items) -> str:
    return " ".join(str(i) for i in items) if items else "ε"


def parse_signed(text: str, alphabet: Sequence[str] = ()) -> tuple:
    """``"x1 x1^rev x2"`` -> signed items; tokens listed in ``alphabet`` are terminals."""
    out = []
    for tok in text.split():
        if tok in alphabet:
            out.append(tok)
        elif tok.endswith("^rev"):
            out.append(SVar(tok[:-4], True))
        else:
            out.append(SVar(tok))
    return tuple(out)


def reverse_signed(items: Sequence) -> tuple:
    """Reverse a signed string and flip every variable's orientation."""
    return tuple(i.flip() if isinstance(i, SVar) else i for i in reversed(tuple(items)))


def signed_form(rp: RelationalPattern) -> tuple:
    if rp.kind != "rev":
        raise WrongKind("signed form is defined for the reversal relation")
    table = rp.groups
    out = []
    for item in rp.items:
        if isinstance(item, Var):
            gi = table.group_of(item.name)
            out.append(SVar(table.representative(gi), table.is_reversed(item.name)))
        else:
            out.append(item)
    return tuple(out)


def normalize_signed(items: Sequence) -> tuple:
    """Flip bases whose first occurrence is reversed, so it reads plain."""
    first: dict = {}
    for i in items:
        if isinstance(i, SVar) and i.base not in first:
            first[i.base] = i.rev
    return tuple(i.flip() if isinstance(i, SVar) and first[i.base] else i for i in items)


def to_relational(items: Sequence, alphabet: Sequence[str] = ("a", "b")) -> RelationalPattern:
    """Expand a signed pattern into a reversal pattern with one variable per occurrence.

    The first occurrence of a base keeps its name, later ones become
    ``base_2``, ``base_3``, ...  Every reversed occurrence is paired with
    the first plain one and every further plain occurrence with the first
    reversed one.  A base repeated only in one orientation has no
    reversal-relation counterpart.
    """
    items = normalize_signed(items)
    taken = {i.base for i in items if isinstance(i, SVar)}
    seen: dict = {}
    names = []
    for i in items:
        if not isinstance(i, SVar):
            names.append(i)
            continue
        k = seen.get(i.base, 0) + 1
        seen[i.base] = k
        if k == 1:
            name = i.base
        else:
            name = f"{i.base}_{k}"
            while name in taken:
                name += "'"
            taken.add(name)
        names.append(Var(name))

    pairs = set()
    by_base: dict = {}
    for i, name in zip(items, names):
        if isinstance(i, SVar):
            by_base.setdefault(i.base, []).append((name.name, i.rev))
    for base, occ in by_base.items():
        plain = [n for n, r in occ if not r]
        rev = [n for n, r in occ if r]
        if len(occ) > 1 and not rev:
            raise NotExpressible(f"{base} repeats without a reversed occurrence")
        if rev:
            pairs.update((plain[0], q) for q in rev)
            pairs.update((p, rev[0]) for p in plain[1:])
    return RelationalPattern(tuple(alphabet), tuple(names), "rev", frozenset(pairs))


def apply_morphism(m: Mapping[str, Sequence], items: Sequence) -> tuple:
    out = []
    for i in items:
        if isinstance(i, SVar):
            if i.base not in m:
                raise MissingImage(f"morphism has no image for {i.base}")
            image = tuple(m[i.base])
            out.extend(reverse_signed(image) if i.rev else image)
        else:
            out.append(i)
    return tuple(out)


def is_reversal_obedient(m: Mapping[str, Sequence], rp: RelationalPattern) -> bool:
    """Per-variable images induced by ``m`` satisfy image(x) = reverse(image(y)) for related x, y."""
    table = rp.groups
    images = {}
    for v in rp.variables:
        rep = table.representative(table.group_of(v))
        img = tuple(m[rep])
        images[v] = reverse_signed(img) if table.is_reversed(v) else img
    return all(images[x] == reverse_signed(images[y]) for x, y in rp.pairs)


def _bases(items) -> list[str]:
    return list(dict.fromkeys(i.base for i in items if isinstance(i, SVar)))


def morphism_search(source: Sequence, target: Sequence, var_guard: int = 12, word_guard: int = 30) -> Optional[dict]:
    """A morphism m with apply_morphism(m, source) == target, or None.

    Both signed patterns must be terminal-free.  Candidate images are
    tried shortest first, bases in order of first occurrence.
    """
    source, target = tuple(source), tuple(target)
    for name, items in (("source", source), ("target", target)):
        if not items or any(not isinstance(i, SVar) for i in items):
            raise NotTerminalFree(f"{name} pattern must be a nonempty string of variables")
    if len(_bases(source)) > var_guard or len(target) > word_guard:
        raise InstanceTooLarge(f"guards {var_guard}/{word_guard} exceeded")
    bind = unify(target, [(i.base, i.rev) for i in source], 0, reverse_signed)
    if bind is None:
        return None
    m = {b: tuple(bind[b]) for b in _bases(source)}
    assert apply_morphism(m, source) == target
    return m


def _terminal_free(rp: RelationalPattern) -> bool:
    return all(isinstance(i, Var) for i in rp.items)


def morphism_inclusion(a: RelationalPattern, b: RelationalPattern, search_len: int = 10, **guards):
    """Inclusion of L(a) in L(b) for terminal-free reversal patterns (None if not terminal-free)."""

    if a.kind != "rev" or b.kind != "rev" or not (_terminal_free(a) and _terminal_free(b)):
        return None
    m = morphism_search(signed_form(b), signed_form(a), **guards)
    if m is not None:
        return Verdict(INCLUSION_HOLDS, "morphism", None, False, "morphism " + _morphism_text(m))
    for w in all_words(a.alphabet, search_len):
        if member(w, a) is not None and member(w, b) is None:
            return Verdict(REFUTED, "morphism", w, False, "", "a_not_b")
    return Verdict(REFUTED, "morphism", None, False, f"no morphism exists; no separating word up to length {search_len}", "a_not_b")


def morphism_verdict(a: RelationalPattern, b: RelationalPattern, **guards):

    forward = morphism_inclusion(a, b, **guards)
    if forward is None:
        return None
    if forward.decision == REFUTED:
        return forward
    backward = morphism_inclusion(b, a, **guards)
    if backward.decision == REFUTED:
        return Verdict(REFUTED, "morphism", backward.witness, False, backward.note, "b_not_a")
    return Verdict(EQUIVALENT, "morphism", None, False)


def _morphism_text(m: Mapping) -> str:
    return ", ".join(f"{k} -> {signed_str(v)}" for k, v in m.items())


# ---------------------------------------------------------------------------
# anti-telltale construction


def square_source(alphabet: Sequence[str] = ("a", "b")) -> RelationalPattern:
    """The pattern x1 x1^rev x2 x2^rev x3 x3^rev as a reversal pattern."""
    items = tuple(Var(n) for n in ("x1", "x1r", "x2", "x2r", "x3", "x3r"))
    return RelationalPattern(tuple(alphabet), items, "rev", frozenset({("x1", "x1r"), ("x2", "x2r"), ("x3", "x3r")}))


SOURCE_SIGNED = tuple(SVar(f"x{k}", r) for k in (1, 2, 3) for r in (False, True))


def is_decomposition(w: str, lengths: Sequence[int]) -> bool:
    if len(lengths) != 3 or any(n < 0 for n in lengths) or 2 * sum(lengths) != len(w):
        return False
    pos = 0
    for n in lengths:
        v = w[pos:pos + n]
        if w[pos + n:pos + 2 * n] != v[::-1]:
            return False
        pos += 2 * n
    return True


def decompositions(w: str):
    """All (|v1|,|v2|,|v3|) with w = v1 v1^rev v2 v2^rev v3 v3^rev, lexicographically."""
    if len(w) % 2:
        return
    half = len(w) // 2
    for l1 in range(half + 1):
        for l2 in range(half - l1 + 1):
            lengths = (l1, l2, half - l1 - l2)
            if is_decomposition(w, lengths):
                yield lengths


def _parts(w: str, lengths) -> list[str]:
    out, pos = [], 0
    for n in lengths:
        out.append(w[pos:pos + n])
        pos += 2 * n
    return out


@dataclass(frozen=True)
class AntiTelltale:
    signed: tuple
    pattern: RelationalPattern
    witnesses: tuple
    morphism: dict
    alphas: tuple
    decompositions: tuple


def anti_telltale(words: Sequence[str], decomps: Optional[Sequence[Sequence[int]]] = None, alphabet=("a", "b")) -> AntiTelltale:
    """Pattern covering every word of ``words`` whose language is strictly inside the source language.

    Word i contributes the letter variables x_{2i-1} (first letter) and
    x_{2i} (second letter).  The result is checked before it is returned:
    each word is produced by the recorded substitution and the morphism
    maps the source pattern onto the constructed one.
    """
    if len(alphabet) != 2:
        raise NonBinaryAlphabet("the construction is defined over two letters")
    words = list(words)
    if decomps is not None and len(decomps) != len(words):
        raise InvalidDecomposition("need one decomposition per word")
    chosen = []
    for i, w in enumerate(words):
        if any(c not in alphabet for c in w):
            raise NotAMember(f"{w!r} uses letters outside the alphabet")
        if decomps is not None:
            lengths = tuple(decomps[i])
            if not is_decomposition(w, lengths):
                raise InvalidDecomposition(f"{lengths} does not split {w!r} into v1 v1^rev v2 v2^rev v3 v3^rev")
        else:
            lengths = next(decompositions(w), None)
            if lengths is None:
                raise NotAMember(f"{w!r} is not of the form v1 v1^rev v2 v2^rev v3 v3^rev")
        chosen.append(lengths)

    alphas = []
    letter_vars = []
    for i, (w, lengths) in enumerate(zip(words, chosen), 1):
        to_var = {alphabet[0]: SVar(f"x{2 * i - 1}"), alphabet[1]: SVar(f"x{2 * i}")}
        letter_vars.append(to_var)
        back = lambda s: tuple(to_var[c] for c in s)  # noqa: E731
        v1, v2, v3 = _parts(w, lengths)
        special = False
        for s in alphabet:
            other = alphabet[1] if s == alphabet[0] else alphabet[0]
            if v3.count(s) == 1 and set(v1 + v2) <= {other}:
                special = True
        if special:
            alphas.append((back(v1 + v2), back(v3), ()))
        else:
            alphas.append((back(v1), back(v2), back(v3)))

    ys = [tuple(v for a in alphas for v in a[k]) for k in range(3)]
    if not any(ys):
        raise EmptyConstruction("every building block is empty")
    signed = tuple(v for y in ys for v in (*y, *reverse_signed(y)))
    pattern = to_relational(signed, alphabet)
    morphism = {f"x{k + 1}": ys[k] for k in range(3)}

    if apply_morphism(morphism, SOURCE_SIGNED) != signed:
        raise AssertionError("morphism does not map the source onto the constructed pattern")
    # the reversal graph of the expansion is built so that its signed form is the construction
    if signed_form(pattern) != normalize_signed(signed):
        raise AssertionError("expanded pattern does not match its signed form")

    witnesses = []
    bases = [i.base for i in signed]
    for w, to_var in zip(words, letter_vars):
        image = {sv.base: c for c, sv in to_var.items()}
        s = {}
        for var, base in zip(pattern.variables, bases):
            s[var] = image.get(base, "")
        ok, why = validate(pattern, s)
        if not ok or apply(pattern, s) != w:
            raise AssertionError(f"constructed pattern does not produce {w!r}: {why}")
        witnesses.append(s)
    return AntiTelltale(signed, pattern, tuple(witnesses), morphism, tuple(alphas), tuple(chosen))


def properness_witness(source: RelationalPattern, constructed: RelationalPattern, bound: int = 4, **guards) -> Optional[str]:
    """First a^{2k} bb a^{2l} (k != l, both <= bound) in the source language but not the constructed one."""
    a, b = source.alphabet[0], source.alphabet[1]
    pairs = sorted(((k, l) for k in range(1, bound + 1) for l in range(1, bound + 1) if k != l),
                   key=lambda kl: (kl[0] + kl[1], kl[0]))
    for k, l in pairs:
        w = a * (2 * k) + b * 2 + a * (2 * l)
        if member(w, source, **guards) is not None and member(w, constructed, **guards) is None:
            return w
    return None
