"""Substitutions: validity, application and generators of bounded-length ones.

A substitution is a plain ``dict`` from variable name to word.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence, Union

from .core import GroupRef, RelationalPattern, Var, resolve_group
from .errors import GroupTooLarge, MissingVariable

Substitution = dict


@dataclass(frozen=True)
class LengthBound:
    z: int
    erasing: bool = True

    def __post_init__(self):
        if self.z < 0:
            raise ValueError("length bound must be nonnegative")


@dataclass(frozen=True)
class Sampled:
    """Draw ``k`` pseudorandom content combinations from ``seed``."""

    k: int
    seed: int = 0


Content = Union[str, Sampled]


def _check_domain(variables: Sequence[str], s: Mapping[str, str]) -> None:
    for v in variables:
        if v not in s:
            raise MissingVariable(f"substitution has no image for {v}")


def validate(rp: RelationalPattern, s: Mapping[str, str]) -> tuple[bool, Optional[str]]:
    """Check that ``s`` respects every relation pair; return the first violation."""
    _check_domain(rp.variables, s)
    table = rp.groups
    for x, y in sorted(rp.pairs):
        u, v = s[x], s[y]
        if rp.kind == "len":
            ok = len(u) == len(v)
        elif rp.kind == "eq":
            ok = u == v
        else:
            same = table.is_reversed(x) == table.is_reversed(y)
            ok = u == v if same else u == v[::-1]
        if not ok:
            return False, f"({x},{y}): {u!r} and {v!r} violate the {rp.kind} relation"
    return True, None


def apply(p, s: Mapping[str, str]) -> str:
    items = p.items if isinstance(p, RelationalPattern) else p
    out = []
    for item in items:
        if isinstance(item, Var):
            if item.name not in s:
                raise MissingVariable(f"substitution has no image for {item.name}")
            out.append(s[item.name])
        else:
            out.append(item)
    return "".join(out)


def words_of_length(alphabet: Sequence[str], n: int) -> Iterator[str]:
    for t in itertools.product(alphabet, repeat=n):
        yield "".join(t)


def _group_choices(rp: RelationalPattern, gi: int, length: int) -> int:
    """Number of content choices for one group at a common length."""
    size = len(rp.groups.groups[gi]) if rp.kind == "len" else 1
    return len(rp.alphabet) ** (length * size)


def _group_assignments(rp: RelationalPattern, gi: int, length: int) -> Iterator[dict]:
    members = rp.groups.groups[gi]
    if rp.kind == "len":
        per = [list(words_of_length(rp.alphabet, length))] * len(members)
        for combo in itertools.product(*per):
            yield dict(zip(members, combo))
    else:
        for word in words_of_length(rp.alphabet, length):
            yield _spread(rp, gi, word)


def _random_group_assignment(rp: RelationalPattern, gi: int, length: int, rng: random.Random) -> dict:
    members = rp.groups.groups[gi]
    draw = lambda: "".join(rng.choice(rp.alphabet) for _ in range(length))  # noqa: E731
    if rp.kind == "len":
        return {v: draw() for v in members}
    return _spread(rp, gi, draw())


def _spread(rp: RelationalPattern, gi: int, word: str) -> dict:
    """Give a group's representative ``word`` and derive the other members."""
    table = rp.groups
    if rp.kind == "rev":
        return {v: word[::-1] if table.is_reversed(v) else word for v in table.groups[gi]}
    return {v: word for v in table.groups[gi]}


def enumerate_single_group_lz(
    rp: RelationalPattern,
    group: GroupRef,
    bound: LengthBound,
    content: Content = "all",
    cap: int = 10**6,
    include_zero: bool = True,
) -> Iterator[tuple[dict, str]]:
    """Substitutions that single out one group.

    Erasing mode: the group's members share a length z' <= z (z' = 0 only
    when ``include_zero``), every other variable is erased.
    Non-erasing mode: the group's members get length ``z`` and every other
    variable gets length 1.
    """
    gi = resolve_group(rp, group)
    others = [g for g in range(len(rp.groups)) if g != gi]
    if bound.erasing:
        lengths = list(range(0 if include_zero else 1, bound.z + 1))
        other_len = 0
    else:
        lengths = [bound.z]
        other_len = 1

    def total():
        rest = 1
        for g in others:
            rest *= _group_choices(rp, g, other_len)
        return sum(_group_choices(rp, gi, n) for n in lengths) * rest

    if isinstance(content, Sampled):
        rng = random.Random(content.seed)
        for _ in range(content.k):
            n = rng.choice(lengths)
            s = _random_group_assignment(rp, gi, n, rng)
            for g in others:
                s.update(_random_group_assignment(rp, g, other_len, rng))
            yield s, apply(rp, s)
        return
    if content != "all":
        raise ValueError(f"unknown content mode {content!r}")
    count = total()
    if count > cap:
        raise GroupTooLarge(f"{count} substitutions exceed the cap of {cap}")
    for n in lengths:
        other_parts = [list(_group_assignments(rp, g, other_len)) for g in others]
        for mine in _group_assignments(rp, gi, n):
            for rest in itertools.product(*other_parts):
                s = dict(mine)
                for part in rest:
                    s.update(part)
                yield s, apply(rp, s)


def random_lz_substitution(rp: RelationalPattern, z: int, rng: random.Random, erasing: bool = True) -> dict:
    """A random substitution with every group at a common length in [0 or 1, z]."""
    lo = 0 if erasing else 1
    s = {}
    for gi in range(len(rp.groups)):
        s.update(_random_group_assignment(rp, gi, rng.randint(lo, z), rng))
    return s


def _length_assignments(sizes: Sequence[int], budget: int, lo: int) -> Iterator[tuple[int, ...]]:
    if not sizes:
        yield ()
        return
    head, rest = sizes[0], sizes[1:]
    floor = lo * sum(rest)
    n = lo
    while head * n + floor <= budget:
        for tail in _length_assignments(rest, budget - head * n, lo):
            yield (n,) + tail
        n += 1


def generate_upto(rp: RelationalPattern, max_len: int, erasing: bool = True) -> set[str]:
    """Every word of length <= ``max_len`` produced by some valid substitution.

    Substitution-driven and independent of the membership deciders; meant
    as a cross-check on small instances.
    """
    table = rp.groups
    sizes = [len(g) for g in table.groups]
    budget = max_len - rp.terminal_length
    if budget < 0:
        return set()
    templates = set()
    for lengths in _length_assignments(sizes, budget, 0 if erasing else 1):
        parts = []
        for item in rp.items:
            if isinstance(item, Var):
                gi = table.group_of(item.name)
                n = lengths[gi]
                if rp.kind == "len":
                    parts.extend([None] * n)
                else:
                    parts.append((gi, table.is_reversed(item.name), n))
            else:
                parts.append(item)
        templates.add(tuple(parts))

    out = set()
    for tpl in templates:
        if rp.kind == "len":
            holes = [k for k, x in enumerate(tpl) if x is None]
            for fill in itertools.product(rp.alphabet, repeat=len(holes)):
                chars = list(tpl)
                for k, c in zip(holes, fill):
                    chars[k] = c
                out.add("".join(chars))
        else:
            used = sorted({x[0]: x[2] for x in tpl if isinstance(x, tuple)}.items())
            pools = [list(words_of_length(rp.alphabet, n)) for _, n in used]
            for combo in itertools.product(*pools):
                bind = dict(zip((g for g, _ in used), combo))
                out.add("".join(
                    x if isinstance(x, str) else (bind[x[0]][::-1] if x[1] else bind[x[0]])
                    for x in tpl
                ))
    return out
