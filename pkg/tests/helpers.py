"""Shared fixtures and seeded random pattern generators for the test suite."""

from __future__ import annotations

import random
from pathlib import Path

from relpat.core import RelationalPattern, Var
from relpat.errors import NotExpressible
from relpat.reversal import SVar, to_relational
from relpat.text import parse_pattern_file

DATA = Path(__file__).parent / "data"

EXAMPLE_T = ["aaaabb", "baabaaabba", "bbbbbbbbbb", "aabbaabbbabbab"]
EXAMPLE_DECOMPS = [(1, 1, 1), (2, 1, 2), (1, 2, 2), (3, 1, 3)]
EXAMPLE_SIGNED = (
    "x1 x1 x4 x3 x6 x7 x7 x8 x8^rev x7^rev x7^rev x6^rev x3^rev x4^rev x1^rev x1^rev "
    "x2 x3 x6 x6 x8 x8^rev x6^rev x6^rev x3^rev x2^rev "
    "x3 x4 x6 x6 x8 x7 x8 x8^rev x7^rev x8^rev x6^rev x6^rev x4^rev x3^rev"
)


def load(name: str) -> RelationalPattern:
    return parse_pattern_file((DATA / name).read_text())


def _pairs_for(groups: list[list[str]]) -> frozenset:
    return frozenset((g[0], v) for g in groups for v in g[1:])


def random_pattern(rng: random.Random, kind: str, max_blocks: int = 3, max_groups: int = 3,
                   max_vars: int = 10, max_term: int = 3, alphabet=("a", "b")) -> RelationalPattern:
    """Random pattern with up to ``max_blocks`` terminal blocks and ``max_groups`` groups."""
    n_groups = rng.randint(1, max_groups)
    n_vars = rng.randint(n_groups, max_vars)
    owner = list(range(n_groups)) + [rng.randrange(n_groups) for _ in range(n_vars - n_groups)]
    rng.shuffle(owner)
    n_blocks = rng.randint(0, max_blocks)
    slots = [rng.randint(0, n_blocks) for _ in owner]
    items: list = []
    groups: list[list[str]] = [[] for _ in range(n_groups)]
    for j in range(n_blocks + 1):
        for k, (g, s) in enumerate(zip(owner, slots)):
            if s == j:
                name = f"v{k}"
                groups[g].append(name)
                items.append(Var(name))
        if j < n_blocks:
            items.extend(rng.choice(alphabet) for _ in range(rng.randint(1, max_term)))
    # a random spanning tree per group; trees keep rev relations bipartite
    pairs = set()
    for g in groups:
        for k in range(1, len(g)):
            pairs.add((g[rng.randrange(k)], g[k]))
    return RelationalPattern(tuple(alphabet), tuple(items), kind, frozenset(pairs))


P23_BLOCKS = ("aaa", "bbb", "aba", "bab", "abba", "baab", "aabb")


def random_p23(rng: random.Random, max_groups: int = 2, max_blocks: int = 2) -> RelationalPattern:
    """Random binary pattern with terminal blocks of length >= 3 and >= 2 members of every group per interior block."""
    n_blocks = rng.randint(1, max_blocks)
    n_groups = rng.randint(1, max_groups)
    counts = []
    for j in range(n_blocks + 1):
        interior = 0 < j < n_blocks
        counts.append([rng.randint(2, 2) if interior else rng.choice((0, 0, 1, 2)) for _ in range(n_groups)])
    for g in range(n_groups):
        if n_blocks == 1 and all(counts[j][g] == 0 for j in range(n_blocks + 1)):
            counts[rng.choice((0, n_blocks))][g] = 1
    items: list = []
    groups: list[list[str]] = [[] for _ in range(n_groups)]
    for j in range(n_blocks + 1):
        block = []
        for g in range(n_groups):
            for _ in range(counts[j][g]):
                name = f"g{g}_{len(groups[g])}"
                groups[g].append(name)
                block.append(name)
        rng.shuffle(block)
        items.extend(Var(v) for v in block)
        if j < n_blocks:
            items.extend(rng.choice(P23_BLOCKS))
    return RelationalPattern(("a", "b"), tuple(items), "len", _pairs_for(groups))


def split_groups(rp: RelationalPattern, rng: random.Random) -> RelationalPattern:
    """Same pattern, each group cut into consecutive pieces; the language can only grow."""
    pairs = set()
    for g in rp.groups.groups:
        pieces = [[g[0]]]
        for v in g[1:]:
            if rng.random() < 0.5:
                pieces.append([v])
            else:
                pieces[-1].append(v)
        pairs |= _pairs_for(pieces)
    return rp.replace(pairs=pairs)


def merge_groups(rp: RelationalPattern) -> RelationalPattern:
    """Same pattern with every variable in one group; the language can only shrink."""
    names = [v for g in rp.groups.groups for v in g]
    return rp.replace(pairs=_pairs_for([names]))


def random_signed(rng: random.Random, max_occ: int = 4, bases=("x", "y", "z")) -> tuple:
    """Random terminal-free signed pattern that is expressible as a rev relational pattern."""
    while True:
        n = rng.randint(1, max_occ)
        items = tuple(SVar(rng.choice(bases[:max(1, n - 1)]), rng.random() < 0.5) for _ in range(n))
        try:
            to_relational(items)
        except NotExpressible:
            continue
        return items
