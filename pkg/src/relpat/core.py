"""Relational patterns and their syntactic structure.

A pattern is a nonempty sequence of terminal symbols (one-character
strings) and variables (:class:`Var`).  Every variable occurs at most
once; repetition is expressed through the relation.  Words are plain
Python strings over the alphabet.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    DuplicateVariable,
    NonBinaryAlphabet,
    NotReversalFriendly,
    ParseError,
    UnknownGroup,
    UnknownSymbolInPairs,
    WrongKind,
)

KINDS = ("eq", "rev", "len")


@dataclass(frozen=True, order=True)
class Var:
    name: str

    def __str__(self):
        return self.name


Item = Union[str, Var]
GroupRef = Union[int, str]


def is_var(item) -> bool:
    return isinstance(item, Var)


@dataclass(frozen=True)
class GroupTable:
    """Partition of the variables into groups, in canonical order.

    Groups are ordered by the leftmost position of any member; members are
    listed in pattern order, so ``groups[i][0]`` is the representative.
    ``reversed_vars`` holds the members that a valid substitution must map
    to the reverse of the representative's word (empty unless kind=rev).
    """

    groups: tuple[tuple[str, ...], ...]
    reversed_vars: frozenset[str] = frozenset()
    index: Mapping[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __len__(self):
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)

    def group_of(self, var: str) -> int:
        return self.index[var]

    def representative(self, gi: int) -> str:
        return self.groups[gi][0]

    def is_reversed(self, var: str) -> bool:
        return var in self.reversed_vars

    def orientation(self, var: str) -> str:
        return "rev" if var in self.reversed_vars else "="


@dataclass(frozen=True)
class BlockDecomposition:
    """``x_1 w_1 x_2 ... x_n w_n x_{n+1}``; the end variable blocks may be empty."""

    variable_blocks: tuple[tuple[str, ...], ...]
    terminal_blocks: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.terminal_blocks)

    def block_of(self) -> dict[str, int]:
        return {v: j for j, blk in enumerate(self.variable_blocks) for v in blk}

    def items(self) -> tuple[Item, ...]:
        out: list[Item] = []
        for j, blk in enumerate(self.variable_blocks):
            out.extend(Var(v) for v in blk)
            if j < self.n:
                out.extend(self.terminal_blocks[j])
        return tuple(out)


@dataclass(frozen=True)
class RelationalPattern:
    alphabet: tuple[str, ...]
    items: tuple[Item, ...]
    kind: str = "len"
    pairs: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "items", tuple(self.items))
        object.__setattr__(self, "pairs", frozenset(tuple(p) for p in self.pairs))
        if not alphabet:
            raise ParseError("alphabet must not be empty")
        if len(set(alphabet)) != len(alphabet) or any(len(s) != 1 for s in alphabet):
            raise ParseError(f"alphabet must consist of distinct single characters: {alphabet}")
        if self.kind not in KINDS:
            raise ParseError(f"unknown relation kind {self.kind!r}")
        if not self.items:
            raise ParseError("pattern must be nonempty")
        seen = set()
        for item in self.items:
            if isinstance(item, Var):
                if item.name in seen:
                    raise DuplicateVariable(f"variable {item.name} occurs more than once")
                seen.add(item.name)
            elif item not in alphabet:
                raise ParseError(f"terminal {item!r} not in alphabet")
        for x, y in self.pairs:
            for v in (x, y):
                if v not in seen:
                    raise UnknownSymbolInPairs(f"relation mentions {v}, which is not a pattern variable")

    @cached_property
    def variables(self) -> tuple[str, ...]:
        return tuple(i.name for i in self.items if isinstance(i, Var))

    @cached_property
    def positions(self) -> dict[str, int]:
        return {i.name: k for k, i in enumerate(self.items) if isinstance(i, Var)}

    @cached_property
    def groups(self) -> GroupTable:
        return compute_groups(self)

    @cached_property
    def blocks(self) -> BlockDecomposition:
        return block_decomposition(self.items)

    @property
    def terminal_length(self) -> int:
        return sum(1 for i in self.items if not isinstance(i, Var))

    def skeleton(self) -> str:
        return "".join(self.blocks.terminal_blocks)

    def replace(self, items=None, pairs=None, kind=None) -> "RelationalPattern":
        return RelationalPattern(
            self.alphabet,
            self.items if items is None else items,
            self.kind if kind is None else kind,
            self.pairs if pairs is None else pairs,
        )

    def __str__(self):
        return pattern_str(self.items)


def pattern_str(items: Iterable[Item]) -> str:
    """Space-separated tokens; maximal terminal runs are glued together."""
    tokens: list[str] = []
    run = ""
    for item in items:
        if isinstance(item, Var):
            if run:
                tokens.append(run)
                run = ""
            tokens.append(item.name)
        else:
            run += item
    if run:
        tokens.append(run)
    return " ".join(tokens)


def compute_groups(rp: RelationalPattern) -> GroupTable:
    variables = rp.variables
    adj: dict[str, list[str]] = {v: [] for v in variables}
    for x, y in sorted(rp.pairs):
        adj[x].append(y)
        adj[y].append(x)

    groups = []
    index: dict[str, int] = {}
    color: dict[str, int] = {}
    # pattern order visits each component from its leftmost member first
    for v in variables:
        if v in index:
            continue
        gi = len(groups)
        members = []
        color[v] = 0
        index[v] = gi
        queue = deque([v])
        while queue:
            u = queue.popleft()
            members.append(u)
            for w in adj[u]:
                if w not in index:
                    index[w] = gi
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif rp.kind == "rev" and color[w] == color[u]:
                    raise NotReversalFriendly(
                        f"relation has an odd cycle through {u} and {w}; not reversal-friendly"
                    )
        members.sort(key=rp.positions.__getitem__)
        groups.append(tuple(members))

    reversed_vars = frozenset()
    if rp.kind == "rev":
        reversed_vars = frozenset(v for v in variables if color[v] == 1)
    return GroupTable(tuple(groups), reversed_vars, index)


def block_decomposition(items: Sequence[Item]) -> BlockDecomposition:
    var_blocks: list[tuple[str, ...]] = []
    terminals: list[str] = []
    current: list[str] = []
    run = ""
    for item in items:
        if isinstance(item, Var):
            if run:
                terminals.append(run)
                run = ""
                var_blocks.append(tuple(current))
                current = []
            current.append(item.name)
        else:
            run += item
    if run:
        terminals.append(run)
        var_blocks.append(tuple(current))
        current = []
    var_blocks.append(tuple(current))
    return BlockDecomposition(tuple(var_blocks), tuple(terminals))


def resolve_group(rp: RelationalPattern, group: GroupRef) -> int:
    """Accept a canonical group index or the name of any member variable."""
    table = rp.groups
    if isinstance(group, int) and not isinstance(group, bool):
        if 0 <= group < len(table):
            return group
        raise UnknownGroup(f"no group with index {group}")
    if isinstance(group, Var):
        group = group.name
    if group in table.index:
        return table.index[group]
    raise UnknownGroup(f"no group containing {group!r}")


def block_counts(rp: RelationalPattern, group: GroupRef) -> tuple[int, ...]:
    """Per-block member counts of a group over all n+1 variable blocks."""
    gi = resolve_group(rp, group)
    members = set(rp.groups.groups[gi])
    return tuple(sum(1 for v in blk if v in members) for blk in rp.blocks.variable_blocks)


def decomposition_vector(rp: RelationalPattern, group: GroupRef) -> tuple[int, ...]:
    """Member counts of a group over the *nonempty* variable blocks.

    Empty end blocks carry a zero for every group, so dropping them does
    not change which groups are combinations of others.
    """
    counts = block_counts(rp, group)
    blocks = rp.blocks.variable_blocks
    return tuple(c for c, blk in zip(counts, blocks) if blk)


def is_p23(rp: RelationalPattern) -> tuple[bool, list[str]]:
    """Membership in the class P_{2,3}, with a list of every violation."""
    if rp.kind != "len":
        raise WrongKind("P_{2,3} is defined for the equal-length relation")
    blocks = rp.blocks
    report = []
    for j, w in enumerate(blocks.terminal_blocks):
        if len(w) < 3:
            report.append(f"terminal block omega_{j + 1}={w!r} has length {len(w)} < 3")
    groups = rp.groups.groups
    for j in range(1, blocks.n):
        blk = set(blocks.variable_blocks[j])
        for gi, members in enumerate(groups):
            k = sum(1 for v in members if v in blk)
            if k < 2:
                report.append(
                    f"variable block x_{j + 1} has {k} variable(s) of group {gi} [{members[0]}], needs >= 2"
                )
    return not report, report


def _binary(alphabet: Sequence[str]) -> None:
    if len(alphabet) != 2:
        raise NonBinaryAlphabet(f"needs a binary alphabet, got {len(alphabet)} symbols")


def block_shape(block: str, min_exponent: int = 2) -> Optional[str]:
    """Return ``"s^n t"`` or ``"s t^n"`` if the block has that forbidden shape."""
    if len(block) < 1:
        return None
    n = len(block) - 1
    if n < min_exponent:
        return None
    head, last = block[:-1], block[-1]
    if all(c == block[0] for c in head) and (n == 0 or block[0] != last):
        return "s^n t"
    first, tail = block[0], block[1:]
    if tail and all(c == tail[0] for c in tail) and tail[0] != first:
        return "s t^n"
    return None


def forbidden_block_shapes(rp: RelationalPattern, include_short: bool = False) -> list[tuple[int, str]]:
    """Terminal blocks of the form ``s^n t`` or ``s t^n`` with s != t.

    By default n >= 2; ``include_short`` widens this to n >= 0, which also
    flags every block of length one or two except ``aa``/``bb``.
    Returns ``(index, block)`` with 0-based block indices.
    """
    _binary(rp.alphabet)
    lo = 0 if include_short else 2
    return [
        (j, w)
        for j, w in enumerate(rp.blocks.terminal_blocks)
        if block_shape(w, lo) is not None
    ]


def _as_blocks(p) -> BlockDecomposition:
    if isinstance(p, RelationalPattern):
        return p.blocks
    if isinstance(p, BlockDecomposition):
        return p
    return block_decomposition(tuple(p))


def are_congruous(p, q) -> bool:
    a, b = _as_blocks(p), _as_blocks(q)
    if a.terminal_blocks != b.terminal_blocks:
        return False
    for j in (0, a.n):
        if bool(a.variable_blocks[j]) != bool(b.variable_blocks[j]):
            return False
    return True


@dataclass(frozen=True)
class TelltaleConjugatePair:
    left: tuple[Item, ...]
    right: tuple[Item, ...]
    n: tuple[int, ...]
    m: tuple[int, ...]
    letters: tuple[str, str]
    left_span: tuple[int, int]
    right_span: tuple[int, int]


def conjugate_conditions(n: Sequence[int], m: Sequence[int]) -> bool:
    t = len(n)
    for i in range(1, t):
        if not (n[i] == 1 or (m[i - 1] == 1 and m[i] == 1)):
            return False
    for i in range(t - 1):
        if not (m[i] == 1 or (n[i] == 1 and n[i + 1] == 1)):
            return False
    return True


def _split_two_runs(w: str, s: str, t: str) -> Optional[tuple[int, int]]:
    """Exponents (k, l) with w = s^k t^l, both >= 1."""
    k = len(w) - len(w.lstrip(s))
    rest = w[k:]
    if k == 0 or not rest or rest != t * len(rest):
        return None
    return k, len(rest)


def _block_spans(items: Sequence[Item]) -> list[tuple[int, int]]:
    spans = []
    k = 0
    while k < len(items):
        if isinstance(items[k], Var):
            k += 1
            continue
        start = k
        while k < len(items) and not isinstance(items[k], Var):
            k += 1
        spans.append((start, k))
    return spans


def find_telltale_conjugates(p, q, alphabet: Optional[Sequence[str]] = None) -> Optional[TelltaleConjugatePair]:
    """Search sub-patterns pi of p and pi' of q that are telltale conjugates.

    Both sub-patterns must start and end with terminal symbols that begin
    and end maximal terminal blocks of their host pattern.  The search
    covers every start block, every length t and both letter roles.
    """
    if isinstance(p, RelationalPattern):
        alphabet = p.alphabet if alphabet is None else alphabet
        p = p.items
    if isinstance(q, RelationalPattern):
        q = q.items
    if alphabet is None:
        alphabet = sorted({i for i in (*p, *q) if not isinstance(i, Var)})
    _binary(alphabet)
    p, q = tuple(p), tuple(q)
    p_spans, q_spans = _block_spans(p), _block_spans(q)
    p_blocks = ["".join(p[a:b]) for a, b in p_spans]
    q_blocks = ["".join(q[a:b]) for a, b in q_spans]

    for s, t in (tuple(alphabet), tuple(reversed(alphabet))):
        for j in range(len(p_blocks)):
            ns, ms = [], []
            for jj in range(j, len(p_blocks)):
                split = _split_two_runs(p_blocks[jj], s, t)
                if split is None:
                    break
                ns.append(split[0])
                ms.append(split[1])
                tcount = len(ns)
                if not conjugate_conditions(ns, ms):
                    continue
                hit = _match_primed(q_blocks, ns, ms, s, t)
                if hit is not None:
                    k = hit
                    left_span = (p_spans[j][0], p_spans[jj][1])
                    right_span = (q_spans[k][0], q_spans[k + tcount][1])
                    return TelltaleConjugatePair(
                        left=p[left_span[0]:left_span[1]],
                        right=q[right_span[0]:right_span[1]],
                        n=tuple(ns),
                        m=tuple(ms),
                        letters=(s, t),
                        left_span=left_span,
                        right_span=right_span,
                    )
    return None


def _match_primed(blocks: list[str], ns, ms, s, t) -> Optional[int]:
    tcount = len(ns)
    wanted = [s * ns[0]]
    wanted += [t * ms[i] + s * ns[i + 1] for i in range(tcount - 1)]
    wanted.append(t * ms[-1])
    for k in range(len(blocks) - tcount):
        if blocks[k:k + tcount + 1] == wanted:
            return k
    return None
