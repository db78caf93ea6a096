"""Equal-length normal form.

Two steps: order the variables of every block by group, then drop every
group whose per-block counts are a positive integer combination of the
remaining groups' counts.  Both steps preserve the erasing language.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import RelationalPattern, Var, decomposition_vector
from .errors import WrongKind
from .member import NONNEGATIVE, STRICTLY_POSITIVE, nonneg_combination

READINGS = ("subset", "all")


@dataclass(frozen=True)
class Removal:
    """A dropped group and the coefficients expressing it by the survivors."""

    group: tuple[str, ...]
    vector: tuple[int, ...]
    coefficients: dict  # representative name -> coefficient (zeros omitted)


def _require_len(rp: RelationalPattern) -> None:
    if rp.kind != "len":
        raise WrongKind("normal forms are defined for the equal-length relation only")


def sort_blocks(rp: RelationalPattern) -> RelationalPattern:
    """Stable-sort each variable block by canonical group index."""
    _require_len(rp)
    table = rp.groups
    items = []
    run = []

    def flush():
        run.sort(key=lambda v: table.group_of(v.name))  # stable: keeps pattern order inside a group
        items.extend(run)
        run.clear()

    for item in rp.items:
        if isinstance(item, Var):
            run.append(item)
        else:
            flush()
            items.append(item)
    flush()
    return rp.replace(items=items)


def _drop_group(rp: RelationalPattern, members) -> RelationalPattern:
    gone = set(members)
    items = [i for i in rp.items if not (isinstance(i, Var) and i.name in gone)]
    pairs = {(x, y) for x, y in rp.pairs if x not in gone and y not in gone}
    return rp.replace(items=items, pairs=pairs)


def find_dependent_group(rp: RelationalPattern, reading: str = "subset"):
    """Latest group (in canonical order) that the others can express, or None.

    ``subset`` allows any nonempty subset of the other groups with
    coefficients >= 1, i.e. nonnegative coefficients over all of them.
    ``all`` demands a coefficient >= 1 on every other group.
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    mode = NONNEGATIVE if reading == "subset" else STRICTLY_POSITIVE
    groups = rp.groups.groups
    vectors = [decomposition_vector(rp, g) for g in range(len(groups))]
    for gi in reversed(range(len(groups))):
        others = [g for g in range(len(groups)) if g != gi]
        if not others:
            continue
        coeffs = nonneg_combination(vectors[gi], [vectors[g] for g in others], mode)
        if coeffs is not None:
            used = {groups[g][0]: c for g, c in zip(others, coeffs) if c}
            return Removal(groups[gi], vectors[gi], used)
    return None


def normal_form_steps(rp: RelationalPattern, reading: str = "subset") -> tuple[RelationalPattern, list[Removal]]:
    current = sort_blocks(rp)
    removed = []
    while True:
        hit = find_dependent_group(current, reading)
        if hit is None:
            return current, removed
        removed.append(hit)
        current = _drop_group(current, hit.group)


def normal_form(rp: RelationalPattern, reading: str = "subset") -> RelationalPattern:
    return normal_form_steps(rp, reading)[0]
