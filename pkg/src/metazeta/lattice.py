"""Subgroup lattices: construction, exact isomorphism testing, and the
induced parameter partition.

A lattice here is the graded cover digraph of a p-group's complete
subgroup set: node level = log_p of the subgroup order, covers are the
index-p inclusions.  Isomorphism testing is exact: joint color
refinement prunes, then a level-by-level backtracking search must
exhibit a bijection matching every down-cover set; colors alone are
never trusted as sufficient.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import InternalInconsistencyError, InvalidParameterError
from .groups import GroupParams, KPartition, iso_classes
from .oracle import (OracleLimits, SubgroupSet, build_group,
                     enumerate_subgroups)
from .padic import prime_power


@dataclass(frozen=True)
class SubgroupLattice:
    """Graded cover digraph of a complete subgroup set.

    Nodes are indexed in the SubgroupSet order (by size, then element
    list), which makes every derived artifact deterministic.
    """

    label: str
    p: int
    levels: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    subgroups: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.levels)

    def level_histogram(self) -> tuple[int, ...]:
        top = max(self.levels)
        out = [0] * (top + 1)
        for t in self.levels:
            out[t] += 1
        return tuple(out)

    def down_sets(self) -> list[frozenset[int]]:
        """down[v] = the nodes covered by v."""
        down: list[set[int]] = [set() for _ in self.levels]
        for lo, hi in self.covers:
            down[hi].add(lo)
        return [frozenset(s) for s in down]

    def up_counts(self) -> list[int]:
        up = [0] * self.node_count
        for lo, _hi in self.covers:
            up[lo] += 1
        return up

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "p": self.p,
            "nodes": [
                {"id": v, "level": t, "order": self.p**t,
                 "elements": list(self.subgroups[v])}
                for v, t in enumerate(self.levels)
            ],
            "covers": [list(c) for c in self.covers],
        }

    def to_dot(self) -> str:
        lines = ["digraph subgroup_lattice {", "  rankdir=BT;",
                 "  node [shape=box];"]
        by_level: dict[int, list[int]] = {}
        for v, t in enumerate(self.levels):
            by_level.setdefault(t, []).append(v)
            lines.append(f'  n{v} [label="#{v} |H|={self.p**t}"];')
        for t in sorted(by_level):
            ranked = "; ".join(f"n{v}" for v in by_level[t])
            lines.append(f"  {{ rank=same; {ranked}; }}")
        for lo, hi in self.covers:
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines)


def build_lattice(subgroups: SubgroupSet) -> SubgroupLattice:
    """Cover digraph of the complete subgroup set of a p-group.

    Inclusion is bitmask containment; covers are exactly the inclusions
    between adjacent levels (index p <=> maximal, in a p-group).
    """
    pe = prime_power(subgroups.group.order)
    if pe is None:
        raise InvalidParameterError(
            f"{subgroups.group.label} is not a p-group; its lattice is not graded")
    p, top = pe
    levels = []
    masks = []
    for s in subgroups:
        t = 0
        size = len(s)
        while size > 1:
            size //= p
            t += 1
        levels.append(t)
        mask = 0
        for e in s:
            mask |= 1 << e
        masks.append(mask)
    hist = Counter(levels)
    if hist[0] != 1 or hist[top] != 1:
        raise InternalInconsistencyError(
            f"{subgroups.group.label}: bottom/top of the lattice not unique")
    by_level: dict[int, list[int]] = {}
    for v, t in enumerate(levels):
        by_level.setdefault(t, []).append(v)
    covers = []
    for t in range(top):
        for lo in by_level.get(t, ()):
            for hi in by_level.get(t + 1, ()):
                if masks[lo] & masks[hi] == masks[lo]:
                    covers.append((lo, hi))
    return SubgroupLattice(label=subgroups.group.label, p=p,
                           levels=tuple(levels), covers=tuple(covers),
                           subgroups=tuple(subgroups))


def _refined_colors(l1: SubgroupLattice,
                    l2: SubgroupLattice) -> tuple[list[int], list[int]]:
    """Joint iterated refinement: stable colors comparable across both."""
    downs = [l.down_sets() for l in (l1, l2)]
    ups: list[list[set[int]]] = []
    for l in (l1, l2):
        up: list[set[int]] = [set() for _ in l.levels]
        for lo, hi in l.covers:
            up[lo].add(hi)
        ups.append(up)
    palette: dict = {}

    def paint(sig):
        if sig not in palette:
            palette[sig] = len(palette)
        return palette[sig]

    colors = [
        [paint((l.levels[v], len(ups[s][v]), len(downs[s][v])))
         for v in range(l.node_count)]
        for s, l in enumerate((l1, l2))
    ]
    while True:
        palette.clear()
        new = []
        for s, l in enumerate((l1, l2)):
            cs = colors[s]
            new.append([
                paint((cs[v],
                       tuple(sorted(cs[u] for u in ups[s][v])),
                       tuple(sorted(cs[d] for d in downs[s][v]))))
                for v in range(l.node_count)
            ])
        if new == colors:
            return colors[0], colors[1]
        stable = all(
            len(set(zip(colors[s], new[s]))) == len(set(colors[s]))
            for s in (0, 1))
        colors = new
        if stable:
            return colors[0], colors[1]


def find_isomorphism(l1: SubgroupLattice,
                     l2: SubgroupLattice) -> list[int] | None:
    """A level-preserving cover-digraph bijection, or None.

    Nodes of l1 are assigned in level order, so each node's down-covers
    are mapped before it; a candidate image must carry exactly the
    image of the down-cover set.  That makes an accepted mapping a
    cover-digraph isomorphism, which for graded lattices is the same as
    a lattice isomorphism.
    """
    if l1.node_count != l2.node_count:
        return None
    if l1.level_histogram() != l2.level_histogram():
        return None
    if len(l1.covers) != len(l2.covers):
        return None
    c1, c2 = _refined_colors(l1, l2)
    if Counter(c1) != Counter(c2):
        return None
    down1 = l1.down_sets()
    down2 = l2.down_sets()
    candidates: dict[int, list[int]] = {}
    for b, color in enumerate(c2):
        candidates.setdefault(color, []).append(b)
    order = sorted(range(l1.node_count), key=lambda v: (l1.levels[v], c1[v], v))
    mapping = [-1] * l1.node_count
    used = [False] * l2.node_count

    def dfs(idx: int) -> bool:
        if idx == len(order):
            return True
        a = order[idx]
        need = frozenset(mapping[d] for d in down1[a])
        for b in candidates[c1[a]]:
            if used[b] or down2[b] != need:
                continue
            mapping[a] = b
            used[b] = True
            if dfs(idx + 1):
                return True
            mapping[a] = -1
            used[b] = False
        return False

    if not dfs(0):
        return None
    _verify_witness(l1, l2, mapping)
    return mapping


def _verify_witness(l1: SubgroupLattice, l2: SubgroupLattice,
                    mapping: list[int]) -> None:
    """Independent re-check of a claimed isomorphism: bijection,
    level-preserving, covers map onto covers exactly.
    """
    if sorted(mapping) != list(range(l2.node_count)):
        raise InternalInconsistencyError("witness is not a bijection")
    for a, b in enumerate(mapping):
        if l1.levels[a] != l2.levels[b]:
            raise InternalInconsistencyError("witness does not preserve levels")
    image = {(mapping[lo], mapping[hi]) for lo, hi in l1.covers}
    if image != set(l2.covers):
        raise InternalInconsistencyError("witness does not preserve covers")


def is_lattice_isomorphic(l1: SubgroupLattice, l2: SubgroupLattice) -> bool:
    """True iff an order-isomorphism between the two lattices exists."""
    return find_isomorphism(l1, l2) is not None


def lattice_for_params(params: GroupParams,
                       limits: OracleLimits | None = None) -> SubgroupLattice:
    """Convenience: enumerate the split group and build its lattice."""
    return build_lattice(enumerate_subgroups(build_group(params, limits), limits))


def lattice_classes(p: int, m: int, n: int,
                    limits: OracleLimits | None = None) -> KPartition:
    """Partition of the valid k set by lattice isomorphism.

    One lattice per isomorphism-class representative (isomorphic groups
    have isomorphic lattices), pairwise-tested, then expanded back to
    the full residue blocks.
    """
    iso = iso_classes(p, m, n)
    class_leaders: list[int] = []  # representative k per lattice class
    lattices: dict[int, SubgroupLattice] = {}
    merged: dict[int, list[int]] = {}
    for rep in iso.representatives():
        lat = lattice_for_params(GroupParams(p, m, n, rep), limits)
        lattices[rep] = lat
        for leader in class_leaders:
            if is_lattice_isomorphic(lattices[leader], lat):
                merged[leader].extend(iso.block_of(rep))
                break
        else:
            class_leaders.append(rep)
            merged[rep] = list(iso.block_of(rep))
    blocks = tuple(tuple(sorted(b)) for b in merged.values())
    return KPartition(p, m, n, "lattice", blocks)
