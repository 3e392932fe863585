"""Pure-Python subgroup-closure kernels.

Reference implementation of the hot loops; `metazeta._backend` swaps in
the compiled twin when it is importable.  Both operate on a dense
multiplication table (numpy 2D integer array, table[x, y] = x * y) in
which element 0 is the identity.

Membership sets are kept as Python int bitmasks, so subgroup identity
checks and dedup keys are single big-int comparisons.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

import numpy as np

from .errors import ResourceLimitError

NAME = "python"


def _grow(table: np.ndarray, elems: list[int], mask: int, stack: list[int]) -> int:
    """Close elems/mask under the table product, consuming stack.

    Precondition: the starting elems are already pairwise closed.  Every
    popped element is multiplied (both sides) against all current
    members, so any element added later still meets every earlier one.
    The pending mask keeps stack entries distinct, bounding the stack by
    the group order.
    """
    pending = 0
    for e in stack:
        pending |= 1 << e
    while stack:
        x = stack.pop()
        pending &= ~(1 << x)
        if (mask >> x) & 1:
            continue
        mask |= 1 << x
        elems.append(x)
        arr = np.fromiter(elems, dtype=np.intp, count=len(elems))
        cand = np.unique(np.concatenate((table[x, arr], table[arr, x])))
        for e in cand.tolist():
            if not (mask >> e) & 1 and not (pending >> e) & 1:
                pending |= 1 << e
                stack.append(e)
    return mask


def close_subgroup(table: np.ndarray, gens: Iterable[int]) -> tuple[int, ...]:
    """Elements of the subgroup generated by gens, sorted ascending."""
    n = table.shape[0]
    stack = []
    for g in gens:
        g = int(g)
        if not 0 <= g < n:
            raise ValueError(f"generator {g} out of range [0, {n})")
        stack.append(g)
    elems = [0]
    _grow(table, elems, 1, stack)
    return tuple(sorted(elems))


def enumerate_subgroups(table: np.ndarray, max_subgroups: int) -> list[tuple[int, ...]]:
    """All subgroups, as sorted element tuples, ordered by (size, elements).

    Joins of cyclic subgroups reach every subgroup, so the closure walk
    seeds with the cyclic ones and repeatedly adjoins a cyclic generator
    not yet inside.  Raises ResourceLimitError as soon as the count
    would pass max_subgroups.
    """
    if max_subgroups < 1:
        raise ValueError("max_subgroups must be >= 1")
    n = table.shape[0]
    seen: dict[int, list[int]] = {1: [0]}

    def record(mask: int, elems: list[int]) -> bool:
        if mask in seen:
            return False
        if len(seen) >= max_subgroups:
            raise ResourceLimitError(
                f"more than {max_subgroups} subgroups; raise the cap to enumerate")
        seen[mask] = elems
        return True

    cyclic: dict[int, int] = {}  # mask -> a generator of that cyclic subgroup
    for x in range(1, n):
        elems = [0]
        mask = _grow(table, elems, 1, [x])
        if mask not in cyclic:
            cyclic[mask] = x
            record(mask, elems)
    gens = list(cyclic.values())

    queue = deque(m for m in seen if m != 1)
    while queue:
        mask = queue.popleft()
        elems = seen[mask]
        for g in gens:
            if (mask >> g) & 1:
                continue
            new_elems = list(elems)
            new_mask = _grow(table, new_elems, mask, [g])
            if record(new_mask, new_elems):
                queue.append(new_mask)
    out = [tuple(sorted(e)) for e in seen.values()]
    out.sort(key=lambda t: (len(t), t))
    return out
