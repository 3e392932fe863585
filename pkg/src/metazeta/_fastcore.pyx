# cython: language_level=3str, boundscheck=False, wraparound=False
"""Compiled subgroup-closure kernels: the drop-in twin of
metazeta._purecore, selected by metazeta._backend when built.

Same contract: dense uint16 multiplication table with identity 0,
subgroups as sorted element tuples.  Membership lives in flat byte
arrays; dedup keys are the bit-packed membership vectors.
"""

from collections import deque

import numpy as np

from .errors import ResourceLimitError

NAME = "compiled"


cdef int _grow(const unsigned short[:, ::1] table,
               unsigned char[::1] member, unsigned char[::1] pending,
               int[::1] elems, int n_elems,
               int[::1] stack, int n_stack) noexcept nogil:
    """Close member/elems under the product, consuming the stack.

    Precondition: the starting elems are pairwise closed.  Each popped
    element multiplies against all current members from both sides; the
    pending flags keep every stack entry distinct, bounding the stack
    by the group order.  Returns the new element count.
    """
    cdef int x, i, prod
    while n_stack > 0:
        n_stack -= 1
        x = stack[n_stack]
        pending[x] = 0
        if member[x]:
            continue
        member[x] = 1
        elems[n_elems] = x
        n_elems += 1
        for i in range(n_elems):
            prod = table[x, elems[i]]
            if not member[prod] and not pending[prod]:
                pending[prod] = 1
                stack[n_stack] = prod
                n_stack += 1
            prod = table[elems[i], x]
            if not member[prod] and not pending[prod]:
                pending[prod] = 1
                stack[n_stack] = prod
                n_stack += 1
    return n_elems


cdef class _Workspace:
    cdef object table_arr
    cdef const unsigned short[:, ::1] table
    cdef object member_arr, pending_arr, elems_arr, stack_arr
    cdef unsigned char[::1] member, pending
    cdef int[::1] elems, stack
    cdef int n

    def __init__(self, table_in):
        self.table_arr = np.ascontiguousarray(table_in, dtype=np.uint16)
        if self.table_arr.ndim != 2 or self.table_arr.shape[0] != self.table_arr.shape[1]:
            raise ValueError("table must be square")
        self.table = self.table_arr
        self.n = self.table_arr.shape[0]
        self.member_arr = np.zeros(self.n, dtype=np.uint8)
        self.pending_arr = np.zeros(self.n, dtype=np.uint8)
        self.elems_arr = np.empty(self.n, dtype=np.intc)
        self.stack_arr = np.empty(self.n, dtype=np.intc)
        self.member = self.member_arr
        self.pending = self.pending_arr
        self.elems = self.elems_arr
        self.stack = self.stack_arr

    cdef tuple close_from(self, seed_elems, extra_gens):
        """Subgroup generated by seed_elems (already closed) plus gens."""
        cdef int n_elems = 0, n_stack = 0, g
        self.member_arr[:] = 0
        self.pending_arr[:] = 0
        for e in seed_elems:
            self.member[e] = 1
            self.elems[n_elems] = e
            n_elems += 1
        for g_obj in extra_gens:
            g = g_obj
            if not self.member[g] and not self.pending[g]:
                self.pending[g] = 1
                self.stack[n_stack] = g
                n_stack += 1
        n_elems = _grow(self.table, self.member, self.pending,
                        self.elems, n_elems, self.stack, n_stack)
        return tuple(sorted(self.elems_arr[:n_elems].tolist()))

    cdef bytes key(self):
        # bit-packed membership vector of the last close_from result
        return np.packbits(self.member_arr).tobytes()


def close_subgroup(table, gens):
    """Elements of the subgroup generated by gens, sorted ascending."""
    cdef _Workspace ws = _Workspace(table)
    checked = []
    for g in gens:
        g = int(g)
        if not 0 <= g < ws.n:
            raise ValueError(f"generator {g} out of range [0, {ws.n})")
        checked.append(g)
    return ws.close_from((0,), checked)


def enumerate_subgroups(table, max_subgroups):
    """All subgroups, as sorted element tuples, ordered by (size, elements).

    Same join-closure walk as the pure backend: seed with the cyclic
    subgroups, then repeatedly adjoin cyclic generators not yet inside.
    Raises ResourceLimitError as soon as the count would pass
    max_subgroups.
    """
    if max_subgroups < 1:
        raise ValueError("max_subgroups must be >= 1")
    cdef _Workspace ws = _Workspace(table)
    cdef int x
    seen = {}

    def record(key, elems):
        if key in seen:
            return False
        if len(seen) >= max_subgroups:
            raise ResourceLimitError(
                f"more than {max_subgroups} subgroups; raise the cap to enumerate")
        seen[key] = elems
        return True

    trivial = ws.close_from((0,), ())
    record(ws.key(), trivial)
    gens = []
    cyclic_keys = set()
    queue = deque()
    for x in range(1, ws.n):
        elems = ws.close_from((0,), (x,))
        key = ws.key()
        if key not in cyclic_keys:
            cyclic_keys.add(key)
            gens.append(x)
            if record(key, elems):
                queue.append(key)
    while queue:
        base = seen[queue.popleft()]
        base_set = set(base)
        for g in gens:
            if g in base_set:
                continue
            elems = ws.close_from(base, (g,))
            key = ws.key()
            if record(key, elems):
                queue.append(key)
    out = list(seen.values())
    out.sort(key=lambda t: (len(t), t))
    return out
