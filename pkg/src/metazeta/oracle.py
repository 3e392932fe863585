"""Brute-force oracle: explicit multiplication tables and exhaustive
subgroup enumeration.

Nothing here knows any closed-form count.  Groups are dense tables
(element 0 = identity), subgroups come from a join-closure walk over
cyclic subgroups, and structural shape detection reads off the tower of
order-dividing-2^i sets.  The closed-form modules are tested against
this one, never the reverse.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass

import numpy as np

from ._backend import close_subgroup, enumerate_subgroups as _enumerate_kernel
from .errors import (InternalInconsistencyError, InvalidParameterError,
                     ResourceLimitError, UnsupportedShapeError)
from .groups import GroupParams, is_valid
from .padic import is_prime, prime_power
from .zeta import BerkovichShape

DEFAULT_MAX_ORDER = 4096
DEFAULT_MAX_SUBGROUPS = 100_000

ENV_MAX_ORDER = "METAZETA_MAX_ORDER"
ENV_MAX_SUBGROUPS = "METAZETA_MAX_SUBGROUPS"


@dataclass(frozen=True)
class OracleLimits:
    """Hard caps on what the enumeration side will attempt."""

    max_order: int = DEFAULT_MAX_ORDER
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS

    def __post_init__(self):
        if self.max_order < 1 or self.max_subgroups < 1:
            raise InvalidParameterError("limits must be positive")

    @classmethod
    def from_env(cls) -> "OracleLimits":
        def read(var: str, default: int) -> int:
            raw = os.environ.get(var)
            if raw is None or not raw.strip():
                return default
            try:
                return int(raw)
            except ValueError:
                raise InvalidParameterError(
                    f"{var} must be an integer, got {raw!r}") from None
        return cls(max_order=read(ENV_MAX_ORDER, DEFAULT_MAX_ORDER),
                   max_subgroups=read(ENV_MAX_SUBGROUPS, DEFAULT_MAX_SUBGROUPS))


def _check_order(order: int, limits: OracleLimits, label: str) -> None:
    if order > limits.max_order:
        raise ResourceLimitError(
            f"{label} has order {order} > max_order {limits.max_order}; "
            f"raise {ENV_MAX_ORDER} or pass larger OracleLimits")


class ConcreteGroup:
    """A finite group as a dense multiplication table.

    table[x, y] is the product x*y; element 0 is the identity.  The
    constructor checks the identity laws; run verify_axioms for the
    rest (full check on small tables, seeded sampling on large ones).
    """

    def __init__(self, table: np.ndarray, label: str,
                 params: GroupParams | None = None):
        table = np.asarray(table)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise InvalidParameterError("table must be square")
        n = table.shape[0]
        ident = np.arange(n)
        if not (np.array_equal(table[0], ident)
                and np.array_equal(table[:, 0], ident)):
            raise InvalidParameterError("element 0 must be the identity")
        self.table = np.ascontiguousarray(table, dtype=np.uint16)
        self.order = n
        self.label = label
        self.params = params

    def __repr__(self):
        return f"ConcreteGroup({self.label!r}, order={self.order})"

    def multiply(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def element_order(self, x: int) -> int:
        acc, k = x, 1
        while acc != 0:
            acc = int(self.table[acc, x])
            k += 1
            if k > self.order:
                raise InternalInconsistencyError("powers never reach identity")
        return k

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(x) for x in range(self.order)))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def subgroup_generated(self, gens) -> tuple[int, ...]:
        return close_subgroup(self.table, gens)

    def verify_axioms(self, rng_seed: int = 0, samples: int = 20000) -> None:
        """Raise InternalInconsistencyError unless the table is a group.

        Rows and columns must be permutations (gives inverses, since the
        identity column check already passed); associativity is checked
        on all triples when order <= 64, else on seeded random triples.
        """
        t = self.table.astype(np.int64)
        n = self.order
        ident = np.arange(n)
        if not (np.array_equal(np.sort(t, axis=1), np.tile(ident, (n, 1)))
                and np.array_equal(np.sort(t, axis=0), np.tile(ident[:, None], (1, n)))):
            raise InternalInconsistencyError(f"{self.label}: rows/columns not permutations")
        if n <= 64:
            # left[x,y,z] = t[t[x,y],z]; right[x,y,z] = t[x,t[y,z]].
            left = t[t, :]
            right = t[:, t]
            if not np.array_equal(left, right):
                raise InternalInconsistencyError(f"{self.label}: associativity fails")
            return
        rng = random.Random(rng_seed)
        for _ in range(samples):
            x, y, z = (rng.randrange(n) for _ in range(3))
            if t[t[x, y], z] != t[x, t[y, z]]:
                raise InternalInconsistencyError(
                    f"{self.label}: associativity fails at ({x}, {y}, {z})")

    def to_json_dict(self, include_table: bool = False) -> dict:
        d = {"label": self.label, "order": self.order}
        if self.params is not None:
            d["params"] = {"p": self.params.p, "m": self.params.m,
                           "n": self.params.n, "k": self.params.k}
        if include_table:
            d["table"] = self.table.tolist()
        return d


def build_group(params: GroupParams,
                limits: OracleLimits | None = None) -> ConcreteGroup:
    """Table of the split group: pairs (x, y) composed through the
    twisting k^y, with element id x * p^n + y.
    """
    if not is_valid(params):
        raise InvalidParameterError(f"{params} is not a valid presentation")
    limits = limits or OracleLimits.from_env()
    _check_order(params.order, limits, str(params))
    pm, pn = params.pm, params.pn
    ids = np.arange(params.order, dtype=np.int64)
    x, y = ids // pn, ids % pn
    kpow = np.array([pow(params.k, int(v), pm) for v in range(pn)],
                    dtype=np.int64)
    tx = (x[:, None] + kpow[y][:, None] * x[None, :]) % pm
    ty = (y[:, None] + y[None, :]) % pn
    label = f"G({params.p},{params.m},{params.n},{params.k})"
    return ConcreteGroup(tx * pn + ty, label, params=params)


def presentation_group(p: int, m: int, n: int, lam: int, k: int,
                       limits: OracleLimits | None = None) -> ConcreteGroup:
    """Table of the general metacyclic presentation in which the second
    generator's p^n-th power lands at a^(p^lam) instead of the identity
    (lam = m recovers the split case).  Needs k^(p^n) = 1 and
    p^lam * (k - 1) = 0 mod p^m, which make the pair composition
    associative; b-exponent overflow carries p^lam into the a-exponent.
    """
    if not is_prime(p) or m < 1 or n < 1:
        raise InvalidParameterError("need prime p and m, n >= 1")
    if not 0 <= lam <= m:
        raise InvalidParameterError(f"lam = {lam} out of range [0, {m}]")
    pm, pn = p**m, p**n
    k %= pm
    if pow(k, pn, pm) != 1 or (p**lam * (k - 1)) % pm != 0:
        raise InvalidParameterError(
            f"presentation (p={p}, m={m}, n={n}, lam={lam}, k={k}) is inconsistent")
    limits = limits or OracleLimits.from_env()
    _check_order(pm * pn, limits, "presentation group")
    ids = np.arange(pm * pn, dtype=np.int64)
    x, y = ids // pn, ids % pn
    kpow = np.array([pow(k, int(v), pm) for v in range(pn)], dtype=np.int64)
    ysum = y[:, None] + y[None, :]
    tx = (x[:, None] + kpow[y][:, None] * x[None, :]
          + p**lam * (ysum // pn)) % pm
    ty = ysum % pn
    label = f"P({p},{m},{n};{lam},{k})"
    return ConcreteGroup(tx * pn + ty, label)


def cyclic_group(q: int, limits: OracleLimits | None = None) -> ConcreteGroup:
    if q < 1:
        raise InvalidParameterError("order must be >= 1")
    limits = limits or OracleLimits.from_env()
    _check_order(q, limits, f"Z{q}")
    ids = np.arange(q, dtype=np.int64)
    return ConcreteGroup((ids[:, None] + ids[None, :]) % q, f"Z{q}")


def direct_product(g: ConcreteGroup, q: int,
                   limits: OracleLimits | None = None) -> ConcreteGroup:
    """g x Z_q for a cofactor order q coprime to |g|; id = e * q + z."""
    if q < 1:
        raise InvalidParameterError("cofactor order must be >= 1")
    if math.gcd(q, g.order) != 1:
        raise InvalidParameterError(
            f"cofactor order {q} shares a factor with |{g.label}| = {g.order}")
    limits = limits or OracleLimits.from_env()
    label = f"{g.label} x Z{q}"
    _check_order(g.order * q, limits, label)
    ids = np.arange(g.order * q, dtype=np.int64)
    a, b = ids // q, ids % q
    t1 = g.table.astype(np.int64)
    table = t1[a[:, None], a[None, :]] * q + (b[:, None] + b[None, :]) % q
    return ConcreteGroup(table, label)


@dataclass(frozen=True)
class SubgroupSet:
    """The complete subgroup list of one group, sorted by (size, elements)."""

    group: ConcreteGroup
    subgroups: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def count_map(self) -> dict[int, int]:
        """{subgroup order: how many}, ascending by order."""
        out: dict[int, int] = {}
        for s in self.subgroups:
            out[len(s)] = out.get(len(s), 0) + 1
        return dict(sorted(out.items()))

    def counts_by_power(self) -> list[int]:
        """counts[t] = number of subgroups of order p^t; p-groups only."""
        pe = prime_power(self.group.order)
        if pe is None:
            raise InvalidParameterError(
                f"{self.group.label} has order {self.group.order}, not a prime power")
        p, e = pe
        out = [0] * (e + 1)
        for s in self.subgroups:
            out[_exact_log(p, len(s))] += 1
        return out

    def to_json_dict(self, include_subgroups: bool = False) -> dict:
        d = {
            "label": self.group.label,
            "order": self.group.order,
            "total_subgroups": len(self.subgroups),
            "count_by_order": {str(o): c for o, c in self.count_map().items()},
        }
        if include_subgroups:
            d["subgroups"] = [list(s) for s in self.subgroups]
        return d


def _exact_log(p: int, n: int) -> int:
    t = 0
    while n % p == 0:
        n //= p
        t += 1
    if n != 1:
        raise InternalInconsistencyError(f"{n * p**t} is not a power of {p}")
    return t


def enumerate_subgroups(group: ConcreteGroup,
                        limits: OracleLimits | None = None) -> SubgroupSet:
    """Every subgroup, via join closure over the cyclic subgroups."""
    limits = limits or OracleLimits.from_env()
    _check_order(group.order, limits, group.label)
    subs = _enumerate_kernel(group.table, limits.max_subgroups)
    return SubgroupSet(group=group, subgroups=tuple(subs))


def subgroup_counts(group: ConcreteGroup,
                    limits: OracleLimits | None = None) -> list[int]:
    """Enumerated counts[t] for a p-group; the cross-check target for
    the closed-form coefficients.
    """
    return enumerate_subgroups(group, limits).counts_by_power()


def cocycle_subgroup_census(params: GroupParams,
                            limits: OracleLimits | None = None,
                            subgroups: SubgroupSet | None = None,
                            ) -> dict[tuple[int, int], int]:
    """Counts of subgroups by stratum (i, j), from the element ids.

    i = log_p of the subgroup's intersection with <a> (ids with zero
    b-part), j = log_p of its image in <b> (distinct b-parts).  Checks
    the per-stratum kernel sizes, which is finer than totals.  Every
    grid cell is present, zero-filled, so miscounts cannot hide.
    """
    if subgroups is None:
        subgroups = enumerate_subgroups(build_group(params, limits), limits)
    elif subgroups.group.params != params:
        raise InvalidParameterError("subgroup set was built from different parameters")
    p, pn = params.p, params.pn
    out = {(i, j): 0 for i in range(params.m + 1) for j in range(params.n + 1)}
    for s in subgroups:
        inter = sum(1 for e in s if e % pn == 0)
        image = len({e % pn for e in s})
        out[(_exact_log(p, inter), _exact_log(p, image))] += 1
    return out


@dataclass(frozen=True)
class QuotientShape:
    """What G/R turned out to be: kind in {trivial, cyclic, D, Q, SD,
    other}, c = log2 of the quotient order.
    """

    kind: str
    c: int


@dataclass(frozen=True)
class OmegaProfile:
    """Tower data of a 2-group: omega_sizes[i] = #{x : x^(2^i) = 1} for
    i = 0..log2|G|, the largest w with omega_sizes[w] = 4^w, the
    elements R of the corresponding subgroup, and the quotient's shape.
    """

    omega_sizes: tuple[int, ...]
    w: int
    R: tuple[int, ...]
    quotient_shape: QuotientShape

    @property
    def ell(self) -> int:
        return len(self.omega_sizes) - 1

    @property
    def exponent_log(self) -> int:
        full = self.omega_sizes[-1]
        return next(i for i, s in enumerate(self.omega_sizes) if s == full)

    def to_shape(self) -> BerkovichShape:
        """The closed-formula shape, when the profile admits one."""
        qs = self.quotient_shape
        if qs.kind == "other":
            raise UnsupportedShapeError(
                "quotient is outside the metacyclic classification")
        if self.w == 0:
            if qs.kind == "trivial":
                return BerkovichShape.cyclic(0)
            if qs.kind == "cyclic":
                return BerkovichShape.cyclic(qs.c)
            return BerkovichShape.maximal_class(qs.kind, qs.c)
        if qs.kind == "trivial":
            return BerkovichShape.omega_full(self.w)
        if qs.kind == "cyclic":
            return BerkovichShape.cyclic_quotient(self.w, qs.c)
        return BerkovichShape.maximal_quotient(qs.kind, self.w, qs.c)


def _power_tower(table: np.ndarray) -> list[np.ndarray]:
    """maps[i][x] = x^(2^i); squares composed until everything is 1."""
    n = table.shape[0]
    sq = table[np.arange(n), np.arange(n)].astype(np.intp)
    maps = [np.arange(n, dtype=np.intp)]
    while np.any(maps[-1] != 0):
        maps.append(sq[maps[-1]])
        if len(maps) > 64:
            raise InternalInconsistencyError("element orders do not divide a power of 2")
    return maps


def _quotient_table(group: ConcreteGroup, core: tuple[int, ...]) -> np.ndarray:
    """Multiplication table of G/N for a normal subgroup N given by its
    elements.  Cosets are numbered with the identity coset first; raises
    if left and right cosets differ.
    """
    t = group.table
    coset_of = np.full(group.order, -1, dtype=np.intp)
    reps: list[int] = []
    core_arr = np.fromiter(core, dtype=np.intp)
    for e in range(group.order):
        if coset_of[e] >= 0:
            continue
        left = t[e, core_arr]
        right = t[core_arr, e]
        if set(left.tolist()) != set(right.tolist()):
            raise InternalInconsistencyError(
                f"{group.label}: subgroup of order {len(core)} is not normal")
        coset_of[left] = len(reps)
        reps.append(e)
    reps_arr = np.fromiter(reps, dtype=np.intp)
    return coset_of[t[reps_arr[:, None], reps_arr[None, :]]].astype(np.int64)


def _classify_quotient(table: np.ndarray) -> QuotientShape:
    """Place a 2-group table among {trivial, cyclic, D, Q, SD, other}.

    D, Q, SD are told apart by their involution counts (half+1, one,
    quarter+1); anything that fits no slot is reported as other rather
    than guessed.
    """
    n = table.shape[0]
    if n == 1:
        return QuotientShape("trivial", 0)
    c = _exact_log(2, n)
    maps = _power_tower(table)
    if (1 << (len(maps) - 1)) == n:
        return QuotientShape("cyclic", c)
    if n < 8 or np.array_equal(table, table.T):
        return QuotientShape("other", c)
    involutions = int(np.count_nonzero(maps[1] == 0)) - 1
    if involutions == 1:
        return QuotientShape("Q", c)
    if involutions == n // 2 + 1:
        return QuotientShape("D", c)
    if involutions == n // 4 + 1 and n >= 16:
        return QuotientShape("SD", c)
    return QuotientShape("other", c)


def omega_profile(group: ConcreteGroup) -> OmegaProfile:
    """Structural probe of a metacyclic 2-group, straight from the table.

    Walks the tower of x^(2^i)-kernels, takes the largest level of full
    size 4^i, verifies it is a subgroup (anything else means the input
    was not metacyclic, reported as internal-inconsistency), and
    classifies the quotient by that subgroup.
    """
    n = group.order
    ell = _exact_log(2, n)
    maps = _power_tower(group.table)
    sizes = [int(np.count_nonzero(f == 0)) for f in maps]
    sizes.extend([n] * (ell + 1 - len(sizes)))
    w = max(i for i, s in enumerate(sizes) if s == 4**i)
    if w < len(maps):
        core = tuple(int(v) for v in np.flatnonzero(maps[w] == 0))
    else:
        core = tuple(range(n))
    if group.subgroup_generated(core) != core:
        raise InternalInconsistencyError(
            f"{group.label}: order-dividing set at level {w} is not a subgroup")
    shape = _classify_quotient(_quotient_table(group, core))
    return OmegaProfile(omega_sizes=tuple(sizes), w=w, R=core,
                        quotient_shape=shape)
