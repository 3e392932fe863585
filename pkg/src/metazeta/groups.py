"""Parameter model for the split metacyclic p-group G(p, m, n, k).

G(p, m, n, k) is the semidirect product of a cyclic group of order p^m
(generated by a) by a cyclic group of order p^n (generated by b), where
conjugation by b raises a to the k-th power.  The presentation yields a
group of order p^(m+n) exactly when k^(p^n) == 1 (mod p^m); such
parameter tuples are called *valid*.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError, ResourceLimitError
from .padic import is_prime, mod_pow

# Residue enumeration refuses above this modulus; validity checks for a
# single k stay cheap at any size.
DEFAULT_ENUM_BOUND = 1 << 20


@dataclass(frozen=True, order=True)
class GroupParams:
    """The tuple (p, m, n, k); k is stored reduced into [0, p^m)."""

    p: int
    m: int
    n: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidParameterError(f"p = {self.p} is not prime")
        if self.m < 1 or self.n < 1:
            raise InvalidParameterError("m and n must be >= 1")
        object.__setattr__(self, "k", self.k % self.p**self.m)

    @property
    def pm(self) -> int:
        return self.p**self.m

    @property
    def pn(self) -> int:
        return self.p**self.n

    @property
    def order(self) -> int:
        return self.p ** (self.m + self.n)


@dataclass(frozen=True)
class KPartition:
    """A partition of the valid k set for fixed (p, m, n).

    ``kind`` names the defining equivalence: "isomorphism", "zeta", or
    "lattice".  Blocks are sorted internally and ordered by minimum.
    """

    p: int
    m: int
    n: int
    kind: str
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(not b for b in self.blocks):
            raise InvalidParameterError("empty partition block")
        normalized = tuple(sorted((tuple(sorted(b)) for b in self.blocks),
                                  key=lambda b: b[0]))
        total = sum(len(b) for b in normalized)
        if len({k for b in normalized for k in b}) != total:
            raise InvalidParameterError("partition blocks overlap")
        object.__setattr__(self, "blocks", normalized)

    def representatives(self) -> tuple[int, ...]:
        """Minimum residue of each block."""
        return tuple(b[0] for b in self.blocks)

    def block_of(self, k: int) -> tuple[int, ...]:
        for b in self.blocks:
            if k in b:
                return b
        raise KeyError(k)

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "kind": self.kind,
            "blocks": [list(b) for b in self.blocks],
        }


def is_valid(params: GroupParams) -> bool:
    """True iff the presentation defines a group of order p^(m+n)."""
    return mod_pow(params.k, params.pn, params.pm) == 1


def valid_k_set(p: int, m: int, n: int,
                enum_bound: int = DEFAULT_ENUM_BOUND) -> list[int]:
    """All valid k in [0, p^m), ascending."""
    if not is_prime(p):
        raise InvalidParameterError(f"p = {p} is not prime")
    if m < 1 or n < 1:
        raise InvalidParameterError("m and n must be >= 1")
    pm = p**m
    if pm > enum_bound:
        raise ResourceLimitError(
            f"p^m = {pm} exceeds the enumeration bound {enum_bound}")
    pn = p**n
    return [k for k in range(pm) if mod_pow(k, pn, pm) == 1]


def _require_same_base(a: GroupParams, b: GroupParams) -> None:
    if (a.p, a.m, a.n) != (b.p, b.m, b.n):
        raise InvalidParameterError(
            f"mismatched (p, m, n): {(a.p, a.m, a.n)} vs {(b.p, b.m, b.n)}")


def _require_valid(params: GroupParams) -> None:
    if not is_valid(params):
        raise InvalidParameterError(f"{params} is not a valid presentation")


def _power_orbit(params: GroupParams) -> set[int]:
    """All k^v mod p^m over units v modulo p^n: the isomorphism orbit."""
    pm, pn, k = params.pm, params.pn, params.k
    return {mod_pow(k, v, pm) for v in range(1, pn) if math.gcd(v, params.p) == 1}


def is_isomorphic(a: GroupParams, b: GroupParams) -> bool:
    """True iff k2 is a unit power k1^v, v invertible modulo p^n.

    Enumerates the whole orbit of exponents; the relation is an
    equivalence because v is invertible modulo the order of k1.
    """
    _require_same_base(a, b)
    _require_valid(a)
    _require_valid(b)
    return b.k in _power_orbit(a)


def cyclic_spans_equal(a: GroupParams, b: GroupParams) -> bool:
    """Whether <k1> and <k2> coincide as subgroups of the units mod p^m.

    Equivalent to is_isomorphic; kept as an independent route so the
    two can be cross-checked against each other.
    """
    _require_same_base(a, b)
    _require_valid(a)
    _require_valid(b)

    def span(k: int, pm: int) -> frozenset[int]:
        powers = {1}
        x = k % pm
        while x not in powers:
            powers.add(x)
            x = x * k % pm
        return frozenset(powers)

    return span(a.k, a.pm) == span(b.k, b.pm)


def iso_classes(p: int, m: int, n: int,
                enum_bound: int = DEFAULT_ENUM_BOUND) -> KPartition:
    """Partition of the valid k set into isomorphism classes."""
    blocks = []
    seen: set[int] = set()
    for k in valid_k_set(p, m, n, enum_bound):
        if k in seen:
            continue
        orbit = _power_orbit(GroupParams(p, m, n, k))
        seen |= orbit
        blocks.append(tuple(sorted(orbit)))
    return KPartition(p, m, n, "isomorphism", tuple(blocks))
