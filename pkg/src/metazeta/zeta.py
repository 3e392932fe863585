"""Closed-form subgroup counts and the zeta-equality classifier.

Subgroups T of G = G(p, m, n, k) are stratified by the pair
(T ∩ <a>, image of T in <b>), of orders (p^i, p^j).  The stratum sizes
are kernel sizes of norm endomorphisms on the quotients of <a>, and are
given here in closed form, so the full coefficient vector

    counts[t] = number of subgroups of order p^t

needs no enumeration.  For p = 2 a short 2-adic signature of k decides
when two parameter values give identical vectors; the classifier here
implements that criterion directly, without computing any counts.

Everything is exact integer arithmetic; coefficients are returned as
arbitrary-precision ints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError, UnsupportedShapeError
from .groups import GroupParams, is_valid
from .padic import Valuation, is_prime, mod_pow, vp


def _require_valid(params: GroupParams) -> None:
    if not is_valid(params):
        raise InvalidParameterError(f"{params} is not a valid presentation")


def _check_indices(params: GroupParams, i: int, j: int) -> None:
    if not (0 <= i <= params.m):
        raise InvalidParameterError(f"i = {i} out of range [0, {params.m}]")
    if not (0 <= j <= params.n):
        raise InvalidParameterError(f"j = {j} out of range [0, {params.n}]")


@dataclass(frozen=True)
class ZetaCoefficients:
    """Counts of subgroups by order: counts[t] subgroups of order p^t."""

    p: int
    m: int
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        L = self.m + self.n
        if len(self.counts) != L + 1:
            raise InvalidParameterError(
                f"expected {L + 1} coefficients, got {len(self.counts)}")
        if self.counts[0] != 1 or self.counts[L] != 1:
            raise InvalidParameterError("counts must start and end with 1")
        if any(c < 1 for c in self.counts):
            raise InvalidParameterError("every coefficient must be >= 1")

    def as_order_map(self) -> dict[int, int]:
        """Sparse {subgroup order: count} form, for convolution."""
        return {self.p**t: c for t, c in enumerate(self.counts)}

    def to_json_dict(self) -> dict:
        # counts serialized as decimal strings: they are exact big ints
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "counts": [str(c) for c in self.counts],
        }


@dataclass(frozen=True)
class KernelProfile:
    """One stratum (i, j): the acting residue and the kernel-size log."""

    i: int
    j: int
    u: int
    kernel_log: int


@dataclass(frozen=True)
class TwoAdicSignature:
    """The 2-adic data of k that controls zeta equality for p = 2.

    s2 = v2(k+1); cprime = min(m, v2(k-1)); sigma = s2 + n - 1.
    If s2 >= 2 then k = -1 (mod 4), forcing v2(k-1) = 1 and cprime = 1.
    """

    s2: Valuation
    cprime: int
    sigma: Valuation

    @classmethod
    def of(cls, params: GroupParams) -> "TwoAdicSignature":
        if params.p != 2:
            raise InvalidParameterError("signature only defined for p = 2")
        _require_valid(params)
        s2 = vp(2, params.k + 1)
        cprime = min(params.m, vp(2, params.k - 1))
        return cls(s2=s2, cprime=cprime, sigma=s2 + params.n - 1)


def u_ij(params: GroupParams, i: int, j: int) -> int:
    """Residue through which the order-p^j subgroup acts on <a>/A_i.

    The unique representative of k^(p^(n-j)) in [0, p^(m-i)); for the
    trivial quotient (i = m) this is 0.
    """
    _require_valid(params)
    _check_indices(params, i, j)
    modulus = params.p ** (params.m - i)
    return mod_pow(params.k, params.p ** (params.n - j), modulus)


def kernel_log(params: GroupParams, i: int, j: int) -> int:
    """log_p of the kernel size of the norm map on the (i, j) stratum.

    Odd p: min(m-i, j).  For p = 2 the count depends on whether the
    acting residue u is trivial on the quotient: if u == 1 the norm is
    plain multiplication by 2^j, otherwise its valuation is
    v2(u+1) + j - 1.  Computing v2(u+1) on the canonical u in
    [0, 2^(m-i)) already caps the valuation at m-i, so any congruent
    representative gives the same result.
    """
    _require_valid(params)
    _check_indices(params, i, j)
    r = params.m - i
    if r == 0:
        return 0
    if params.p != 2:
        return min(r, j)
    u = u_ij(params, i, j)
    if u == 1:
        return min(r, j)
    return min(r, int(vp(2, u + 1)) + j - 1)


def kernel_profile(params: GroupParams, i: int, j: int) -> KernelProfile:
    return KernelProfile(i=i, j=j, u=u_ij(params, i, j),
                         kernel_log=kernel_log(params, i, j))


def coefficients(params: GroupParams) -> ZetaCoefficients:
    """The exact coefficient vector (a_{p^0}, ..., a_{p^(m+n)}).

    Each a_{p^t} sums the stratum sizes p^kernel_log(i, t-i) over the
    admissible i, i.e. max(0, t-n) <= i <= min(t, m).
    """
    _require_valid(params)
    p, m, n = params.p, params.m, params.n
    counts = []
    for t in range(m + n + 1):
        total = 0
        for i in range(max(0, t - n), min(t, m) + 1):
            total += p ** kernel_log(params, i, t - i)
        counts.append(total)
    return ZetaCoefficients(p=p, m=m, n=n, counts=tuple(counts))


def zeta_equal_by_theorem(a: GroupParams, b: GroupParams) -> bool:
    """Decide coefficient-vector equality without computing coefficients.

    Odd p: always equal.  p = 2 with n >= m: always equal.  p = 2 with
    n < m: equal iff v2(k1+1) and v2(k2+1) agree below the threshold
    m - n, or both exceed it.
    """
    if (a.p, a.m, a.n) != (b.p, b.m, b.n):
        raise InvalidParameterError(
            f"mismatched (p, m, n): {(a.p, a.m, a.n)} vs {(b.p, b.m, b.n)}")
    _require_valid(a)
    _require_valid(b)
    if a.p != 2 or a.n >= a.m:
        return True
    threshold = a.m - a.n
    s1 = vp(2, a.k + 1)
    s2 = vp(2, b.k + 1)
    return (s1 == s2 and s1 <= threshold) or min(s1, s2) > threshold


def e_sequence(params: GroupParams) -> list[int]:
    """(E_0, ..., E_{m-1}): kernel-size logs of the full-image strata, p = 2.

    Computed from the 2-adic signature alone: for i >= m - cprime the
    action on the quotient is trivial and the log is min(m-i, n);
    below that it is min(m-i, sigma).  Two parameter values share a
    coefficient vector exactly when they share this sequence.
    """
    if params.p != 2:
        raise InvalidParameterError("the sequence is only defined for p = 2")
    sig = TwoAdicSignature.of(params)
    m, n = params.m, params.n
    out = []
    for i in range(m):
        if i >= m - sig.cprime:
            out.append(min(m - i, n))
        else:
            out.append(int(min(m - i, sig.sigma)))
    return out


def quasiregular_counts(p: int, ell: int, e: int) -> list[int]:
    """Subgroup counts of any quasi-regular metacyclic p-group, odd p.

    The group has order p^ell and exponent p^e < p^ell; with
    f = ell - e the count at order p^t is a truncated geometric sum:
    (p^(min(t, f, ell-t) + 1) - 1) / (p - 1), written out per branch.
    """
    if not is_prime(p) or p < 3:
        raise InvalidParameterError(f"p must be an odd prime, got {p}")
    if not 1 <= e < ell <= 2 * e:
        # A metacyclic group is a product of two cyclic pieces, each of
        # order at most the exponent, so ell <= 2e always holds.
        raise InvalidParameterError(
            f"need 1 <= e < ell <= 2e, got e = {e}, ell = {ell}")
    f = ell - e
    out = []
    for t in range(ell + 1):
        if t <= f:
            x = t + 1
        elif t <= e:
            x = f + 1
        else:
            x = ell - t + 1
        out.append((p**x - 1) // (p - 1))
    return out


_MAXIMAL_CLASS_FAMILIES = ("D", "Q", "SD")


@dataclass(frozen=True)
class BerkovichShape:
    """Structural shape of a metacyclic 2-group, as detected from the
    tower of order-dividing-2^i element sets.

    w is the largest i whose set has exactly 2^(2i) elements, R the
    corresponding subgroup.  Shapes: the whole group cyclic; maximal
    class (dihedral / quaternion / semidihedral, w = 0); R = G; cyclic
    quotient G/R; or maximal-class quotient G/R (no closed formulas,
    rejected by berkovich_counts).
    """

    kind: str  # "cyclic" | "maximal-class" | "omega-full" | "cyclic-quotient" | "maximal-quotient"
    ell: int   # log2 of the group order
    family: str | None = None  # for (maximal-)class shapes: D, Q, or SD
    w: int = 0
    c: int = 0

    @classmethod
    def cyclic(cls, ell: int) -> "BerkovichShape":
        if ell < 0:
            raise InvalidParameterError("ell must be >= 0")
        return cls(kind="cyclic", ell=ell)

    @classmethod
    def maximal_class(cls, family: str, ell: int) -> "BerkovichShape":
        if family not in _MAXIMAL_CLASS_FAMILIES:
            raise InvalidParameterError(f"unknown family {family!r}")
        if ell < 3 or (family == "SD" and ell < 4):
            raise InvalidParameterError(
                f"{family} groups need order >= {'16' if family == 'SD' else '8'}")
        return cls(kind="maximal-class", ell=ell, family=family)

    @classmethod
    def omega_full(cls, w: int) -> "BerkovichShape":
        if w < 1:
            raise InvalidParameterError("w must be >= 1")
        return cls(kind="omega-full", ell=2 * w, w=w)

    @classmethod
    def cyclic_quotient(cls, w: int, c: int) -> "BerkovichShape":
        if w < 1 or c < 1:
            raise InvalidParameterError("need w >= 1 and c >= 1")
        return cls(kind="cyclic-quotient", ell=2 * w + c, w=w, c=c)

    @classmethod
    def maximal_quotient(cls, family: str, w: int, c: int) -> "BerkovichShape":
        if family not in _MAXIMAL_CLASS_FAMILIES:
            raise InvalidParameterError(f"unknown family {family!r}")
        if w < 1 or c < 3:
            raise InvalidParameterError("need w >= 1 and c >= 3")
        return cls(kind="maximal-quotient", ell=2 * w + c, family=family,
                   w=w, c=c)


def berkovich_counts(shape: BerkovichShape) -> list[int]:
    """Closed-form subgroup counts for a metacyclic 2-group of the given
    shape.  The maximal-class-quotient shape has no compact formula and
    raises UnsupportedShapeError; fall back to the enumerator there.
    """
    ell = shape.ell
    if shape.kind == "cyclic":
        return [1] * (ell + 1)
    if shape.kind == "maximal-class":
        out = [1]
        for t in range(1, ell):
            out.append(2 ** (ell - t) + 1)
        out.append(1)
        if shape.family == "Q":
            out[1] = 1
        elif shape.family == "SD":
            out[1] = 2 ** (ell - 2) + 1
        return out
    if shape.kind == "omega-full":
        w = shape.w
        return [2 ** (t + 1) - 1 if t <= w else 2 ** (2 * w - t + 1) - 1
                for t in range(2 * w + 1)]
    if shape.kind == "cyclic-quotient":
        w, c = shape.w, shape.c
        out = []
        for t in range(2 * w + c + 1):
            if t <= w:
                out.append(2 ** (t + 1) - 1)
            elif t < w + c:
                out.append(2 ** (w + 1) - 1)
            else:
                out.append(2 ** (2 * w + c - t + 1) - 1)
        return out
    raise UnsupportedShapeError(
        f"no closed formulas for shape {shape.kind}; use the enumerator")


def dirichlet_multiply(z1: dict[int, int], z2: dict[int, int]) -> dict[int, int]:
    """Dirichlet convolution of two sparse coefficient maps.

    out[n] = sum over d1*d2 == n of z1[d1] * z2[d2]; multiplies the
    coefficient vectors of direct factors of coprime order.
    """
    out: dict[int, int] = {}
    for d1, c1 in z1.items():
        for d2, c2 in z2.items():
            key = d1 * d2
            out[key] = out.get(key, 0) + c1 * c2
    return dict(sorted(out.items()))
