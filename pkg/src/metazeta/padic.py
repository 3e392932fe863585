"""Exact modular and p-adic integer arithmetic.

All functions operate on arbitrary-precision Python integers, so the
exhaustive cross-checks elsewhere in the library can never overflow.
Valuations are plain non-negative ints, except that the valuation of 0
is the distinguished value ``INFINITY`` (= ``math.inf``), which absorbs
addition and compares above every int.
"""

from __future__ import annotations

import math

from .errors import HypothesisError, InvalidParameterError

INFINITY = math.inf

# A valuation: a non-negative int, or INFINITY (only for input 0).
Valuation = int | float


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for small parameters."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidParameterError(f"p = {p} is not prime")


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, e) with n = p**e if n is a prime power, else None.

    n = 1 returns (2, 0): the trivial group is a p-group for every p,
    and callers only use the pair to take logarithms.
    """
    if n < 1:
        return None
    if n == 1:
        return (2, 0)
    for p in range(2, n + 1):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            return (p, e) if n == 1 else None
    return None


def vp(p: int, d: int) -> Valuation:
    """p-adic valuation of d, with vp(p, 0) = INFINITY.

    The sign of d is ignored: the valuation of a negative integer is
    the valuation of its absolute value.
    """
    _require_prime(p)
    if d == 0:
        return INFINITY
    d = abs(d)
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return v


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent reduced into [0, modulus), by square-and-multiply."""
    if modulus < 1:
        raise InvalidParameterError(f"modulus must be >= 1, got {modulus}")
    if exponent < 0:
        raise InvalidParameterError(f"exponent must be >= 0, got {exponent}")
    return pow(base, exponent, modulus)


def mult_order(u: int, modulus: int) -> int:
    """Least e >= 1 with u**e == 1 (mod modulus).

    Computed by direct powering, which doubles as the independent
    definition the property tests rely on.
    """
    if modulus < 1:
        raise InvalidParameterError(f"modulus must be >= 1, got {modulus}")
    u %= modulus
    if math.gcd(u, modulus) != 1:
        raise InvalidParameterError(f"{u} is not a unit modulo {modulus}")
    if modulus == 1:
        return 1
    e = 1
    acc = u
    while acc != 1:
        acc = acc * u % modulus
        e += 1
    return e


def lte_valuation(p: int, x: int, y: int, n: int) -> Valuation:
    """v_p(x**n - y**n) from the valuations of x - y (and x + y, n).

    Never expands x**n - y**n.  The admissible inputs are exactly:

    * odd p:  p | (x - y), p does not divide x or y;
    * p = 2:  x and y both odd.

    In both cases x != y is required (the difference must be nonzero).
    Anything else raises HypothesisError; callers wanting a generic
    valuation must use vp on the expanded difference themselves.
    """
    _require_prime(p)
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    if x == y:
        raise HypothesisError("x == y makes the difference vanish")
    if p == 2:
        if x % 2 == 0 or y % 2 == 0:
            raise HypothesisError("p = 2 requires x and y both odd")
        if n % 2 == 1:
            return vp(2, x - y)
        return vp(2, x - y) + vp(2, x + y) + vp(2, n) - 1
    if x % p == 0 or y % p == 0:
        raise HypothesisError(f"p = {p} must not divide x or y")
    if (x - y) % p != 0:
        raise HypothesisError(f"p = {p} must divide x - y")
    return vp(p, x - y) + vp(p, n)
