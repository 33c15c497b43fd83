"""Arithmetic mod a prime p: Lucas binomials, base-p digits, factorials.

Binomial coefficients follow the integer-valued-polynomial convention
C(z, k) = z(z-1)...(z-k+1)/k!, so the upper argument may be any integer;
a negative lower argument gives 0.
"""

from __future__ import annotations

import math

__all__ = [
    "is_prime",
    "inv_mod_p",
    "binom_mod_p",
    "digits_base_p",
    "factorial_mod_p",
]


def is_prime(n: int) -> bool:
    """Trial-division primality test; intended for word-size n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def inv_mod_p(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(x, p - 2, p)


def _binom_nonneg(n: int, k: int, p: int) -> int:
    # Lucas: the binomial factors over base-p digits.
    if k < 0 or k > n:
        return 0
    out = 1
    while k > 0:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
    return out


def binom_mod_p(upper: int, lower: int, p: int) -> int:
    """C(upper, lower) mod p, total in both arguments."""
    if lower < 0:
        return 0
    if upper >= 0:
        return _binom_nonneg(upper, lower, p)
    # reflection: C(z, k) = (-1)^k C(k - z - 1, k) for z < 0
    val = _binom_nonneg(lower - upper - 1, lower, p)
    return (-val) % p if lower % 2 else val


def digits_base_p(n: int, p: int, length: int) -> list[int]:
    """Base-p digits of n, least significant first, padded to `length`."""
    if n < 0 or n >= p**length:
        raise ValueError(f"{n} does not fit in {length} base-{p} digits")
    out = []
    for _ in range(length):
        n, d = divmod(n, p)
        out.append(d)
    return out


def factorial_mod_p(m: int, p: int) -> int:
    """m! mod p for 0 <= m <= p-1; larger m would not be a unit mod p."""
    if not 0 <= m <= p - 1:
        raise ValueError(f"factorial_mod_p needs 0 <= m <= p-1, got m={m}")
    out = 1
    for i in range(2, m + 1):
        out = out * i % p
    return out
