"""Exact arithmetic substrate: rationals, binomials, number-theoretic sums.

Rationals are ``fractions.Fraction`` throughout the package: the stdlib type
already guarantees lowest terms and a positive denominator, so equality is
representation equality.  Everything here is a pure function on immutable
values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

# A moment sequence is a list of exact rationals c_0..c_K, with c_0 = 1 for
# probability measures.  Entries of group/graph moment sequences are
# nonnegative integers.
MomentSequence = list[Fraction]


def binomial(n: int, t: int) -> int:
    """C(n, t) for nonnegative arguments, 0 when t > n."""
    if n < 0 or t < 0:
        raise ValueError(f"binomial expects nonnegative arguments, got ({n}, {t})")
    return math.comb(n, t)


@lru_cache(maxsize=None)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((p, exponent), ...)."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def euler_phi(d: int) -> int:
    """Euler totient: count of 1 <= a <= d with gcd(a, d) = 1."""
    if d < 1:
        raise ValueError(f"euler_phi expects d >= 1, got {d}")
    out = 1
    for p, e in _factor(d):
        out *= (p - 1) * p ** (e - 1)
    return out


def moebius(d: int) -> int:
    """Moebius function: 0 on non-squarefree d, else (-1)^(#prime factors)."""
    if d < 1:
        raise ValueError(f"moebius expects d >= 1, got {d}")
    out = 1
    for _, e in _factor(d):
        if e > 1:
            return 0
        out = -out
    return out


@lru_cache(maxsize=None)
def ramanujan_sum(d: int, m: int) -> int:
    """Sum of zeta^m over the primitive d-th roots of unity zeta.

    Computed by the Moebius closed form mu(d/g) * phi(d) / phi(d/g) with
    g = gcd(d, |m|); in particular ramanujan_sum(d, 0) = phi(d).
    """
    if d < 1:
        raise ValueError(f"ramanujan_sum expects d >= 1, got {d}")
    g = math.gcd(d, abs(m))
    q = d // g
    phi_q = euler_phi(q)
    # mu(q) * phi(d) / phi(q) is always an integer
    return moebius(q) * euler_phi(d) // phi_q
