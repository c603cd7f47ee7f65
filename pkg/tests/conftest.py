"""Shared independent oracles for the test suite.

These deliberately avoid the code paths they check: root-of-unity sums are
done in floating point, walk counts by dynamic programming on paths, and
binomials by the Pascal recurrence.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest


def brute_ramanujan(d: int, m: int) -> float:
    """Float sum of zeta^m over primitive d-th roots."""
    total = 0.0
    for a in range(1, d + 1):
        if math.gcd(a, d) == 1:
            total += cmath.exp(2j * cmath.pi * a * m / d).real
    return total


def atom_moments_float(measure, K: int) -> list[float]:
    """Moments by direct float summation over the atoms of each base.

    Only orbit bases (optionally density-weighted) are supported: enumerate
    the primitive d-th roots, evaluate the density at x = (2 cos t)^2.
    """
    from adeinv.measures import Orbit

    out = []
    for k in range(K + 1):
        total = 0.0
        for base, poly in measure.terms:
            assert isinstance(base, Orbit), "float oracle needs atomic support"
            d = base.d
            atoms = [a for a in range(1, d + 1) if math.gcd(a, d) == 1]
            for a in atoms:
                x = (2.0 * math.cos(2.0 * math.pi * a / d)) ** 2
                dens = sum(float(c) * x**j for j, c in enumerate(poly))
                total += dens * x**k / len(atoms)
        out.append(total)
    return out


def dyck_paths(K: int) -> list[int]:
    """Closed 2k-walks on the half-line 0-1-2-...: the Catalan numbers."""
    size = 2 * K + 2
    out = [1]
    state = [0] * size
    state[0] = 1
    for step in range(1, 2 * K + 1):
        nxt = [0] * size
        for v, w in enumerate(state):
            if not w:
                continue
            if v + 1 < size:
                nxt[v + 1] += w
            if v - 1 >= 0:
                nxt[v - 1] += w
        state = nxt
        if step % 2 == 0:
            out.append(state[0])
    return out


def integer_walks(K: int) -> list[int]:
    """Closed 2k-walks on the integers: central binomial coefficients."""
    out = [1]
    offset = 2 * K + 1
    state = [0] * (2 * offset + 1)
    state[offset] = 1
    for step in range(1, 2 * K + 1):
        nxt = [0] * len(state)
        for v, w in enumerate(state):
            if not w:
                continue
            nxt[v + 1] += w
            nxt[v - 1] += w
        state = nxt
        if step % 2 == 0:
            out.append(state[offset])
    return out


def pascal_binomial(n: int, t: int) -> int:
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row[t] if 0 <= t <= n else 0


def partitions_upto_4_blocks(k: int) -> int:
    """Number of set partitions of {1..k} into at most 4 blocks."""
    # Stirling recurrence S(k, j) = j S(k-1, j) + S(k-1, j-1)
    s = [[0] * 5 for _ in range(k + 1)]
    s[0][0] = 1
    for i in range(1, k + 1):
        for j in range(1, 5):
            s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1]
    return sum(s[k][j] for j in range(5)) if k else 1


@pytest.fixture
def frac():
    return Fraction
