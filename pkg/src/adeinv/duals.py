"""Invariants of dihedral group duals via word counting.

The dual of the dihedral group D_n embeds in the quantum permutation group
on 4 points through the diagonal representation diag(1, g, 1, h) over the
generating multiset (1, g, 1, h) with g^2 = h^2 = 1 (and (gh)^n = 1 for
finite n).  Its k-th moment is the number of length-k words over the
multiset whose product is the identity -- a transfer-matrix walk on the
Cayley graph: 2n states for finite n, a radius-K ball in the infinite
dihedral group for n = infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["DihedralElement", "dual_moments", "dual_moments_multiset", "INFINITY"]

INFINITY = math.inf


@dataclass(frozen=True)
class DihedralElement:
    """Element (rotation, flip) of D_n: rotation in [0, n), flip in {0, 1}.

    Composition follows x = (r, f) acting as t^r s^f with s t s = t^-1.
    """

    rotation: int
    flip: bool
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.rotation < self.n:
            raise ValueError("rotation out of range")

    def mul(self, other: "DihedralElement") -> "DihedralElement":
        if self.n != other.n:
            raise ValueError("mixed group orders")
        if self.flip:
            rot = (self.rotation - other.rotation) % self.n
        else:
            rot = (self.rotation + other.rotation) % self.n
        return DihedralElement(rot, self.flip != other.flip, self.n)


def _finite_generators(n: int) -> list[DihedralElement]:
    e = DihedralElement(0, False, n)
    g = DihedralElement(0, True, n)
    h = DihedralElement(1 % n, True, n)
    return [e, g, e, h]


def dual_moments(n, K: int) -> list[int]:
    """c_k = #{length-k words over (1, g, 1, h) multiplying to 1}, k = 0..K."""
    if n == INFINITY or n is None:
        return _infinite_moments(K)
    n = int(n)
    if n < 1:
        raise ValueError(f"dual_moments requires n >= 1 or infinity, got {n}")
    return dual_moments_multiset(n, _finite_generators(n), K)


def dual_moments_multiset(n: int, gens: list[DihedralElement], K: int) -> list[int]:
    """Word counts for an arbitrary generating multiset (advanced entry point).

    Excluded from the classification tables; the embedding into the quantum
    permutation group pins the multiset to (1, g, 1, h).
    """
    weights: dict[tuple[int, bool], int] = {(0, False): 1}
    out = [1]
    for _ in range(K):
        nxt: dict[tuple[int, bool], int] = {}
        for (rot, flip), w in weights.items():
            x = DihedralElement(rot, flip, n)
            for gen in gens:
                y = x.mul(gen)
                key = (y.rotation, y.flip)
                nxt[key] = nxt.get(key, 0) + w
        weights = nxt
        out.append(weights.get((0, False), 0))
    return out


def _infinite_moments(K: int) -> list[int]:
    """Walk on the infinite dihedral group; words are alternating in g, h.

    States are reduced words encoded as (length, first letter); length-k
    words cannot leave the radius-K ball, so the computation is exact.
    """
    # state: (wordlen, first) with first in {'', 'g', 'h'}
    weights: dict[tuple[int, str], int] = {(0, ""): 1}
    out = [1]
    for _ in range(K):
        nxt: dict[tuple[int, str], int] = {}

        def add(state: tuple[int, str], w: int) -> None:
            nxt[state] = nxt.get(state, 0) + w

        for (length, first), w in weights.items():
            add((length, first), 2 * w)  # the two copies of the identity letter
            for letter in ("g", "h"):
                if length == 0:
                    add((1, letter), w)
                else:
                    # last letter alternates starting from `first`
                    last = first if length % 2 == 1 else ("h" if first == "g" else "g")
                    if last == letter:
                        new_len = length - 1
                        add((new_len, "" if new_len == 0 else first), w)
                    else:
                        add((length + 1, first), w)
        weights = nxt
        out.append(weights.get((0, ""), 0))
    return out
