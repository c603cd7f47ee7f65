"""Fusion semiring with objects 1, d (group-like) and V_k (2-dimensional).

Rules: V_i (x) V_j = V_{i+j} + V_{|i-j|} for i != j, V_i (x) V_i = 1 + d +
V_{2i}, d (x) d = 1, d (x) V_i = V_i (x) d = V_i, and 1 is neutral.  The
trivial multiplicity of the k-th tensor power of the 4-dimensional object
1 + d + V_1 reproduces, independently, the loop counts of the D_inf diagram
and the moments of (d_1' + d)/2 -- the triple oracle for the rank-2
hyperoctahedral quantum group.

The finite quotients contribute only dimension metadata here: the algebras
A(k, e) have dimension 4k, and the block structures of the twisted S4 / A5
function algebras are 8 + 16 = 24 and 12 + 3*16 = 60.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "ONE",
    "D",
    "V",
    "FusionLabel",
    "FusionVector",
    "tensor",
    "tensor_vectors",
    "fundamental",
    "trivial_multiplicity",
    "dim",
    "vector_dim",
    "quotient_metadata",
    "QuotientRecord",
]

# labels: ("1",), ("d",), ("v", k)
FusionLabel = tuple
FusionVector = dict  # FusionLabel -> nonnegative multiplicity

ONE: FusionLabel = ("1",)
D: FusionLabel = ("d",)


def V(k: int) -> FusionLabel:
    if k < 1:
        raise ValueError(f"V-index must be >= 1, got {k}")
    return ("v", k)


def dim(a: FusionLabel) -> int:
    return 2 if a[0] == "v" else 1


def tensor(a: FusionLabel, b: FusionLabel) -> FusionVector:
    """Decompose a (x) b as a multiplicity vector."""
    if a[0] == "1":
        return {b: 1}
    if b[0] == "1":
        return {a: 1}
    if a[0] == "d" and b[0] == "d":
        return {ONE: 1}
    if a[0] == "d":
        return {b: 1}
    if b[0] == "d":
        return {a: 1}
    i, j = a[1], b[1]
    if i == j:
        return {ONE: 1, D: 1, V(2 * i): 1}
    return {V(i + j): 1, V(abs(i - j)): 1}


def tensor_vectors(u: FusionVector, v: FusionVector) -> FusionVector:
    """Bilinear extension of tensor to multiplicity vectors."""
    out: FusionVector = {}
    for a, ma in u.items():
        if not ma:
            continue
        for b, mb in v.items():
            if not mb:
                continue
            for c, mc in tensor(a, b).items():
                out[c] = out.get(c, 0) + ma * mb * mc
    return out


def vector_dim(u: FusionVector) -> int:
    return sum(m * dim(a) for a, m in u.items())


def fundamental() -> FusionVector:
    """The 4-dimensional object 1 + d + V_1.

    The decomposition is forced by dimension (1 + 1 + 2 = 4) and c_1 = 1,
    and validated by the triple oracle against the D_inf loop counts and the
    (d_1' + d)/2 moments.
    """
    return {ONE: 1, D: 1, V(1): 1}


def trivial_multiplicity(u: FusionVector, k: int) -> int:
    """Multiplicity of 1 in the k-th tensor power of u."""
    if k < 0:
        raise ValueError("tensor power must be nonnegative")
    acc: FusionVector = {ONE: 1}
    for _ in range(k):
        acc = tensor_vectors(acc, u)
    return acc.get(ONE, 0)


@dataclass(frozen=True)
class QuotientRecord:
    name: str
    label: str
    dimension: int
    blocks: tuple[tuple[int, int], ...] | None  # (block dim, multiplicity)
    consistent: bool


def _block_record(name: str, label: str, blocks: tuple[tuple[int, int], ...],
                  expected_dim: int) -> QuotientRecord:
    total = sum(b * b * m for b, m in blocks)
    return QuotientRecord(name, label, expected_dim, blocks, total == expected_dim)


def quotient_metadata(kmax: int = 8) -> list[QuotientRecord]:
    """Dimension facts for the finite quotients, as static catalog records."""
    out: list[QuotientRecord] = []
    for k in range(1, kmax + 1):
        if k == 1:
            plus_label = minus_label = "C[V]"
        elif k == 2:
            plus_label, minus_label = "D4", "DC2^tau"
        else:
            plus_label, minus_label = f"D{2 * k}^tau", f"DC{k}^tau"
        out.append(QuotientRecord(f"A({k},1)", plus_label, 4 * k, None, True))
        out.append(QuotientRecord(f"A({k},-1)", minus_label, 4 * k, None, True))
    out.append(_block_record("S4^tau", "S4^tau", ((1, 8), (4, 1)), 24))
    out.append(_block_record("A5^tau", "A5^tau", ((1, 12), (4, 3)), 60))
    return out
