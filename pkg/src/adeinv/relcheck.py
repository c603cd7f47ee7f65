"""Matrix-level verification: magic matrices, the Fourier conjugation of
permutation matrices, the skew orthogonal-rotation relations on scalars, and
the Pauli-tensor embedding checked numerically.

The Fourier conjugation sends a 4x4 permutation matrix P to (1/4) M P M,
with M the +-1 character matrix of the Klein four-group; the result is
exactly block-diagonal diag(1, R) with R a signed 3x3 permutation matrix of
quantum determinant 1 (the quantum determinant of a scalar matrix being the
sign-free permanent-style sum over S_3).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _s3perms

import numpy as np

from .groups import Permutation

__all__ = [
    "RelationReport",
    "FOURIER_M",
    "is_magic",
    "perm_matrix",
    "fourier_conjugate",
    "quantum_determinant_scalar",
    "check_so3m1_scalar",
    "TAU",
    "pauli_matrices",
    "pauli_embed_check",
    "random_special_orthogonal",
]

RationalMatrix = list[list[Fraction]]

# relation identifiers, in reporting order
RELATIONS = (
    "orthogonality",
    "row-anticommutation",
    "column-anticommutation",
    "cross-commutation",
    "quantum-determinant",
)


@dataclass(frozen=True)
class RelationReport:
    residuals: dict[str, float]
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(r <= self.tolerance for r in self.residuals.values())

    def max_residual(self) -> float:
        return max(self.residuals.values())


def is_magic(m) -> bool:
    """True iff every entry is 0 or 1 and all rows and columns sum to 1."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("is_magic expects a square matrix")
    for row in m:
        if any(x not in (0, 1) for x in row):
            return False
    return (
        all(sum(row) == 1 for row in m)
        and all(sum(m[i][j] for i in range(n)) == 1 for j in range(n))
    )


# rows: 1, eps_1, eps_2, eps_3 (the Klein four-group characters)
FOURIER_M = (
    (1, 1, 1, 1),
    (1, -1, -1, 1),
    (1, -1, 1, -1),
    (1, 1, -1, -1),
)


def perm_matrix(p: Permutation) -> list[list[int]]:
    """Matrix with P e_i = e_{p(i)}, so that p -> P is a homomorphism."""
    n = len(p)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        out[p[i]][i] = 1
    return out


def _mat_mul(a, b):
    n, m, r = len(a), len(b[0]), len(b)
    return [[sum(a[i][k] * b[k][j] for k in range(r)) for j in range(m)] for i in range(n)]


def fourier_conjugate(p: Permutation) -> list[list[Fraction]]:
    """(1/4) M P M for the permutation matrix P of p, reduced to its 3x3 block.

    The full product is exactly diag(1, R); a violation of the block
    structure would signal an implementation bug and raises.
    """
    if len(p) != 4:
        raise ValueError("fourier_conjugate expects a permutation of 4 points")
    mpm = _mat_mul(_mat_mul(FOURIER_M, perm_matrix(p)), FOURIER_M)
    q = [[Fraction(x, 4) for x in row] for row in mpm]
    if q[0][0] != 1 or any(q[0][j] != 0 for j in range(1, 4)) or any(q[i][0] != 0 for i in range(1, 4)):
        raise AssertionError(f"block structure violated for {p}: {q}")
    return [row[1:] for row in q[1:]]


def quantum_determinant_scalar(r) -> Fraction:
    """Sign-free sum over S_3 of r[0][s(0)] r[1][s(1)] r[2][s(2)]."""
    total = Fraction(0)
    for s in _s3perms(range(3)):
        total += Fraction(r[0][s[0]]) * Fraction(r[1][s[1]]) * Fraction(r[2][s[2]])
    return total


def check_so3m1_scalar(r) -> RelationReport:
    """Evaluate the skew rotation-group relations on a scalar 3x3 matrix.

    For scalars the anticommutation relations degenerate to 'products of two
    distinct entries in one row (or column) vanish', and cross-commutation is
    vacuous.  Everything is exact rational arithmetic; residuals are reported
    as floats (0 when a relation holds).
    """
    if len(r) != 3 or any(len(row) != 3 for row in r):
        raise ValueError("check_so3m1_scalar expects a 3x3 matrix")
    m = [[Fraction(x) for x in row] for row in r]
    mt = [[m[j][i] for j in range(3)] for i in range(3)]
    eye = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]

    def dev(a, b):
        return max(abs(a[i][j] - b[i][j]) for i in range(3) for j in range(3))

    orth = max(dev(_mat_mul(m, mt), eye), dev(_mat_mul(mt, m), eye))
    row_anti = max(
        (abs(m[i][j] * m[i][k]) for i in range(3) for j in range(3) for k in range(3) if j != k),
        default=Fraction(0),
    )
    col_anti = max(
        (abs(m[j][i] * m[k][i]) for i in range(3) for j in range(3) for k in range(3) if j != k),
        default=Fraction(0),
    )
    qdet = abs(quantum_determinant_scalar(m) - 1)
    residuals = {
        "orthogonality": float(orth),
        "row-anticommutation": float(row_anti),
        "column-anticommutation": float(col_anti),
        "cross-commutation": 0.0,  # scalars commute
        "quantum-determinant": float(qdet),
    }
    return RelationReport(residuals, tolerance=0.0)


# -- Pauli-tensor embedding ---------------------------------------------

# tau_1 = diag(i, -i), tau_2 = [[0, 1], [-1, 0]], tau_3 = tau_2 tau_1;
# as exact Gaussian-integer matrices (re, im) for the identity checks
TAU_EXACT = (
    (((0, 1), (0, 0)), ((0, 0), (0, -1))),
    (((0, 0), (1, 0)), ((-1, 0), (0, 0))),
    (((0, 0), (0, -1)), ((0, -1), (0, 0))),
)

TAU = tuple(
    np.array([[complex(re, im) for re, im in row] for row in t], dtype=complex)
    for t in TAU_EXACT
)


def pauli_matrices() -> tuple[np.ndarray, ...]:
    return TAU


def _max_norm(a: np.ndarray) -> float:
    return float(np.max(np.abs(a)))


def random_special_orthogonal(rng: np.random.Generator) -> np.ndarray:
    """Orthonormalize a random 3x3 matrix; flip one column if det < 0."""
    while True:
        q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
        if abs(abs(np.linalg.det(q)) - 1.0) < 1e-9:
            break
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def pauli_embed_check(x, tol: float = 1e-10) -> RelationReport:
    """Check the relations on A_ij = x_ij (tau_i (x) tau_j) for x in SO(3).

    Raises ValueError (invalid input, not relation failure) unless x is
    orthogonal with determinant 1 within tol.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (3, 3):
        raise ValueError("pauli_embed_check expects a 3x3 real matrix")
    if _max_norm(x @ x.T - np.eye(3)) > max(tol, 1e-9):
        raise ValueError("input is not orthogonal within tolerance")
    if abs(np.linalg.det(x) - 1.0) > max(tol, 1e-9):
        raise ValueError("input does not have determinant 1 within tolerance")

    a = [[x[i, j] * np.kron(TAU[i], TAU[j]) for j in range(3)] for i in range(3)]
    eye4 = np.eye(4, dtype=complex)

    orth = 0.0
    for i in range(3):
        for j in range(3):
            d = eye4 if i == j else 0.0
            orth = max(orth, _max_norm(sum(a[i][k] @ a[j][k] for k in range(3)) - d))
            orth = max(orth, _max_norm(sum(a[k][i] @ a[k][j] for k in range(3)) - d))
    row_anti = max(
        _max_norm(a[i][j] @ a[i][k] + a[i][k] @ a[i][j])
        for i in range(3) for j in range(3) for k in range(3) if j != k
    )
    col_anti = max(
        _max_norm(a[j][i] @ a[k][i] + a[k][i] @ a[j][i])
        for i in range(3) for j in range(3) for k in range(3) if j != k
    )
    cross = max(
        _max_norm(a[i][j] @ a[k][l] - a[k][l] @ a[i][j])
        for i in range(3) for j in range(3) for k in range(3) for l in range(3)
        if i != k and j != l
    )
    qdet = _max_norm(
        sum(
            a[0][s[0]] @ a[1][s[1]] @ a[2][s[2]]
            for s in _s3perms(range(3))
        )
        - eye4
    )
    residuals = {
        "orthogonality": orth,
        "row-anticommutation": row_anti,
        "column-anticommutation": col_anti,
        "cross-commutation": cross,
        "quantum-determinant": qdet,
    }
    return RelationReport(residuals, tolerance=tol)
