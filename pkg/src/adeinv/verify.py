"""Named property suites behind the `verify` command.

Three suites: `measures` runs the measure-identity battery (root-of-unity
decompositions, the gamma decompositions, the ghost-series identities, the
subgroup formulas and the loop-count/measure equalities for every graph
family), `relations` runs the Fourier-conjugation and Pauli-embedding
checks, `fusion` runs the triple oracle for the rank-2 hyperoctahedral
object.  Every property reports pass/fail plus a numeric residual where the
check is floating-point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as all_perms

import numpy as np

from . import duals, fusion, graphs, groups, relcheck
from .exact import binomial
from .measures import (
    apply_alpha, lin_comb, measure_eq, mk_dn, mk_dnp, mk_epsn, mk_gamma,
    mk_lebesgue, moments,
)

__all__ = ["PropertyResult", "verify_suite", "SUITES"]

HALF = Fraction(1, 2)

SUITES = ("measures", "relations", "fusion", "all")


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    name: str
    passed: bool
    residual: float | None = None
    detail: str = ""


def _check(suite: str, name: str, ok: bool, residual: float | None = None, detail: str = "") -> PropertyResult:
    return PropertyResult(suite, name, bool(ok), residual, detail)


def verify_measures(K: int = 24) -> list[PropertyResult]:
    out = []
    s = "measures"

    ok = all(measure_eq(mk_dn(n) + mk_dnp(n), 2 * mk_dn(2 * n), K) for n in range(1, 9))
    out.append(_check(s, "d_n + d_n' = 2 d_2n (n = 1..8)", ok))

    gamma_forms = {
        0: mk_dnp(1),
        1: lin_comb([Fraction(3, 2), -HALF], [mk_dn(3), mk_dn(1)]),
        2: mk_dnp(2),
        4: mk_dn(1),
    }
    ok = all(measure_eq(mk_gamma(sv), m, K) for sv, m in gamma_forms.items())
    out.append(_check(s, "gamma_0 = d_1', gamma_1 = (3d_3-d_1)/2, gamma_2 = d_2', gamma_4 = d_1", ok))

    dn_in_gamma = {
        1: [(4, 1)],
        2: [(0, HALF), (4, HALF)],
        3: [(1, Fraction(2, 3)), (4, Fraction(1, 3))],
        4: [(0, Fraction(1, 4)), (2, HALF), (4, Fraction(1, 4))],
        6: [(0, Fraction(1, 6)), (1, Fraction(1, 3)), (3, Fraction(1, 3)), (4, Fraction(1, 6))],
    }
    ok = True
    for n, combo in dn_in_gamma.items():
        m = lin_comb([c for _, c in combo], [mk_gamma(sv) for sv, _ in combo])
        ok = ok and measure_eq(mk_dn(n), m, K)
    out.append(_check(s, "d_n in gamma_s for n = 1, 2, 3, 4, 6", ok))

    epsn_in_gamma = {
        1: [(2, HALF), (4, HALF)],
        2: [(0, Fraction(1, 4)), (2, HALF), (4, Fraction(1, 4))],
        3: [(1, Fraction(1, 3)), (2, HALF), (4, Fraction(1, 6))],
        4: [(0, Fraction(1, 8)), (2, Fraction(3, 4)), (4, Fraction(1, 8))],
        6: [(0, Fraction(1, 12)), (1, Fraction(1, 6)), (2, HALF), (3, Fraction(1, 6)), (4, Fraction(1, 12))],
    }
    ok = True
    for n, combo in epsn_in_gamma.items():
        m = lin_comb([c for _, c in combo], [mk_gamma(sv) for sv, _ in combo])
        ok = ok and measure_eq(mk_epsn(n), m, K)
    out.append(_check(s, "eps_n = (d_2'+d_n)/2 in gamma_s for n = 1, 2, 3, 4, 6", ok))

    out.append(_check(s, "alpha d_3 = gamma_1",
                      measure_eq(apply_alpha(mk_dn(3)), mk_gamma(1), K)))
    out.append(_check(s, "alpha d_4 = (gamma_0+gamma_2)/2",
                      measure_eq(apply_alpha(mk_dn(4)),
                                 lin_comb([HALF, HALF], [mk_gamma(0), mk_gamma(2)]), K)))

    ok = True
    for entry in groups.subgroup_catalog():
        g = entry.group()
        direct = moments(groups.group_circular(g), K)
        formula = moments(entry.epsilon, K)
        ok = ok and direct == formula == groups.group_moments(g, K)
    out.append(_check(s, "subgroup formulas: epsilon moments = fixed-point moments (10 subgroups)", ok))

    ok = True
    K12 = 12
    for n in range(1, 9):
        ok = ok and graphs.loop_counts(graphs.atilde(2 * n - 1), K12) == [
            int(c) for c in moments(mk_dn(n), K12)]
    for n in range(2, 9):
        m = lin_comb([HALF, HALF], [mk_dnp(1), mk_dn(n)])
        ok = ok and graphs.loop_counts(graphs.dtilde(n + 2), K12) == [int(c) for c in moments(m, K12)]
    for label, m in [
        ("Delta6", mk_epsn(1)),
        ("Delta7", mk_epsn(3)),
        ("X4", mk_epsn(4)),
    ]:
        ok = ok and graphs.loop_counts(graphs.catalog_graph(label), K12) == [int(c) for c in moments(m, K12)]
    for n, sval in ((6, 3), (7, 4), (8, 6)):
        m = apply_alpha(mk_dn(sval)) + lin_comb([HALF, -HALF], [mk_dn(sval - 1), mk_dn(sval)])
        ok = ok and graphs.loop_counts(graphs.etilde(n), K12) == [int(c) for c in moments(m, K12)]
    for fam, m in [
        ("Ainf", apply_alpha(mk_lebesgue())),
        ("Apminf", mk_lebesgue()),
        ("Dinf", lin_comb([HALF, HALF], [mk_dnp(1), mk_lebesgue()])),
    ]:
        ok = ok and graphs.loop_counts(graphs.truncated_infinite(fam, K12), K12) == [
            int(c) for c in moments(m, K12)]
    out.append(_check(s, "loop counts = measure moments for every graph family (K = 12)", ok))

    ghosts_ok = (
        graphs.loop_counts(graphs.delta6(), 16) == [(4**k + 2**k) // 2 for k in range(17)]
        and graphs.loop_counts(graphs.delta7(), 4) == [1, 2, 5, 15, 51]
        and graphs.loop_counts(graphs.x4(), 16) == [1] + [(6 * 2**k + 4**k) // 8 for k in range(1, 17)]
    )
    out.append(_check(s, "ghost closed forms (Delta6, Delta7, X4)", ghosts_ok))
    return out


def verify_relations(seed: int = 42, samples: int = 100, tol: float = 1e-10) -> list[PropertyResult]:
    out = []
    s = "relations"
    perms = [tuple(p) for p in all_perms(range(4))]

    images = {}
    ok = True
    for p in perms:
        r = relcheck.fourier_conjugate(p)
        images[p] = tuple(tuple(row) for row in r)
        rep = relcheck.check_so3m1_scalar(r)
        ok = ok and rep.passed
    out.append(_check(s, f"{len(perms)}/24 permutations: block form + scalar relations pass", ok and len(perms) == 24))

    hom = all(
        images[groups.compose(p, q)]
        == tuple(tuple(sum(Fraction(images[p][i][k]) * Fraction(images[q][k][j]) for k in range(3))
                       for j in range(3)) for i in range(3))
        for p in perms for q in perms
    )
    inj = len(set(images.values())) == 24
    out.append(_check(s, "p -> R is an injective homomorphism (576 products)", hom and inj))

    rng = np.random.default_rng(seed)
    worst = 0.0
    passed = 0
    per_relation = dict.fromkeys(relcheck.RELATIONS, 0.0)
    for _ in range(samples):
        x = relcheck.random_special_orthogonal(rng)
        rep = relcheck.pauli_embed_check(x, tol=tol)
        worst = max(worst, rep.max_residual())
        passed += rep.passed
        for rel, resid in rep.residuals.items():
            per_relation[rel] = max(per_relation[rel], resid)
    out.append(_check(s, f"{passed}/{samples} Pauli samples pass (seed {seed})",
                      passed == samples, residual=worst))
    for rel in relcheck.RELATIONS:
        out.append(_check(s, f"pauli relation {rel}", per_relation[rel] <= tol,
                          residual=per_relation[rel]))
    return out


def verify_fusion(kmax: int = 12) -> list[PropertyResult]:
    out = []
    s = "fusion"
    labels = [fusion.ONE, fusion.D] + [fusion.V(k) for k in range(1, 13)]

    ok = True
    for a in labels:
        for b in labels:
            ab = fusion.tensor(a, b)
            for c in labels:
                left = fusion.tensor_vectors(ab, {c: 1})
                right = fusion.tensor_vectors({a: 1}, fusion.tensor(b, c))
                ok = ok and left == right
    out.append(_check(s, "associativity on the span of {1, d, V_1..V_12}", ok))

    ok = all(
        fusion.vector_dim(fusion.tensor(a, b)) == fusion.dim(a) * fusion.dim(b)
        for a in labels for b in labels
    )
    out.append(_check(s, "dimension is a homomorphism on all rules", ok))

    ok = all(fusion.tensor(a, a).get(fusion.ONE, 0) == 1 for a in labels)
    out.append(_check(s, "Frobenius reciprocity: one copy of 1 in a (x) a (self-dual labels)", ok))

    u = fusion.fundamental()
    walk = [fusion.trivial_multiplicity(u, k) for k in range(kmax + 1)]
    dinf = graphs.loop_counts(graphs.truncated_infinite("Dinf", kmax), kmax)
    meas = [int(c) for c in moments(
        lin_comb([HALF, HALF], [mk_dnp(1), mk_lebesgue()]), kmax)]
    closed = [1] + [binomial(2 * k, k) // 2 for k in range(1, kmax + 1)]
    ok = walk == dinf == meas == closed
    out.append(_check(s, f"triple oracle to k = {kmax}: fusion walk = D_inf loops = (d_1'+d)/2 moments", ok))

    ok = duals.dual_moments(duals.INFINITY, kmax) == [binomial(2 * k, k) for k in range(kmax + 1)]
    out.append(_check(s, "infinite dual = central binomials", ok))
    return out


def verify_suite(suite: str, seed: int = 42) -> list[PropertyResult]:
    if suite == "measures":
        return verify_measures()
    if suite == "relations":
        return verify_relations(seed=seed)
    if suite == "fusion":
        return verify_fusion()
    if suite == "all":
        return verify_measures() + verify_relations(seed=seed) + verify_fusion()
    raise ValueError(f"unknown suite: {suite!r} (expected one of {SUITES})")
