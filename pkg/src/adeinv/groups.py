"""Finite permutation groups on few points and their algebraic invariants.

A permutation is a tuple of images on 0-indexed points; rendering uses
1-indexed cycle notation.  The invariants of a subgroup G of the symmetric
group come from its fixed-point profile (m_s = number of elements with s
fixed points):

    c_k      = (1/|G|) sum_s m_s s^k
    epsilon  = (1/|G|) sum_s m_s gamma_s      (degree 4 only)

The catalog lists the ten designated subgroups of S_4, pinned to the
embeddings whose profiles the classification tables use, plus the excluded
fixed-point-free Klein embedding D_2 (same invariants as Z_4).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exact import MomentSequence
from .measures import CircularMeasure, lin_comb, mk_dn, mk_dnp, mk_gamma

__all__ = [
    "Permutation",
    "PermGroup",
    "SubgroupCatalogEntry",
    "identity",
    "compose",
    "inverse",
    "parse_cycles",
    "to_cycles",
    "closure",
    "fixed_profile",
    "orbit_count",
    "group_moments",
    "group_circular",
    "subgroup_catalog",
    "group_from_json",
]

Permutation = tuple[int, ...]

MAX_DEGREE = 8  # desk-scale guard against runaway generation


def identity(n: int) -> Permutation:
    return tuple(range(n))


def _check(p) -> Permutation:
    p = tuple(int(i) for i in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p}")
    return p


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: (p*q)(i) = p(q(i))."""
    if len(p) != len(q):
        raise ValueError("degree mismatch")
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def parse_cycles(s: str, degree: int) -> Permutation:
    """Parse 1-indexed cycle notation like '(1 2)(3 4)'; 'e' is the identity."""
    s = s.strip()
    if s in ("e", "()", ""):
        return identity(degree)
    if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", s):
        raise ValueError(f"malformed cycle notation: {s!r}")
    images = list(range(degree))
    for cyc in re.findall(r"\(([^()]*)\)", s):
        pts = [int(t) - 1 for t in re.split(r"[\s,]+", cyc.strip())]
        if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
            raise ValueError(f"cycle out of range or repeated point: ({cyc})")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return _check(images)


def to_cycles(p: Permutation) -> str:
    """Render in 1-indexed cycle notation; identity renders as 'e'."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) if out else "e"


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: frozenset[Permutation]

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> list[Permutation]:
        return sorted(self.elements)


def closure(generators, degree: int | None = None) -> PermGroup:
    """Generated subgroup, by breadth-first multiplication until closed."""
    gens = [_check(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("need generators or an explicit degree")
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise ValueError("degree mismatch among generators")
    if degree > MAX_DEGREE:
        raise ValueError(f"degree {degree} exceeds cap {MAX_DEGREE}")
    elements = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
        frontier = nxt
    return PermGroup(degree, frozenset(elements))


def fixed_profile(g: PermGroup) -> list[int]:
    """m_s = number of elements with exactly s fixed points, s = 0..degree."""
    m = [0] * (g.degree + 1)
    for p in g.elements:
        m[sum(1 for i, j in enumerate(p) if i == j)] += 1
    return m


def orbit_count(g: PermGroup) -> int:
    """Number of orbits on points (Burnside sanity value for c_1)."""
    seen = set()
    orbits = 0
    for i in range(g.degree):
        if i in seen:
            continue
        orbits += 1
        stack = [i]
        seen.add(i)
        while stack:
            x = stack.pop()
            for p in g.elements:
                if p[x] not in seen:
                    seen.add(p[x])
                    stack.append(p[x])
    return orbits


def group_moments(g: PermGroup, K: int) -> MomentSequence:
    """c_k = (1/|G|) sum_s m_s s^k; valid for any degree."""
    m = fixed_profile(g)
    order = len(g)
    return [
        sum(Fraction(ms * s**k, order) for s, ms in enumerate(m) if ms)
        for k in range(K + 1)
    ]


def group_circular(g: PermGroup) -> CircularMeasure:
    """(1/|G|) sum_s m_s gamma_s; defined for degree 4 only."""
    if g.degree != 4:
        raise ValueError("circular measure defined only for spectral support in [0,4]")
    m = fixed_profile(g)
    order = len(g)
    coeffs = [Fraction(m[s], order) for s in range(5)]
    return lin_comb(coeffs, [mk_gamma(s) for s in range(5)])


@dataclass(frozen=True)
class SubgroupCatalogEntry:
    name: str
    generator_cycles: tuple[str, ...]
    expected_profile: tuple[int, ...]  # m_0..m_4
    epsilon: CircularMeasure
    epsilon_symbol: str
    excluded: bool = False
    note: str = ""

    @property
    def generators(self) -> list[Permutation]:
        return [parse_cycles(c, 4) for c in self.generator_cycles]

    def group(self) -> PermGroup:
        return closure(self.generators, degree=4)


def _half(a: CircularMeasure, b: CircularMeasure) -> CircularMeasure:
    return lin_comb([Fraction(1, 2), Fraction(1, 2)], [a, b])


def _catalog() -> list[SubgroupCatalogEntry]:
    d1, d2, d3, d4 = mk_dn(1), mk_dn(2), mk_dn(3), mk_dn(4)
    d1p, d2p = mk_dnp(1), mk_dnp(2)
    q = Fraction(1, 4)
    a4_eps = lin_comb([1, q, -q], [d3, d1p, d1])
    s4_eps = lin_comb([Fraction(1, 2), Fraction(1, 2), q, -q], [d3, d4, d1p, d1])
    return [
        SubgroupCatalogEntry("Z1", ("e",), (0, 0, 0, 0, 1), d1, "d_1"),
        SubgroupCatalogEntry("Z2", ("(1 2)(3 4)",), (1, 0, 0, 0, 1), d2, "d_2"),
        SubgroupCatalogEntry("Z3", ("(1 2 3)",), (0, 2, 0, 0, 1), d3, "d_3"),
        SubgroupCatalogEntry("V", ("(1 2)", "(3 4)"), (1, 0, 2, 0, 1), d4, "d_4"),
        SubgroupCatalogEntry("D1", ("(1 2)",), (0, 0, 1, 0, 1), _half(d2p, d1), "(d_2'+d_1)/2"),
        SubgroupCatalogEntry("Z4", ("(1 2 3 4)",), (3, 0, 0, 0, 1), _half(d1p, d2), "(d_1'+d_2)/2"),
        SubgroupCatalogEntry("S3", ("(1 2)", "(1 2 3)"), (0, 2, 3, 0, 1), _half(d2p, d3), "(d_2'+d_3)/2"),
        SubgroupCatalogEntry("D4", ("(1 2 3 4)", "(1 3)"), (5, 0, 2, 0, 1), _half(d1p, d4), "(d_1'+d_4)/2"),
        SubgroupCatalogEntry("A4", ("(1 2 3)", "(1 2)(3 4)"), (3, 8, 0, 0, 1), a4_eps, "d_3+(d_1'-d_1)/4"),
        SubgroupCatalogEntry("S4", ("(1 2)", "(1 2 3 4)"), (9, 8, 6, 0, 1), s4_eps, "(d_3+d_4)/2+(d_1'-d_1)/4"),
        SubgroupCatalogEntry(
            "D2",
            ("(1 2)(3 4)", "(1 3)(2 4)"),
            (3, 0, 0, 0, 1),
            _half(d1p, d2),
            "(d_1'+d_2)/2",
            excluded=True,
            note="fixed-point-free Klein embedding; alias of Z4 invariants, excluded from tables",
        ),
    ]


def subgroup_catalog(include_excluded: bool = False) -> list[SubgroupCatalogEntry]:
    """The ten designated subgroup embeddings of S_4 (plus D_2 on request)."""
    entries = _catalog()
    if include_excluded:
        return entries
    return [e for e in entries if not e.excluded]


def group_from_json(obj) -> PermGroup:
    """Build a group from {'degree': n, 'generators': [[images...], ...]}."""
    degree = int(obj["degree"])
    gens = [tuple(int(i) for i in g) for g in obj["generators"]]
    for g in gens:
        if len(g) != degree:
            raise ValueError("generator length does not match degree")
    return closure(gens, degree=degree) if gens else closure([], degree=degree)
