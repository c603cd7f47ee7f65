"""Exact circular measures on the unit circle and their spectral pushforwards.

A circular measure is a rational combination of Galois-orbit bases: ``u_d``,
the uniform probability measure on the primitive d-th roots of unity, and the
Lebesgue (uniform) measure on the whole circle.  Each base carries a density
polynomial in the variable x = (q + conj(q))^2, so that weighting by the
fundamental density alpha(q) = 2*Im(q)^2 = 2 - x/2 stays exact: a density
only shifts moment indices.

Moments are c_k = integral of (q + conj(q))^(2k); for an orbit base they
reduce to Ramanujan sums, for the Lebesgue base to central binomials.  All
values are exact Fractions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import MomentSequence, binomial, euler_phi, ramanujan_sum

__all__ = [
    "Orbit",
    "Lebesgue",
    "LEB",
    "CircularMeasure",
    "SpectralMeasure",
    "InternalInconsistencyError",
    "measure",
    "zero_measure",
    "mk_un",
    "mk_dn",
    "mk_dnp",
    "mk_en",
    "mk_gamma",
    "mk_lebesgue",
    "mk_epsn",
    "lin_comb",
    "apply_alpha",
    "moments",
    "measure_eq",
    "pushforward",
]


class InternalInconsistencyError(AssertionError):
    """Canonical-form equality and moment equality disagreed: a bug."""


@dataclass(frozen=True, order=True)
class Orbit:
    """Base u_d: uniform probability measure on primitive d-th roots of 1.

    u_1 is the single atom q = 1 and u_2 the single atom q = -1.
    """

    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"orbit order must be >= 1, got {self.d}")


@dataclass(frozen=True, order=True)
class Lebesgue:
    """Base d: uniform probability measure on the whole unit circle."""


LEB = Lebesgue()

Base = Orbit | Lebesgue

Density = tuple[Fraction, ...]

ONE_POLY: Density = (Fraction(1),)

# density of alpha(q) = 2*Im(q)^2 in the variable x = (q+conj q)^2
ALPHA_POLY: Density = (Fraction(2), Fraction(-1, 2))


def _trim(coeffs) -> Density:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_add(p: Density, q: Density) -> Density:
    n = max(len(p), len(q))
    return _trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _poly_mul(p: Density, q: Density) -> Density:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _trim(out)


def _poly_scale(c: Fraction, p: Density) -> Density:
    return _trim([c * a for a in p])


def _base_key(b: Base):
    return (0, b.d) if isinstance(b, Orbit) else (1, 0)


@dataclass(frozen=True)
class CircularMeasure:
    """Canonical list of (base, density) terms; possibly signed."""

    terms: tuple[tuple[Base, Density], ...]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "CircularMeasure") -> "CircularMeasure":
        return measure(list(self.terms) + list(other.terms))

    def __sub__(self, other: "CircularMeasure") -> "CircularMeasure":
        return self + (-1) * other

    def __rmul__(self, c) -> "CircularMeasure":
        c = Fraction(c)
        return measure([(b, _poly_scale(c, p)) for b, p in self.terms])

    def is_zero(self) -> bool:
        return not self.terms

    def density_free(self) -> bool:
        """True when every density is a constant polynomial."""
        return all(len(p) <= 1 for _, p in self.terms)

    def mass(self) -> Fraction:
        return moments(self, 0)[0]

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        out = []
        for b, p in self.terms:
            base = {"type": "orbit", "d": b.d} if isinstance(b, Orbit) else {"type": "lebesgue"}
            out.append({"base": base, "density": [str(c) for c in p]})
        return {"terms": out}

    @staticmethod
    def from_json(obj: dict) -> "CircularMeasure":
        terms = []
        for t in obj["terms"]:
            b = t["base"]
            base: Base = Orbit(int(b["d"])) if b["type"] == "orbit" else LEB
            terms.append((base, tuple(Fraction(c) for c in t["density"])))
        return measure(terms)

    def render(self) -> str:
        """Canonical rendering in orbit notation, e.g. '1/2*u_3 + 1/2*u_6'."""
        if not self.terms:
            return "0"
        parts = []
        for b, p in self.terms:
            name = f"u_{b.d}" if isinstance(b, Orbit) else "leb"
            if p == ONE_POLY:
                parts.append(name)
            elif len(p) == 1:
                parts.append(f"{p[0]}*{name}")
            else:
                poly = " + ".join(
                    str(c) if j == 0 else (f"{c}*x" if j == 1 else f"{c}*x^{j}")
                    for j, c in enumerate(p) if c
                )
                parts.append(f"({poly})*{name}")
        return " + ".join(parts)


def measure(terms) -> CircularMeasure:
    """Canonicalize: merge equal bases, drop zero densities, sort."""
    merged: dict[Base, Density] = {}
    for b, p in terms:
        p = _trim(p)
        if not p:
            continue
        merged[b] = _poly_add(merged.get(b, ()), p) if b in merged else p
    items = [(b, p) for b, p in merged.items() if p]
    items.sort(key=lambda t: _base_key(t[0]))
    return CircularMeasure(tuple(items))


def zero_measure() -> CircularMeasure:
    return CircularMeasure(())


# -- constructors ------------------------------------------------------


def mk_un(d: int) -> CircularMeasure:
    """The orbit probability measure u_d itself."""
    return measure([(Orbit(d), ONE_POLY)])


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mk_dn(n: int) -> CircularMeasure:
    """d_n: uniform probability measure on the 2n-th roots of unity."""
    if n < 1:
        raise ValueError(f"d_n requires n >= 1, got {n}")
    return measure([(Orbit(d), (Fraction(euler_phi(d), 2 * n),)) for d in _divisors(2 * n)])


def mk_dnp(n: int) -> CircularMeasure:
    """d_n': uniform probability measure on the odd 4n-th roots of unity."""
    if n < 1:
        raise ValueError(f"d_n' requires n >= 1, got {n}")
    terms = [
        (Orbit(d), (Fraction(euler_phi(d), 2 * n),))
        for d in _divisors(4 * n)
        if (2 * n) % d != 0
    ]
    return measure(terms)


def mk_en(n: int) -> CircularMeasure:
    """e_n: d_1' for even n, d_2' for odd n."""
    if n < 1:
        raise ValueError(f"e_n requires n >= 1, got {n}")
    return mk_dnp(1) if n % 2 == 0 else mk_dnp(2)


_GAMMA_SUPPORT = {
    0: ((4, 1),),
    1: ((3, Fraction(1, 2)), (6, Fraction(1, 2))),
    2: ((8, 1),),
    3: ((12, 1),),
    4: ((1, Fraction(1, 2)), (2, Fraction(1, 2))),
}


def mk_gamma(s: int) -> CircularMeasure:
    """gamma_s: uniform probability measure on {q : (q+conj q)^2 = s}."""
    if s not in _GAMMA_SUPPORT:
        raise ValueError(f"gamma_s is only defined for integer s in 0..4, got {s}")
    return measure([(Orbit(d), (Fraction(w),)) for d, w in _GAMMA_SUPPORT[s]])


def mk_lebesgue() -> CircularMeasure:
    """d: the uniform probability measure on the whole circle."""
    return measure([(LEB, ONE_POLY)])


def mk_epsn(n: int) -> CircularMeasure:
    """eps_n = (d_2' + d_n)/2, the ghost series measures."""
    return lin_comb([Fraction(1, 2), Fraction(1, 2)], [mk_dnp(2), mk_dn(n)])


# -- operations --------------------------------------------------------


def lin_comb(coeffs, ms) -> CircularMeasure:
    """Term-wise rational combination of measures, canonicalized."""
    if len(coeffs) != len(ms):
        raise ValueError("lin_comb requires equal-length coefficient and measure lists")
    terms = []
    for c, m in zip(coeffs, ms):
        c = Fraction(c)
        for b, p in m.terms:
            terms.append((b, _poly_scale(c, p)))
    return measure(terms)


def apply_alpha(m: CircularMeasure) -> CircularMeasure:
    """Multiply every density by alpha = 2 - x/2."""
    return measure([(b, _poly_mul(p, ALPHA_POLY)) for b, p in m.terms])


@lru_cache(maxsize=None)
def _orbit_moment(d: int, k: int) -> Fraction:
    """k-th power moment of u_d: (1/phi(d)) sum_t C(2k,t) c_d(2k-2t)."""
    total = sum(binomial(2 * k, t) * ramanujan_sum(d, 2 * k - 2 * t) for t in range(2 * k + 1))
    return Fraction(total, euler_phi(d))


def _base_moment(b: Base, k: int) -> Fraction:
    if isinstance(b, Orbit):
        return _orbit_moment(b.d, k)
    return Fraction(binomial(2 * k, k))


def moments(m: CircularMeasure, K: int) -> MomentSequence:
    """c_k = integral of (q+conj q)^(2k) dm for k = 0..K, exact."""
    out = []
    for k in range(K + 1):
        c = Fraction(0)
        for b, p in m.terms:
            for j, coeff in enumerate(p):
                if coeff:
                    c += coeff * _base_moment(b, k + j)
        out.append(c)
    return out


def measure_eq(m1: CircularMeasure, m2: CircularMeasure, K: int = 24) -> bool:
    """Exact moment equality up to order K.

    When both measures are density-free the canonical forms are compared as
    well; the two tests must agree (at the default depth K = 24 they separate
    every measure in scope), otherwise an InternalInconsistencyError signals
    an implementation bug.
    """
    by_moments = moments(m1, K) == moments(m2, K)
    if m1.density_free() and m2.density_free():
        by_form = m1.terms == m2.terms
        if by_form != by_moments:
            raise InternalInconsistencyError(
                f"canonical-form equality ({by_form}) and moment equality "
                f"({by_moments}) disagree at K={K} for {m1.render()} vs {m2.render()}"
            )
    return by_moments


# -- pushforward to the spectral side ----------------------------------

# orbits whose pushforward is a single integer atom: 4cos^2(2*pi*a/d)
_INTEGER_ORBIT_VALUE = {1: 4, 2: 4, 3: 1, 4: 0, 6: 1, 8: 2, 12: 3}

AtomKey = int | tuple[int, str]


@dataclass(frozen=True)
class SpectralMeasure:
    """Atomic measure on [0,4] plus an optional continuous Lebesgue part.

    Atom keys are exact integers s, or (d, tag) descriptors for orbits whose
    pushforward values 4cos^2(2*pi*a/d) are irrational.
    """

    atoms: tuple[tuple[AtomKey, Fraction], ...]
    continuous: Fraction

    def atom_dict(self) -> dict[AtomKey, Fraction]:
        return dict(self.atoms)

    def total_mass(self) -> Fraction:
        return sum((w for _, w in self.atoms), Fraction(0)) + self.continuous


def pushforward(m: CircularMeasure) -> SpectralMeasure:
    """Pushforward along q -> (q+conj q)^2; rejects density-carrying input."""
    if not m.density_free():
        raise ValueError("pushforward of density-carrying measures is not supported")
    atoms: dict[AtomKey, Fraction] = {}
    continuous = Fraction(0)
    for b, p in m.terms:
        w = p[0]
        if isinstance(b, Lebesgue):
            continuous += w
            continue
        if b.d in _INTEGER_ORBIT_VALUE:
            key: AtomKey = _INTEGER_ORBIT_VALUE[b.d]
        else:
            key = (b.d, f"4cos^2(2pi/{b.d}) orbit-value")
        atoms[key] = atoms.get(key, Fraction(0)) + w
    items = [(k, v) for k, v in atoms.items() if v != 0]
    items.sort(key=lambda t: (0, t[0], "") if isinstance(t[0], int) else (1,) + t[0])
    return SpectralMeasure(tuple(items), continuous)


def measure_json_str(m: CircularMeasure) -> str:
    return json.dumps(m.to_json(), sort_keys=True)
