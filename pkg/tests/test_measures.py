from fractions import Fraction

import pytest

from adeinv.measures import (
    LEB,
    CircularMeasure,
    InternalInconsistencyError,
    Orbit,
    apply_alpha,
    lin_comb,
    measure,
    measure_eq,
    mk_dn,
    mk_dnp,
    mk_en,
    mk_epsn,
    mk_gamma,
    mk_lebesgue,
    mk_un,
    moments,
    pushforward,
)
from conftest import atom_moments_float, dyck_paths

H = Fraction(1, 2)


def orbit_weights(m):
    return {b.d: p[0] for b, p in m.terms if isinstance(b, Orbit)}


def test_mk_dn_examples():
    assert orbit_weights(mk_dn(1)) == {1: H, 2: H}
    assert orbit_weights(mk_dn(3)) == {1: Fraction(1, 6), 2: Fraction(1, 6),
                                       3: Fraction(1, 3), 6: Fraction(1, 3)}
    assert orbit_weights(mk_dn(2)) == {1: Fraction(1, 4), 2: Fraction(1, 4), 4: H}


def test_mk_dnp_examples():
    assert orbit_weights(mk_dnp(1)) == {4: Fraction(1)}
    assert orbit_weights(mk_dnp(2)) == {8: Fraction(1)}
    assert orbit_weights(mk_dnp(3)) == {4: Fraction(1, 3), 12: Fraction(2, 3)}


def test_mk_en():
    assert mk_en(2) == mk_dnp(1) == mk_un(4)
    assert mk_en(3) == mk_dnp(2) == mk_un(8)
    assert mk_en(4) == mk_un(4)


def test_mk_gamma():
    assert mk_gamma(4) == measure([(Orbit(1), (H,)), (Orbit(2), (H,))])
    assert mk_gamma(0) == mk_un(4)
    assert measure_eq(mk_gamma(1), lin_comb([Fraction(3, 2), -H], [mk_dn(3), mk_dn(1)]))
    with pytest.raises(ValueError):
        mk_gamma(5)


def test_probability_normalization():
    for m in [mk_dn(5), mk_dnp(4), mk_en(7), mk_gamma(3), mk_lebesgue(), mk_epsn(6)]:
        assert moments(m, 0)[0] == 1
        assert all(c >= 0 for c in moments(m, 12))


def test_apply_alpha_identities():
    assert measure_eq(apply_alpha(mk_dn(3)), mk_gamma(1), 24)
    assert measure_eq(apply_alpha(mk_dn(4)), lin_comb([H, H], [mk_gamma(0), mk_gamma(2)]), 24)


def test_alpha_lebesgue_is_catalan():
    got = moments(apply_alpha(mk_lebesgue()), 8)
    assert got == dyck_paths(8)
    assert got[:5] == [1, 1, 2, 5, 14]


def test_lin_comb_examples():
    assert lin_comb([1, 0], [mk_dn(1), mk_dn(2)]) == mk_dn(1)
    z = lin_comb([H, H, -H, -H], [mk_dnp(1), mk_dn(1), mk_en(2), mk_dn(1)])
    assert z.is_zero()
    assert lin_comb([Fraction(3, 2), -H], [mk_dn(3), mk_dn(1)]) == measure(
        [(Orbit(3), (H,)), (Orbit(6), (H,))])
    with pytest.raises(ValueError):
        lin_comb([1], [mk_dn(1), mk_dn(2)])


def test_moments_examples():
    assert moments(mk_dn(2), 3) == [1, 2, 8, 32]
    assert moments(mk_un(4), 5) == [1, 0, 0, 0, 0, 0]
    mixed = lin_comb([H, H], [mk_dnp(1), mk_lebesgue()])
    assert moments(mixed, 3) == [1, 1, 3, 10]


def test_measure_eq_examples():
    for n in range(1, 9):
        assert measure_eq(mk_dn(n) + mk_dnp(n), 2 * mk_dn(2 * n), 24)
    assert not measure_eq(mk_dn(1), mk_dn(2), 1)
    lhs = apply_alpha(mk_dn(4)) + lin_comb([H, -H], [mk_dn(3), mk_dn(4)])
    rhs = lin_comb([H, H, Fraction(1, 4), Fraction(-1, 4)],
                   [mk_dn(3), mk_dn(4), mk_dnp(1), mk_dn(1)])
    assert measure_eq(lhs, rhs, 24)


def test_measure_eq_cross_validation_guard():
    # distinct atomic measures whose moments collide at a too-small depth
    # trip the internal-consistency error by design
    with pytest.raises(InternalInconsistencyError):
        measure_eq(mk_un(5), mk_un(7), 0)


def test_ghost_series_identities():
    eps_forms = {
        1: [(2, H), (4, H)],
        2: [(0, Fraction(1, 4)), (2, H), (4, Fraction(1, 4))],
        3: [(1, Fraction(1, 3)), (2, H), (4, Fraction(1, 6))],
        4: [(0, Fraction(1, 8)), (2, Fraction(3, 4)), (4, Fraction(1, 8))],
        6: [(0, Fraction(1, 12)), (1, Fraction(1, 6)), (2, H), (3, Fraction(1, 6)),
            (4, Fraction(1, 12))],
    }
    for n, combo in eps_forms.items():
        rhs = lin_comb([c for _, c in combo], [mk_gamma(s) for s, _ in combo])
        assert measure_eq(mk_epsn(n), rhs, 24)


def test_dn_in_gamma_identities():
    forms = {
        1: [(4, Fraction(1))],
        2: [(0, H), (4, H)],
        3: [(1, Fraction(2, 3)), (4, Fraction(1, 3))],
        4: [(0, Fraction(1, 4)), (2, H), (4, Fraction(1, 4))],
        6: [(0, Fraction(1, 6)), (1, Fraction(1, 3)), (3, Fraction(1, 3)), (4, Fraction(1, 6))],
    }
    for n, combo in forms.items():
        rhs = lin_comb([c for _, c in combo], [mk_gamma(s) for s, _ in combo])
        assert measure_eq(mk_dn(n), rhs, 24)


def test_pushforward_examples():
    sm = pushforward(mk_gamma(2))
    assert sm.atom_dict() == {2: Fraction(1)}
    eps4 = lin_comb([Fraction(1, 8), Fraction(3, 4), Fraction(1, 8)],
                    [mk_gamma(0), mk_gamma(2), mk_gamma(4)])
    assert pushforward(eps4).atom_dict() == {0: Fraction(1, 8), 2: Fraction(3, 4), 4: Fraction(1, 8)}
    assert pushforward(mk_dn(1)).atom_dict() == {4: Fraction(1)}
    assert pushforward(mk_lebesgue()).continuous == 1
    sm5 = pushforward(mk_un(5))
    assert sm5.atom_dict() == {(5, "4cos^2(2pi/5) orbit-value"): Fraction(1)}
    with pytest.raises(ValueError):
        pushforward(apply_alpha(mk_dn(3)))


def test_pushforward_mass():
    m = lin_comb([H, H], [mk_dnp(1), mk_lebesgue()])
    sm = pushforward(m)
    assert sm.total_mass() == 1


def test_float_atom_oracle():
    for m in [mk_dn(4), mk_dn(6), mk_dnp(3), mk_gamma(1), mk_epsn(6),
              apply_alpha(mk_dn(3)), apply_alpha(mk_dn(12))]:
        exact = [float(c) for c in moments(m, 10)]
        approx = atom_moments_float(m, 10)
        assert all(abs(a - b) < 1e-9 * max(1.0, abs(a)) for a, b in zip(exact, approx))


def test_integrality_of_table_measures():
    # every measure appearing in the loop-count theorems has integer moments
    for m in [mk_dn(3), mk_epsn(1), mk_epsn(3), mk_epsn(4),
              lin_comb([H, H], [mk_dnp(1), mk_dn(5)]),
              apply_alpha(mk_dn(6)) + lin_comb([H, -H], [mk_dn(5), mk_dn(6)])]:
        for c in moments(m, 16):
            assert c.denominator == 1 and c >= 0


def test_json_roundtrip():
    m = apply_alpha(mk_dn(6)) + lin_comb([H, -H], [mk_dn(5), mk_dn(6)])
    again = CircularMeasure.from_json(m.to_json())
    assert again == m
    leb = lin_comb([H, H], [mk_dnp(1), mk_lebesgue()])
    assert CircularMeasure.from_json(leb.to_json()) == leb
    assert LEB in [b for b, _ in leb.terms]


def test_render():
    assert mk_gamma(1).render() == "1/2*u_3 + 1/2*u_6"
    assert measure([]).render() == "0"
