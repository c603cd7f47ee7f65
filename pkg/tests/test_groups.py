from fractions import Fraction

import pytest

from adeinv.groups import (
    closure,
    compose,
    fixed_profile,
    group_circular,
    group_from_json,
    group_moments,
    inverse,
    orbit_count,
    parse_cycles,
    subgroup_catalog,
    to_cycles,
)
from adeinv.measures import lin_comb, measure_eq, mk_dn, mk_dnp, moments
from conftest import partitions_upto_4_blocks

H = Fraction(1, 2)


def entry(name):
    for e in subgroup_catalog(include_excluded=True):
        if e.name == name:
            return e
    raise KeyError(name)


def test_cycle_parser_roundtrip():
    p = parse_cycles("(1 2)(3 4)", 4)
    assert p == (1, 0, 3, 2)
    assert to_cycles(p) == "(1 2)(3 4)"
    assert parse_cycles("e", 4) == (0, 1, 2, 3)
    assert to_cycles((0, 1, 2, 3)) == "e"
    q = parse_cycles("(1 2 3 4)", 4)
    assert q == (1, 2, 3, 0)
    with pytest.raises(ValueError):
        parse_cycles("(1 5)", 4)
    with pytest.raises(ValueError):
        parse_cycles("nonsense", 4)


def test_compose_convention():
    # compose(p, q) applies q first
    p = parse_cycles("(1 2)", 4)
    q = parse_cycles("(2 3)", 4)
    r = compose(p, q)
    assert r == parse_cycles("(1 2 3)", 4)
    assert compose(r, inverse(r)) == (0, 1, 2, 3)
    assert compose(inverse(r), r) == (0, 1, 2, 3)


def test_closure_examples():
    g = closure([parse_cycles("(1 2)", 4)])
    assert len(g) == 2
    klein = closure([parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)])
    assert len(klein) == 4
    assert fixed_profile(klein)[0] == 3
    z4 = closure([parse_cycles("(1 2 3 4)", 4)])
    assert len(z4) == 4
    with pytest.raises(ValueError):
        closure([(1, 0), (1, 0, 2)])
    with pytest.raises(ValueError):
        closure([tuple(range(9))])  # degree cap


def test_fixed_profile_examples():
    s4 = entry("S4").group()
    assert fixed_profile(s4) == [9, 8, 6, 0, 1]
    a4 = entry("A4").group()
    assert fixed_profile(a4) == [3, 8, 0, 0, 1]
    triv = closure([], degree=4)
    assert fixed_profile(triv) == [0, 0, 0, 0, 1]


def test_profile_invariants():
    for e in subgroup_catalog(include_excluded=True):
        g = e.group()
        m = fixed_profile(g)
        assert sum(m) == len(g)
        assert m[4] == 1
        assert m[3] == 0


def test_group_moments_examples():
    s4 = entry("S4").group()
    assert group_moments(s4, 4) == [1, 1, 2, 5, 15]
    z2 = entry("Z2").group()
    assert group_moments(z2, 3) == [1, 2, 8, 32]
    triv = closure([], degree=4)
    assert group_moments(triv, 2) == [1, 4, 16]


def test_s4_moments_partition_oracle():
    # the number of trivial subrepresentations in the k-th tensor power is
    # the number of set partitions of {1..k} into at most 4 blocks
    s4 = entry("S4").group()
    got = group_moments(s4, 10)
    assert got == [partitions_upto_4_blocks(k) for k in range(11)]


def test_group_moments_integrality_and_burnside():
    for e in subgroup_catalog(include_excluded=True):
        g = e.group()
        mom = group_moments(g, 24)
        assert all(c.denominator == 1 and c >= 0 for c in mom)
        assert mom[1] == orbit_count(g)


def test_group_circular_examples():
    a4 = entry("A4").group()
    target = lin_comb([1, Fraction(1, 4), Fraction(-1, 4)], [mk_dn(3), mk_dnp(1), mk_dn(1)])
    assert measure_eq(group_circular(a4), target, 24)
    v = entry("V").group()
    assert measure_eq(group_circular(v), mk_dn(4), 24)
    s3 = entry("S3").group()
    assert measure_eq(group_circular(s3), lin_comb([H, H], [mk_dnp(2), mk_dn(3)]), 24)
    with pytest.raises(ValueError, match="spectral support"):
        group_circular(closure([(1, 0, 2)]))


def test_catalog_entries():
    d1 = entry("D1")
    assert d1.expected_profile == (0, 0, 1, 0, 1)
    assert d1.epsilon_symbol == "(d_2'+d_1)/2"
    z2 = entry("Z2")
    assert z2.expected_profile == (1, 0, 0, 0, 1)
    assert z2.epsilon_symbol == "d_2"
    d4 = entry("D4")
    assert d4.expected_profile == (5, 0, 2, 0, 1)
    assert len(d4.group()) == 8
    assert len(subgroup_catalog()) == 10
    assert len(subgroup_catalog(include_excluded=True)) == 11


def test_catalog_epsilon_matches_moments():
    for e in subgroup_catalog(include_excluded=True):
        g = e.group()
        assert moments(e.epsilon, 24) == group_moments(g, 24)
        assert measure_eq(group_circular(g), e.epsilon, 24)


def test_excluded_d2_matches_z4():
    d2 = entry("D2")
    assert d2.excluded
    z4 = entry("Z4")
    assert group_moments(d2.group(), 24) == group_moments(z4.group(), 24)


def test_group_from_json():
    g = group_from_json({"degree": 4, "generators": [[1, 0, 2, 3]]})
    assert len(g) == 2
    with pytest.raises(ValueError):
        group_from_json({"degree": 4, "generators": [[1, 0]]})
