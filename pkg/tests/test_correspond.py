from fractions import Fraction

import pytest

from adeinv import duals
from adeinv.correspond import (
    InvariantRecord,
    TableAssertionError,
    dual_record,
    emit_tables,
    graph_epsilon,
    group_record,
    match,
    named_graph_record,
    quantum_catalog,
    quantum_record,
    so3_catalog,
    so3_record,
)
from adeinv.groups import subgroup_catalog
from adeinv.measures import lin_comb, measure_eq, mk_dn, mk_dnp, moments
from conftest import dyck_paths

H = Fraction(1, 2)


def group_recs(K=16):
    return {e.name: group_record(e, K) for e in subgroup_catalog()}


def test_so3_catalog_examples():
    K = 12
    recs = {r.name: r for r in so3_catalog(K=K)}
    assert recs["Z3"].moments == named_graph_record("Atilde5", K).moments
    assert recs["A5"].moments == named_graph_record("Etilde8", K).moments
    assert [int(c) for c in recs["SO(3)"].moments] == dyck_paths(K)
    assert recs["Z5"].epsilon_symbol == "d_5"
    assert recs["D3"].epsilon_symbol == "(d_1'+d_3)/2"


def test_quantum_catalog_examples():
    K = 12
    assert quantum_record("Dhat4", K).moments == named_graph_record("Atilde15", K).moments
    dc3 = quantum_record("DC3^tau", K)
    assert measure_eq(dc3.epsilon, lin_comb([H, H], [mk_dnp(1), mk_dn(6)]), 24)
    assert dc3.moments == named_graph_record("Dtilde8", K).moments
    q4 = quantum_record("Q4", K)
    assert q4.moments == named_graph_record("Ainf", K).moments
    with pytest.raises(ValueError):
        quantum_catalog(2)
    names = {e.name for e in quantum_catalog(8)}
    assert "D4^tau" not in names and "DC2^tau" in names and "D6^tau" in names


def test_dual_records():
    K = 12
    rec = dual_record(3, K)
    assert rec.name == "Dhat3" and rec.kind == "dual"
    assert [int(c) for c in rec.moments[:3]] == [1, 2, 6]
    inf = dual_record(duals.INFINITY, K)
    assert inf.name == "Dhat_inf"


def test_match_examples():
    K = 12
    recs = group_recs(K=K)
    z2 = recs["Z2"]
    a3 = named_graph_record("Atilde3", K)
    classes = match([z2, a3], K)
    assert len(classes) == 1
    d1 = recs["D1"]
    delta6 = named_graph_record("Delta6", K)
    assert len(match([d1, delta6], K)) == 1
    assert len(match([recs["Z4"], recs["V"]], K)) == 2
    with pytest.raises(ValueError):
        match([InvariantRecord("x", "custom", (Fraction(1),))], 5)


def test_match_determinism():
    K = 8
    recs = list(group_recs(K=K).values())
    a = match(recs, K)
    b = match(list(reversed(recs)), K)
    assert [[r.qualified for r in cls] for cls in a] == [[r.qualified for r in cls] for cls in b]


def test_graph_epsilon_coverage():
    for label in ["Atilde7", "Dtilde9", "Delta6", "Delta7", "X4",
                  "Etilde6", "Etilde7", "Etilde8", "Ainf[K=8]", "Apminf[K=8]", "Dinf[K=8]"]:
        out = graph_epsilon(label)
        assert out is not None
        m, sym = out
        assert moments(m, 0)[0] == 1 and isinstance(sym, str)
    assert graph_epsilon("custom") is None


def test_emit_tables_structure():
    tables = {t.name: t for t in emit_tables(K=16, nmax=8)}
    assert set(tables) == {"thm-9.1", "thm-10.2", "thm-11.2", "thm-11.3", "final-1", "final-2"}

    t10 = tables["thm-10.2"]
    pairs = [(r["graph"], r["objects"][0]) for r in t10.rows]
    assert pairs == [
        ("Atilde1", "group:Z1"), ("Atilde3", "group:Z2"), ("Atilde5", "group:Z3"),
        ("Atilde7", "group:V"), ("Dtilde4", "group:Z4"), ("Dtilde6", "group:D4"),
        ("Delta6", "group:D1"), ("Delta7", "group:S3"),
        ("Etilde6", "group:A4"), ("Etilde7", "group:S4"),
    ]
    assert pairs[4] == ("Dtilde4", "group:Z4")  # the fifth column pairing

    t113 = tables["thm-11.3"]
    by_graph = {r["graph"]: r["objects"] for r in t113.rows}
    assert by_graph["Etilde7"] == ["quantum:S4^tau"]
    assert by_graph["Atilde15"] == ["dual:Dhat4", "quantum:Dhat4"]
    assert by_graph["Dtilde6"] == ["quantum:DC2^tau"]
    assert by_graph["Dtilde8"] == ["quantum:D6^tau", "quantum:DC3^tau"]

    f2 = tables["final-2"]
    squares = [(r["so3"], r["graph"]) for r in f2.rows if r["objects"] == [None]]
    assert ("D5", "Dtilde7") in squares and ("Z5", "Atilde9") in squares
    assert (None, "Delta6") in [(r["so3"], r["graph"]) for r in f2.rows]


def test_emit_tables_completeness_thm_10_2():
    K = 16
    recs = list(group_recs(K=K).values())
    graphs10 = ["Atilde1", "Atilde3", "Atilde5", "Atilde7", "Dtilde4",
                "Dtilde6", "Delta6", "Delta7", "Etilde6", "Etilde7"]
    recs += [named_graph_record(g, K) for g in graphs10]
    classes = match(recs, K)
    assert len(classes) == 10
    assert all(len(c) == 2 for c in classes)
    expected = {
        ("Atilde1", "Z1"), ("Atilde3", "Z2"), ("Atilde5", "Z3"), ("Atilde7", "V"),
        ("Dtilde4", "Z4"), ("Dtilde6", "D4"), ("Delta6", "D1"), ("Delta7", "S3"),
        ("Etilde6", "A4"), ("Etilde7", "S4"),
    }
    got = set()
    for cls in classes:
        kinds = {r.kind: r.name for r in cls}
        got.add((kinds["graph"], kinds["group"]))
    assert got == expected


def test_parameterized_rows():
    K = 12
    for n in range(3, 9):
        assert dual_record(n, K).moments == named_graph_record(f"Atilde{4 * n - 1}", K).moments
    for n in range(2, 9):
        dc = quantum_record(f"DC{n}^tau", K)
        assert dc.moments == named_graph_record(f"Dtilde{2 * n + 2}", K).moments
        if n >= 3:
            dt = quantum_record(f"D{2 * n}^tau", K)
            assert dt.moments == named_graph_record(f"Dtilde{2 * n + 2}", K).moments


def test_twist_invariance_consistency():
    K = 12
    for entry in quantum_catalog(8):
        if entry.justification == "twist-invariance":
            assert tuple(moments(entry.epsilon, K)) == so3_record(entry.source, K).moments


def test_corrupt_hook_aborts():
    with pytest.raises(TableAssertionError) as err:
        emit_tables(K=12, nmax=8, corrupt_graph="Etilde7")
    assert "Etilde7" in str(err.value)


def test_emit_tables_bad_nmax():
    with pytest.raises(ValueError):
        emit_tables(K=12, nmax=2)
