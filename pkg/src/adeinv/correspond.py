"""Matching engine and classification-table emitter.

Records from all producer modules (groups, graphs, duals, the rotation-group
catalog and the quantum catalog) are matched by exact moment equality.  The
emitter reproduces, as structured data, the subgroup invariant list, the
graph/group table, the rotation-group ADE table, the quantum ADE table and
the two final summary tables, asserting every row before emission.

Quantum-catalog entries get their circular measure either by twist
invariance from their classical source (the fusion semiring, hence all
invariants here, survive 2-cocycle twisting) or by the Cayley word count of
the duals module.  Parameterized rows are instantiated up to nmax (default
8); the default matching depth K = 16 separates every pair of distinct rows
in that range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import duals, graphs, groups
from .exact import MomentSequence
from .measures import (
    CircularMeasure,
    apply_alpha,
    lin_comb,
    mk_dn,
    mk_dnp,
    mk_lebesgue,
    moments,
)

__all__ = [
    "InvariantRecord",
    "Table",
    "TableAssertionError",
    "group_record",
    "graph_record",
    "dual_record",
    "so3_record",
    "so3_catalog",
    "quantum_catalog",
    "match",
    "emit_tables",
]

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class TableAssertionError(AssertionError):
    """A backing assertion for a table row failed."""

    def __init__(self, table: str, row: str, detail: str = ""):
        self.table = table
        self.row = row
        super().__init__(f"table {table}, row {row}: backing assertion failed. {detail}".strip())


@dataclass(frozen=True)
class InvariantRecord:
    name: str
    kind: str  # group | graph | dual | so3 | quantum
    moments: tuple[Fraction, ...]
    epsilon: CircularMeasure | None = None
    epsilon_symbol: str | None = None
    provenance: str = ""

    @property
    def qualified(self) -> str:
        return f"{self.kind}:{self.name}"


# -- record builders ----------------------------------------------------


def group_record(entry: groups.SubgroupCatalogEntry, K: int) -> InvariantRecord:
    g = entry.group()
    return InvariantRecord(
        entry.name,
        "group",
        tuple(groups.group_moments(g, K)),
        entry.epsilon,
        entry.epsilon_symbol,
        "fixed-point profile of the subgroup of S_4",
    )


_GRAPH_SYMBOLS = {
    "Delta6": "(d_2'+d_1)/2",
    "Delta7": "(d_2'+d_3)/2",
    "X4": "(d_2'+d_4)/2",
    "Etilde6": "alpha d_3+(d_2-d_3)/2",
    "Etilde7": "alpha d_4+(d_3-d_4)/2",
    "Etilde8": "alpha d_6+(d_5-d_6)/2",
}


def graph_epsilon(label: str) -> tuple[CircularMeasure, str] | None:
    """The circular measure of a catalog graph, with its symbolic form."""
    if label.startswith("Atilde"):
        m = int(label[6:])
        n = (m + 1) // 2
        return mk_dn(n), f"d_{n}"
    if label.startswith("Dtilde"):
        n = int(label[6:]) - 2
        return lin_comb([HALF, HALF], [mk_dnp(1), mk_dn(n)]), f"(d_1'+d_{n})/2"
    if label == "Delta6":
        return lin_comb([HALF, HALF], [mk_dnp(2), mk_dn(1)]), _GRAPH_SYMBOLS[label]
    if label == "Delta7":
        return lin_comb([HALF, HALF], [mk_dnp(2), mk_dn(3)]), _GRAPH_SYMBOLS[label]
    if label == "X4":
        return lin_comb([HALF, HALF], [mk_dnp(2), mk_dn(4)]), _GRAPH_SYMBOLS[label]
    if label.startswith("Etilde"):
        s = {"6": 3, "7": 4, "8": 6}[label[6:]]
        m = apply_alpha(mk_dn(s)) + lin_comb([HALF, -HALF], [mk_dn(s - 1), mk_dn(s)])
        return m, _GRAPH_SYMBOLS[label]
    if label.startswith("Ainf"):
        return apply_alpha(mk_lebesgue()), "alpha d"
    if label.startswith("Apminf"):
        return mk_lebesgue(), "d"
    if label.startswith("Dinf"):
        return lin_comb([HALF, HALF], [mk_dnp(1), mk_lebesgue()]), "(d_1'+d)/2"
    return None


def graph_record(g: graphs.RootedGraph, K: int) -> InvariantRecord:
    eps = graph_epsilon(g.label)
    measure_part, symbol = eps if eps is not None else (None, None)
    name = g.label.split("[")[0]  # strip truncation decoration
    return InvariantRecord(
        name,
        "graph",
        tuple(Fraction(c) for c in graphs.loop_counts(g, K)),
        measure_part,
        symbol,
        "2k-loop counts at the root via signed adjacency powers",
    )


def named_graph_record(spec: str, K: int) -> InvariantRecord:
    return graph_record(graphs.catalog_graph(spec, K), K)


def dual_record(n, K: int) -> InvariantRecord:
    if n == duals.INFINITY:
        name, eps, sym = "Dhat_inf", mk_lebesgue(), "d"
    else:
        name, eps, sym = f"Dhat{n}", mk_dn(2 * n), f"d_{2 * n}"
    return InvariantRecord(
        name,
        "dual",
        tuple(Fraction(c) for c in duals.dual_moments(n, K)),
        eps,
        sym,
        "word counts over the multiset (1, g, 1, h) by Cayley transfer matrix",
    )


def so3_epsilon(name: str) -> tuple[CircularMeasure, str]:
    """Circular measure of a rotation-group subgroup, by catalog name.

    Names: Z<n>, D<n> (n >= 2), V (alias of D2), SO(2), O(2), SO(3),
    A4, S4, A5.
    """
    if name.startswith("Z") and name[1:].isdigit():
        n = int(name[1:])
        return mk_dn(n), f"d_{n}"
    if name == "V":
        name = "D2"
    if name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if n < 2:
            raise ValueError("dihedral rotation subgroups start at D2")
        return lin_comb([HALF, HALF], [mk_dnp(1), mk_dn(n)]), f"(d_1'+d_{n})/2"
    if name == "SO(2)":
        return mk_lebesgue(), "d"
    if name == "O(2)":
        return lin_comb([HALF, HALF], [mk_dnp(1), mk_lebesgue()]), "(d_1'+d)/2"
    if name == "SO(3)":
        return apply_alpha(mk_lebesgue()), "alpha d"
    if name in ("A4", "S4", "A5"):
        s = {"A4": 3, "S4": 4, "A5": 6}[name]
        m = apply_alpha(mk_dn(s)) + lin_comb([HALF, -HALF], [mk_dn(s - 1), mk_dn(s)])
        return m, f"alpha d_{s}+(d_{s - 1}-d_{s})/2"
    raise ValueError(f"unknown rotation-group subgroup: {name}")


def so3_record(name: str, K: int) -> InvariantRecord:
    eps, sym = so3_epsilon(name)
    return InvariantRecord(
        name, "so3", tuple(moments(eps, K)), eps, sym,
        "moments of the circular measure of the rotation-group subgroup",
    )


def so3_catalog(K: int = 16, nmax: int = 8) -> list[InvariantRecord]:
    """Records for Z_n (n <= nmax), D_n (2 <= n <= nmax), the two limits,
    the full rotation group, and the three exceptional subgroups."""
    out = [so3_record(f"Z{n}", K) for n in range(1, nmax + 1)]
    out += [so3_record(f"D{n}", K) for n in range(2, nmax + 1)]
    out += [so3_record(name, K) for name in ("SO(2)", "SO(3)", "O(2)", "A4", "S4", "A5")]
    return out


@dataclass(frozen=True)
class QuantumCatalogEntry:
    name: str
    epsilon: CircularMeasure
    epsilon_symbol: str
    justification: str  # twist-invariance | cayley-computation | direct
    source: str = ""  # classical source for twist entries

    def record(self, K: int) -> InvariantRecord:
        return InvariantRecord(
            self.name, "quantum", tuple(moments(self.epsilon, K)),
            self.epsilon, self.epsilon_symbol,
            f"{self.justification}" + (f" from {self.source}" if self.source else ""),
        )


def quantum_catalog(nmax: int = 8) -> list[QuantumCatalogEntry]:
    """The non-classical subgroup catalog.

    Twist invariance assigns measures from the rotation-group catalog
    (the whole quantum permutation group from SO(3), the rank-2
    hyperoctahedral object from O(2), twisted/pseudo-twisted dihedral series
    from D_{2n}, twisted S4/A5 from S4/A5); the dihedral duals are computed
    by Cayley word counts.  Series ranges follow the classification:
    Dhat_n (n >= 3), D_{2n}^tau (n >= 3), DC_n^tau (n >= 2).
    """
    if nmax < 3:
        raise ValueError("quantum_catalog requires nmax >= 3")
    out = [
        QuantumCatalogEntry("Q4", *so3_epsilon("SO(3)"), "twist-invariance", "SO(3)"),
        QuantumCatalogEntry("O_-1(2)", *so3_epsilon("O(2)"), "twist-invariance", "O(2)"),
        QuantumCatalogEntry("S4^tau", *so3_epsilon("S4"), "twist-invariance", "S4"),
        QuantumCatalogEntry("A5^tau", *so3_epsilon("A5"), "twist-invariance", "A5"),
    ]
    for n in range(2, nmax + 1):
        eps, sym = so3_epsilon(f"D{2 * n}")
        if n >= 3:
            out.append(QuantumCatalogEntry(f"D{2 * n}^tau", eps, sym, "twist-invariance", f"D{2 * n}"))
        out.append(QuantumCatalogEntry(f"DC{n}^tau", eps, sym, "twist-invariance", f"D{2 * n}"))
    for n in range(3, nmax + 1):
        out.append(QuantumCatalogEntry(f"Dhat{n}", mk_dn(2 * n), f"d_{2 * n}", "cayley-computation"))
    out.append(QuantumCatalogEntry("Dhat_inf", mk_lebesgue(), "d", "cayley-computation"))
    return out


def quantum_record(name: str, K: int, nmax: int = 8) -> InvariantRecord:
    for entry in quantum_catalog(max(nmax, 3)):
        if entry.name == name:
            if entry.justification == "cayley-computation":
                n = duals.INFINITY if name == "Dhat_inf" else int(name[4:])
                rec = dual_record(n, K)
                return InvariantRecord(name, "quantum", rec.moments, entry.epsilon,
                                       entry.epsilon_symbol, entry.record(K).provenance)
            return entry.record(K)
    raise ValueError(f"unknown quantum catalog entry: {name}")


# -- matching -----------------------------------------------------------


def match(records: list[InvariantRecord], K: int) -> list[list[InvariantRecord]]:
    """Partition records into classes of exactly equal moments up to order K.

    Classes are ordered by their sorted member names; members by name.
    """
    for r in records:
        if len(r.moments) < K + 1:
            raise ValueError(f"record {r.qualified} carries moments only to order {len(r.moments) - 1} < {K}")
    buckets: dict[tuple, list[InvariantRecord]] = {}
    for r in records:
        buckets.setdefault(tuple(r.moments[: K + 1]), []).append(r)
    classes = [sorted(v, key=lambda r: r.qualified) for v in buckets.values()]
    classes.sort(key=lambda cls: [r.qualified for r in cls])
    return classes


# -- tables -------------------------------------------------------------


@dataclass
class Table:
    name: str
    columns: list[str]
    rows: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"table": self.name, "columns": self.columns, "rows": self.rows}


def _moments_str(rec: InvariantRecord, K: int) -> list[str]:
    return [str(c) for c in rec.moments[: K + 1]]


def _assert_same(table: str, row: str, recs: list[InvariantRecord], K: int) -> None:
    classes = match(recs, K)
    if len(classes) != 1:
        parts = " | ".join(",".join(r.qualified for r in c) for c in classes)
        raise TableAssertionError(table, row, f"records split into {len(classes)} classes: {parts}")


def _assert_separated(table: Table, by_graph: dict[str, tuple[Fraction, ...]]) -> None:
    names = sorted(by_graph)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if by_graph[a] == by_graph[b]:
                raise TableAssertionError(
                    table.name, f"{a}/{b}",
                    "two distinct rows merge (separation check); K >= 2*nmax is needed",
                )


def _corrupted(rec: InvariantRecord, corrupt: str | None, K: int) -> InvariantRecord:
    """Test hook: re-root a named catalog graph to break its row."""
    if corrupt is None or rec.kind != "graph" or rec.name != corrupt:
        return rec
    g = graphs.catalog_graph(corrupt, K)
    if g.n < 2:
        raise ValueError("cannot corrupt a one-vertex graph")
    # move the root to a vertex with a different loop profile where possible
    for new_root in range(g.n):
        if new_root == g.root:
            continue
        bad = graphs.RootedGraph(g.n, g.adj, new_root, g.label)
        counts = graphs.loop_counts(bad, K)
        if tuple(Fraction(c) for c in counts) != rec.moments[: K + 1]:
            return InvariantRecord(rec.name, rec.kind, tuple(Fraction(c) for c in counts),
                                   rec.epsilon, rec.epsilon_symbol, rec.provenance + " [corrupted]")
    return rec


def emit_tables(K: int = 16, nmax: int = 8, corrupt_graph: str | None = None) -> list[Table]:
    """Emit all classification tables, asserting every row.

    Any failed backing assertion aborts emission with the offending row.
    The corrupt_graph argument is a test hook that deliberately re-roots one
    named graph so the failure path can be exercised.
    """
    if nmax < 3:
        raise ValueError("emit_tables requires nmax >= 3")
    tables = []

    def grec(spec: str) -> InvariantRecord:
        return _corrupted(named_graph_record(spec, K), corrupt_graph, K)

    # Subgroup invariant list (profiles and measures).
    t9 = Table("thm-9.1", ["group", "m0", "m1", "m2", "m", "epsilon", "moments"])
    for entry in groups.subgroup_catalog():
        g = entry.group()
        profile = groups.fixed_profile(g)
        if tuple(profile) != entry.expected_profile:
            raise TableAssertionError(t9.name, entry.name, f"profile {profile} != expected {entry.expected_profile}")
        rec = group_record(entry, K)
        formula = tuple(moments(entry.epsilon, K))
        direct = tuple(moments(groups.group_circular(g), K))
        if not rec.moments == formula == direct:
            raise TableAssertionError(t9.name, entry.name, "measure formula disagrees with fixed-point moments")
        t9.rows.append({
            "group": entry.name,
            "m0": profile[0], "m1": profile[1], "m2": profile[2], "m": len(g),
            "epsilon": entry.epsilon_symbol,
            "moments": _moments_str(rec, K),
        })
    tables.append(t9)

    # Graphs vs subgroups of S_4.
    t10 = Table("thm-10.2", ["graph", "objects", "moments"])
    pairs = [
        ("Atilde1", "Z1"), ("Atilde3", "Z2"), ("Atilde5", "Z3"), ("Atilde7", "V"),
        ("Dtilde4", "Z4"), ("Dtilde6", "D4"), ("Delta6", "D1"), ("Delta7", "S3"),
        ("Etilde6", "A4"), ("Etilde7", "S4"),
    ]
    group_recs = {e.name: group_record(e, K) for e in groups.subgroup_catalog()}
    all10 = []
    for gname, sub in pairs:
        gr = grec(gname)
        _assert_same(t10.name, f"{gname}~{sub}", [gr, group_recs[sub]], K)
        all10 += [gr, group_recs[sub]]
        t10.rows.append({"graph": gname, "objects": [f"group:{sub}"], "moments": _moments_str(gr, K)})
    if len(match(all10, K)) != len(pairs):
        raise TableAssertionError(t10.name, "completeness", "expected exactly one class per column")
    tables.append(t10)

    # Graphs vs subgroups of the rotation group.
    t112 = Table("thm-11.2", ["graph", "objects", "family", "moments"])

    def add_row(table: Table, gname: str, partners: list[InvariantRecord], family: str,
                extra: dict | None = None) -> None:
        gr = grec(gname)
        _assert_same(table.name, gname, [gr] + partners, K)
        row = {"graph": gname, "objects": [p.qualified for p in partners],
               "family": family, "moments": _moments_str(gr, K)}
        if extra:
            row.update(extra)
        table.rows.append(row)

    for n in range(1, nmax + 1):
        add_row(t112, f"Atilde{2 * n - 1}", [so3_record(f"Z{n}", K)], "Atilde_{2n-1} ~ Z_n")
    add_row(t112, "Apminf", [so3_record("SO(2)", K)], "A_{-inf,inf} ~ SO(2)")
    add_row(t112, "Ainf", [so3_record("SO(3)", K)], "A_inf ~ SO(3)")
    for n in range(2, nmax + 1):
        add_row(t112, f"Dtilde{n + 2}", [so3_record(f"D{n}", K)], "Dtilde_{n+2} ~ D_n")
    add_row(t112, "Dinf", [so3_record("O(2)", K)], "D_inf ~ O(2)")
    add_row(t112, "Etilde6", [so3_record("A4", K)], "Etilde6 ~ A4")
    add_row(t112, "Etilde7", [so3_record("S4", K)], "Etilde7 ~ S4")
    add_row(t112, "Etilde8", [so3_record("A5", K)], "Etilde8 ~ A5")
    tables.append(t112)

    # Graphs vs non-classical subgroups.
    t113 = Table("thm-11.3", ["graph", "objects", "family", "moments"])
    for n in range(3, nmax + 1):
        dual = dual_record(n, K)
        q = quantum_record(f"Dhat{n}", K, nmax)
        add_row(t113, f"Atilde{4 * n - 1}", [dual, q], "Atilde_{4n-1} ~ Dhat_n")
    add_row(t113, "Apminf", [dual_record(duals.INFINITY, K), quantum_record("Dhat_inf", K, nmax)],
            "A_{-inf,inf} ~ Dhat_inf")
    add_row(t113, "Ainf", [quantum_record("Q4", K, nmax)], "A_inf ~ Q4")
    for n in range(2, nmax + 1):
        partners = [quantum_record(f"DC{n}^tau", K, nmax)]
        if n >= 3:
            partners.insert(0, quantum_record(f"D{2 * n}^tau", K, nmax))
        add_row(t113, f"Dtilde{2 * n + 2}", partners, "Dtilde_{2n+2} ~ D_{2n}^tau, DC_n^tau")
    add_row(t113, "Dinf", [quantum_record("O_-1(2)", K, nmax)], "D_inf ~ O_-1(2)")
    add_row(t113, "Etilde7", [quantum_record("S4^tau", K, nmax)], "Etilde7 ~ S4^tau")
    add_row(t113, "Etilde8", [quantum_record("A5^tau", K, nmax)], "Etilde8 ~ A5^tau")
    tables.append(t113)

    # First summary table: ADE graph | subgroup of the quantum permutation
    # group | correspondence idea.
    f1 = Table("final-1", ["graph", "objects", "idea", "moments"])
    for gname, sub in [("Atilde1", "Z1"), ("Atilde3", "Z2"), ("Atilde5", "Z3"), ("Atilde7", "V")]:
        add_row(f1, gname, [group_recs[sub]], "ADE for S4")
    for n in range(3, nmax + 1):
        add_row(f1, f"Atilde{4 * n - 1}", [dual_record(n, K)], "Computation")
    add_row(f1, "Apminf", [dual_record(duals.INFINITY, K)], "Computation")
    add_row(f1, "Ainf", [quantum_record("Q4", K, nmax)], "Twisted McKay")
    add_row(f1, "Dtilde4", [group_recs["Z4"]], "ADE for S4")
    add_row(f1, "Dtilde6", [group_recs["D4"]], "ADE for S4")
    for n in range(3, nmax + 1):
        add_row(f1, f"Dtilde{2 * n + 2}",
                [quantum_record(f"D{2 * n}^tau", K, nmax), quantum_record(f"DC{n}^tau", K, nmax)],
                "Twisted McKay")
    add_row(f1, "Dinf", [quantum_record("O_-1(2)", K, nmax)], "Twisted McKay")
    add_row(f1, "Delta6", [group_recs["D1"]], "ADE for S4")
    add_row(f1, "Delta7", [group_recs["S3"]], "ADE for S4")
    add_row(f1, "Etilde6", [group_recs["A4"]], "ADE for S4")
    add_row(f1, "Etilde7", [group_recs["S4"], quantum_record("S4^tau", K, nmax)], "McKay + twist")
    add_row(f1, "Etilde8", [quantum_record("A5^tau", K, nmax)], "Twisted McKay")
    for row in f1.rows:
        row["idea"] = row.pop("family")
    tables.append(f1)

    # Second summary table: rotation-group subgroup | ADE graph | quantum
    # permutation partners; squares mark missing subgroups (emitted as None).
    f2 = Table("final-2", ["so3", "graph", "objects", "moments"])

    def add_f2(so3_name: str | None, gname: str, partners: list[InvariantRecord]) -> None:
        gr = grec(gname)
        recs = [gr] + partners
        if so3_name is not None:
            recs.append(so3_record(so3_name, K))
        _assert_same(f2.name, gname, recs, K)
        f2.rows.append({
            "so3": so3_name,
            "graph": gname,
            "objects": [p.qualified for p in partners] or [None],
            "moments": _moments_str(gr, K),
        })

    for n, sub in [(1, "Z1"), (2, "Z2"), (3, "Z3"), (4, "V")]:
        add_f2(f"Z{n}", f"Atilde{2 * n - 1}", [group_recs[sub]])
    for n in range(3, nmax + 1):
        add_f2(f"Z{2 * n - 1}", f"Atilde{4 * n - 3}", [])
        add_f2(f"Z{2 * n}", f"Atilde{4 * n - 1}", [quantum_record(f"Dhat{n}", K, nmax)])
    add_f2("SO(2)", "Apminf", [quantum_record("Dhat_inf", K, nmax)])
    add_f2("SO(3)", "Ainf", [quantum_record("Q4", K, nmax)])
    add_f2("V", "Dtilde4", [group_recs["Z4"]])
    add_f2("D4", "Dtilde6", [group_recs["D4"]])
    for n in range(2, nmax + 1):
        add_f2(f"D{2 * n - 1}", f"Dtilde{2 * n + 1}", [])
        if n >= 3:
            add_f2(f"D{2 * n}", f"Dtilde{2 * n + 2}",
                   [quantum_record(f"D{2 * n}^tau", K, nmax), quantum_record(f"DC{n}^tau", K, nmax)])
    add_f2("O(2)", "Dinf", [quantum_record("O_-1(2)", K, nmax)])
    add_f2(None, "Delta6", [group_recs["D1"]])
    add_f2(None, "Delta7", [group_recs["S3"]])
    add_f2("A4", "Etilde6", [group_recs["A4"]])
    add_f2("S4", "Etilde7", [group_recs["S4"], quantum_record("S4^tau", K, nmax)])
    add_f2("A5", "Etilde8", [quantum_record("A5^tau", K, nmax)])
    tables.append(f2)

    # Separation: within each classification table, no two distinct graph
    # rows may carry equal moment sequences.
    for table in tables[1:]:
        by_graph: dict[str, tuple[Fraction, ...]] = {}
        for row in table.rows:
            by_graph[row["graph"]] = tuple(Fraction(c) for c in row["moments"])
        _assert_separated(table, by_graph)

    # Twist-invariance consistency: every twisted entry equals its classical
    # source (an identity by construction, asserted to guard wiring).
    for entry in quantum_catalog(nmax):
        if entry.justification == "twist-invariance":
            src = so3_record(entry.source, K)
            if tuple(moments(entry.epsilon, K)) != src.moments:
                raise TableAssertionError("twist-invariance", entry.name, f"differs from source {entry.source}")

    return tables
