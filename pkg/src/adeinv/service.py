"""FastAPI service wrapping the core package.

The handler functions (`compute_invariants`, `compute_tables`, `run_verify`,
`run_match`) are plain functions over pydantic models; the CLI calls them
in-process and the FastAPI app exposes them over HTTP.  Input errors raise
SpecError (HTTP 422), failed verifications and failed table assertions are
reported in the response models / HTTP 409 for tables.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import correspond, duals, graphs, groups, verify
from .measures import (
    CircularMeasure, apply_alpha, lin_comb, mk_dn, mk_dnp, mk_en, mk_epsn,
    mk_gamma, mk_lebesgue, mk_un, moments, pushforward,
)

__all__ = [
    "app",
    "SpecError",
    "InvariantRequest", "InvariantResponse",
    "TablesRequest", "TablesResponse", "TableModel",
    "VerifyRequest", "VerifyResponse",
    "MatchRequest", "MatchResponse",
    "compute_invariants", "compute_tables", "run_verify", "run_match",
    "resolve_measure",
]


class SpecError(ValueError):
    """Unresolvable name or malformed JSON in a request."""


# -- request/response models --------------------------------------------


class InvariantRequest(BaseModel):
    kind: Literal["group", "graph", "dual", "measure"]
    spec: str = Field(description="catalog name, cycle notation, or a JSON object")
    K: int = Field(default=16, ge=1)


class SpectralAtomModel(BaseModel):
    value: str
    weight: str


class InvariantResponse(BaseModel):
    name: str
    kind: str
    K: int
    moments: list[str]
    epsilon: Optional[str] = None
    epsilon_json: Optional[dict] = None
    spectral_atoms: Optional[list[SpectralAtomModel]] = None
    provenance: str = ""


class TablesRequest(BaseModel):
    K: int = Field(default=16, ge=1)
    nmax: int = Field(default=8, ge=3)
    corrupt_graph: Optional[str] = Field(default=None, description="test hook")


class TableModel(BaseModel):
    table: str
    columns: list[str]
    rows: list[dict]


class TablesResponse(BaseModel):
    K: int
    nmax: int
    tables: list[TableModel]


class VerifyRequest(BaseModel):
    suite: Literal["measures", "relations", "fusion", "all"] = "all"
    seed: int = 42


class PropertyModel(BaseModel):
    suite: str
    name: str
    passed: bool
    residual: Optional[float] = None


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    properties: list[PropertyModel]


class MatchRecordModel(BaseModel):
    name: str
    kind: str = "custom"
    moments: list[str]


class MatchRequest(BaseModel):
    records: list[MatchRecordModel]
    K: int = Field(default=16, ge=1)


class MatchResponse(BaseModel):
    K: int
    classes: list[list[str]]


# -- spec resolution ----------------------------------------------------

_MEASURE_ALIASES = {
    "d": mk_lebesgue,
    "leb": mk_lebesgue,
    "alpha*d": lambda: apply_alpha(mk_lebesgue()),
}


def resolve_measure(spec: str) -> tuple[str, CircularMeasure]:
    """Resolve a measure name (d3, d3p, e2, gamma1, eps4, u8, d) or JSON."""
    s = spec.strip()
    if s.startswith("{"):
        try:
            return "custom", CircularMeasure.from_json(json.loads(s))
        except (KeyError, ValueError, TypeError) as exc:
            raise SpecError(f"malformed measure JSON: {exc}") from exc
    if s in _MEASURE_ALIASES:
        return s, _MEASURE_ALIASES[s]()
    try:
        if s.startswith("gamma"):
            return s, mk_gamma(int(s[5:]))
        if s.startswith("eps"):
            return s, mk_epsn(int(s[3:]))
        if s.startswith("u") and s[1:].isdigit():
            return s, mk_un(int(s[1:]))
        if s.startswith("e") and s[1:].isdigit():
            return s, mk_en(int(s[1:]))
        if s.startswith("d") and s.endswith("p") and s[1:-1].isdigit():
            return s, mk_dnp(int(s[1:-1]))
        if s.startswith("d") and s[1:].isdigit():
            return s, mk_dn(int(s[1:]))
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    raise SpecError(f"unknown measure spec: {spec!r}")


def _resolve_group(spec: str) -> tuple[str, groups.PermGroup, CircularMeasure | None, str | None]:
    s = spec.strip()
    for entry in groups.subgroup_catalog(include_excluded=True):
        if entry.name == s:
            return entry.name, entry.group(), entry.epsilon, entry.epsilon_symbol
    if s.startswith("{"):
        try:
            g = groups.group_from_json(json.loads(s))
        except (KeyError, ValueError, TypeError) as exc:
            raise SpecError(f"malformed group JSON: {exc}") from exc
        return "custom", g, None, None
    if s.startswith("("):
        try:
            gens = [groups.parse_cycles(part, 4) for part in s.split(",")]
            g = groups.closure(gens, degree=4)
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        return "custom", g, None, None
    raise SpecError(f"unknown group spec: {spec!r}")


def _resolve_graph(spec: str, K: int) -> graphs.RootedGraph:
    s = spec.strip()
    if s.startswith("{"):
        try:
            return graphs.graph_from_json(json.loads(s))
        except (KeyError, ValueError, TypeError) as exc:
            raise SpecError(f"malformed graph JSON: {exc}") from exc
    try:
        return graphs.catalog_graph(s, K)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def _resolve_dual(spec: str):
    s = spec.strip()
    if s in ("Dinf", "DhatInf", "Dhat_inf", "inf"):
        return duals.INFINITY
    if s.startswith("Dhat"):
        s = s[4:]
    elif s.startswith("D"):
        s = s[1:]
    if s.isdigit() and int(s) >= 1:
        return int(s)
    raise SpecError(f"unknown dual spec: {spec!r}")


# -- handlers ------------------------------------------------------------


def compute_invariants(req: InvariantRequest) -> InvariantResponse:
    K = req.K
    if req.kind == "group":
        name, g, eps, sym = _resolve_group(req.spec)
        mom = groups.group_moments(g, K)
        if eps is None and g.degree == 4:
            eps = groups.group_circular(g)
            profile = groups.fixed_profile(g)
            sym = "(" + "+".join(f"{profile[s]} gamma_{s}" for s in range(5) if profile[s]) + f")/{len(g)}"
        return _invariant_response(name, "group", K, mom, eps, sym,
                                   "fixed-point profile of a permutation group")
    if req.kind == "graph":
        g = _resolve_graph(req.spec, K)
        rec = correspond.graph_record(g, K)
        return _invariant_response(rec.name, "graph", K, list(rec.moments), rec.epsilon,
                                   rec.epsilon_symbol, rec.provenance)
    if req.kind == "dual":
        n = _resolve_dual(req.spec)
        rec = correspond.dual_record(n, K)
        return _invariant_response(rec.name, "dual", K, list(rec.moments), rec.epsilon,
                                   rec.epsilon_symbol, rec.provenance)
    name, m = resolve_measure(req.spec)
    return _invariant_response(name, "measure", K, moments(m, K), m, name,
                               "moments of a circular measure")


def _invariant_response(name, kind, K, mom, eps, sym, provenance) -> InvariantResponse:
    atoms = None
    eps_json = None
    if eps is not None:
        eps_json = eps.to_json()
        if eps.density_free():
            spectral = pushforward(eps)
            atoms = [
                SpectralAtomModel(value=str(v), weight=str(w))
                for v, w in spectral.atoms
            ]
            if spectral.continuous:
                atoms.append(SpectralAtomModel(value="lebesgue[0,4]", weight=str(spectral.continuous)))
    return InvariantResponse(
        name=name, kind=kind, K=K,
        moments=[str(c) for c in mom],
        epsilon=sym if sym else (eps.render() if eps is not None else None),
        epsilon_json=eps_json,
        spectral_atoms=atoms,
        provenance=provenance,
    )


def compute_tables(req: TablesRequest) -> TablesResponse:
    tables = correspond.emit_tables(K=req.K, nmax=req.nmax, corrupt_graph=req.corrupt_graph)
    return TablesResponse(
        K=req.K, nmax=req.nmax,
        tables=[TableModel(table=t.name, columns=t.columns, rows=t.rows) for t in tables],
    )


def run_verify(req: VerifyRequest) -> VerifyResponse:
    results = verify.verify_suite(req.suite, seed=req.seed)
    return VerifyResponse(
        suite=req.suite,
        passed=all(r.passed for r in results),
        properties=[PropertyModel(suite=r.suite, name=r.name, passed=r.passed, residual=r.residual)
                    for r in results],
    )


def run_match(req: MatchRequest) -> MatchResponse:
    records = []
    for r in req.records:
        try:
            mom = tuple(Fraction(c) for c in r.moments)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecError(f"record {r.name}: bad moment value: {exc}") from exc
        records.append(correspond.InvariantRecord(r.name, r.kind, mom))
    try:
        classes = correspond.match(records, req.K)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    return MatchResponse(K=req.K, classes=[[r.qualified for r in cls] for cls in classes])


# -- FastAPI app ----------------------------------------------------------

app = FastAPI(
    title="adeinv",
    description="Exact algebraic invariants and McKay-type classification tables",
    version="0.1.0",
)


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/invariants", response_model=InvariantResponse)
def invariants_endpoint(req: InvariantRequest) -> InvariantResponse:
    try:
        return compute_invariants(req)
    except SpecError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/tables", response_model=TablesResponse)
def tables_endpoint(req: TablesRequest) -> TablesResponse:
    try:
        return compute_tables(req)
    except correspond.TableAssertionError as exc:
        raise HTTPException(status_code=409, detail=str(exc)) from exc


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    return run_verify(req)


@app.post("/match", response_model=MatchResponse)
def match_endpoint(req: MatchRequest) -> MatchResponse:
    try:
        return run_match(req)
    except SpecError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
