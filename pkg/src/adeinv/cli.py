"""Command-line interface: a thin client over the service layer.

Commands: invariants, tables, verify, match, serve.  Exit codes: 0 success,
1 verification/assertion failure, 2 input error.  Output is deterministic
for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import correspond
from .service import (
    InvariantRequest, MatchRecordModel, MatchRequest, SpecError,
    TablesRequest, VerifyRequest,
    compute_invariants, compute_tables, run_match, run_verify,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_invariants(args) -> int:
    try:
        resp = compute_invariants(InvariantRequest(kind=args.kind, spec=args.spec, K=args.K))
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.format == "json":
        _write(_json_dumps(resp.model_dump()), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["name", "kind", "k", "moment"])
        for k, c in enumerate(resp.moments):
            w.writerow([resp.name, resp.kind, k, c])
        _write(buf.getvalue(), args.out)
    else:
        lines = [f"{resp.kind} {resp.name}",
                 "moments c_0..c_%d: %s" % (resp.K, " ".join(resp.moments))]
        if resp.epsilon:
            lines.append(f"epsilon: {resp.epsilon}")
        if resp.spectral_atoms:
            atoms = ", ".join(f"{a.value}: {a.weight}" for a in resp.spectral_atoms)
            lines.append(f"spectral measure: {atoms}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _tables_csv(resp) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    for t in resp.tables:
        w.writerow([f"# table {t.table}"])
        w.writerow(t.columns)
        for row in t.rows:
            w.writerow([_cell(row.get(c)) for c in t.columns])
        w.writerow([])
    return buf.getvalue()


def _cell(v) -> str:
    if v is None:
        return "[]"  # square marker: a missing subgroup
    if isinstance(v, list):
        return "; ".join("[]" if x is None else str(x) for x in v)
    return str(v)


def _tables_text(resp) -> str:
    lines = []
    for t in resp.tables:
        lines.append(f"== {t.table} ==")
        for row in t.rows:
            cells = [f"{c}={_cell(row.get(c))}" for c in t.columns if c != "moments"]
            lines.append("  " + "  ".join(cells))
        lines.append("")
    return "\n".join(lines)


def cmd_tables(args) -> int:
    try:
        resp = compute_tables(TablesRequest(K=args.K, nmax=args.nmax, corrupt_graph=args.corrupt_graph))
    except correspond.TableAssertionError as exc:
        print(f"table assertion failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.format == "csv":
        _write(_tables_csv(resp), args.out)
    elif args.format == "text":
        _write(_tables_text(resp), args.out)
    else:
        _write(_json_dumps(resp.model_dump()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    resp = run_verify(VerifyRequest(suite=args.suite, seed=args.seed))
    if args.format == "json":
        _write(_json_dumps(resp.model_dump()), args.out)
    else:
        lines = []
        for p in resp.properties:
            status = "PASS" if p.passed else "FAIL"
            resid = "" if p.residual is None else f" (max residual {p.residual:.3e})"
            lines.append(f"[{status}] {p.suite}: {p.name}{resid}")
        lines.append(f"suite {resp.suite}: {'all properties pass' if resp.passed else 'FAILURES PRESENT'}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK if resp.passed else EXIT_VERIFY_FAILED


def cmd_match(args) -> int:
    records = []
    try:
        for path in args.files:
            with open(path) as fh:
                data = json.load(fh)
            items = data if isinstance(data, list) else data.get("records", [data])
            for item in items:
                records.append(MatchRecordModel(
                    name=str(item["name"]),
                    kind=str(item.get("kind", "custom")),
                    moments=[str(c) for c in item["moments"]],
                ))
        resp = run_match(MatchRequest(records=records, K=args.K))
    except (OSError, KeyError, TypeError, json.JSONDecodeError, SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    if args.format == "json":
        _write(_json_dumps(resp.model_dump()), args.out)
    else:
        lines = [f"class {i}: " + ", ".join(cls) for i, cls in enumerate(resp.classes)]
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("adeinv.service:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="adeinv",
                                 description="Exact algebraic invariants and classification tables")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="moments and circular measure of one object")
    p.add_argument("kind", choices=["group", "graph", "dual", "measure"])
    p.add_argument("spec", help="catalog name (S4, Atilde7, D3, gamma2, ...) or JSON")
    p.add_argument("--K", type=int, default=16)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("tables", help="emit all classification tables with backing assertions")
    p.add_argument("--K", type=int, default=16)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--out")
    p.add_argument("--corrupt-graph", dest="corrupt_graph", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=["measures", "relations", "fusion", "all"])
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("match", help="match invariant records from JSON files")
    p.add_argument("files", nargs="+")
    p.add_argument("--K", type=int, default=16)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
