"""Command-line client for the curvature service.

All commands are thin wrappers over the HTTP API.  By default requests are
dispatched to an in-process application instance (no server needed, output
is byte-deterministic for a fixed seed); ``--url`` targets a running server
instead.  Exit codes: 0 all checks passed, 1 a verdict or suite failed, 2
input error.
"""

from __future__ import annotations

import argparse
import json
import sys

import httpx


def _client(url: str | None) -> httpx.Client:
    if url:
        return httpx.Client(base_url=url.rstrip("/"), timeout=600.0)
    from .service.app import app

    transport = httpx.ASGITransport(app=app)
    return httpx.Client(transport=transport, base_url="http://ppcurv.local", timeout=None)


def _options(args) -> dict:
    out = {
        "seed": args.seed,
        "instantiations": args.instantiations,
        "points": args.points,
        "natural_units": args.natural_units,
        "tolerance": args.tolerance,
    }
    if getattr(args, "lambda_expression", None) is not None:
        out["lambda"] = args.lambda_expression
    return out


def _metric_argument(args) -> object:
    if getattr(args, "metric_file", None):
        with open(args.metric_file) as fh:
            return json.load(fh)
    return args.metric


def _emit(payload, fmt: str, renderer) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        renderer(payload)


def _fail(resp: httpx.Response) -> int:
    try:
        detail = resp.json().get("detail", resp.text)
    except Exception:
        detail = resp.text
    print(f"error: {detail}", file=sys.stderr)
    return 2


def cmd_list(args) -> int:
    with _client(args.url) as client:
        resp = client.get("/metrics")
    if resp.status_code != 200:
        return _fail(resp)

    def render(items):
        for item in items:
            suites = ", ".join(item["suites"]) or "-"
            print(f"{item['id']:18} coords=({', '.join(item['coordinates'])})  suites: {suites}")

    _emit(resp.json(), args.format, render)
    return 0


def cmd_show(args) -> int:
    with _client(args.url) as client:
        resp = client.get(f"/metrics/{args.metric}")
    if resp.status_code != 200:
        return _fail(resp)

    def render(d):
        print(f"id: {d['id']}")
        print(f"coordinates: {', '.join(d['coordinates'])}")
        if d.get("parameters"):
            print(f"parameters: {', '.join(d['parameters'])}")
        for f in d.get("functions", []):
            print(f"function: {f['name']}({', '.join(f['depends'])})")
        print("components:")
        for row in d["components"]:
            print("  [" + ", ".join(row) + "]")
        for c in d.get("constraints", []):
            print(f"constraint: {c} = 0")
        if d.get("certification"):
            for name, expr in d["certification"].items():
                print(f"certification family: {name} = {expr}")
        if d.get("notes"):
            print(f"notes: {d['notes']}")
        if d.get("suites"):
            print(f"suites: {', '.join(d['suites'])}")

    _emit(resp.json(), args.format, render)
    return 0


def cmd_compute(args) -> int:
    body = {"metric": _metric_argument(args), "tensor": args.tensor, **_options(args)}
    with _client(args.url) as client:
        resp = client.post("/compute", json=body)
    if resp.status_code != 200:
        return _fail(resp)

    def render(d):
        label = d["tensor"]
        if d.get("scalar") is not None:
            print(f"{label} of {d['metric_id']}: {d['scalar']}")
            return
        print(f"{label} of {d['metric_id']} (nonzero components, 1-based indices):")
        if d["zero"]:
            print("  identically zero")
        for key in sorted(d["components"]):
            print(f"  [{key}] = {d['components'][key]}")

    _emit(resp.json(), args.format, render)
    return 0


def cmd_classify(args) -> int:
    body = {"metric": _metric_argument(args), **_options(args)}
    if args.structure:
        body["structures"] = args.structure
    with _client(args.url) as client:
        resp = client.post("/classify", json=body)
    if resp.status_code != 200:
        return _fail(resp)
    payload = resp.json()

    def render(d):
        print(f"classification of {d['metric_id']} (seed {d['seed']}):")
        for v in d["verdicts"]:
            extra = ""
            if v["side_conditions"]:
                extra = "  provided " + "; ".join(v["side_conditions"])
            print(f"  {v['structure']:42} {v['status']}{extra}")

    _emit(payload, args.format, render)
    bad = [v for v in payload["verdicts"] if v["status"] not in
           ("holds", "holds-with-solution", "holds-numeric", "vacuous", "fails")]
    return 1 if bad else 0


def cmd_check(args) -> int:
    body = {"metric": args.metric, "suite": args.suite, **_options(args)}
    with _client(args.url) as client:
        resp = client.post("/check", json=body)
    if resp.status_code != 200:
        return _fail(resp)
    payload = resp.json()

    def render(d):
        print(f"suite {d['suite']} on {d['metric_id']} (seed {d['seed']}):")
        for r in d["results"]:
            mark = "PASS" if r["passed"] else "FAIL"
            expected = r.get("expected_status") or "holds"
            got = r["verdict"]["status"]
            print(f"  [{mark}] {r['check']:48} expected {expected}, got {got}")
            for p in r.get("problems", []):
                print(f"         {p}")
        print("result:", "PASS" if d["passed"] else "FAIL")

    _emit(payload, args.format, render)
    return 0 if payload["passed"] else 1


def cmd_compare(args) -> int:
    body = {"metric_a": args.metric_a, "metric_b": args.metric_b, **_options(args)}
    if args.structure:
        body["structures"] = args.structure
    with _client(args.url) as client:
        resp = client.post("/compare", json=body)
    if resp.status_code != 200:
        return _fail(resp)

    def render(d):
        a, b = d["metrics"]
        print(f"comparison of {a} and {b}")
        print("similarities:")
        for e in d["similarities"]:
            print(f"  {e['structure']:42} both {e[a]}")
        print("dissimilarities:")
        for e in d["dissimilarities"]:
            detail = f"  ({e['detail']})" if e.get("detail") else ""
            print(f"  {e['structure']:42} {e[a]} vs {e[b]}{detail}")

    _emit(resp.json(), args.format, render)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppcurv",
        description="Symbolic curvature tensors and structure classification "
        "for exact wave metrics.",
    )
    parser.add_argument("--url", default=None, help="remote service URL (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, metric_file=True):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--instantiations", type=int, default=0,
                       help="random exact instantiations per identity (0 = symbolic only)")
        p.add_argument("--points", type=int, default=3, help="sample points per instantiation")
        p.add_argument("--tolerance", type=float, default=1e-6,
                       help="relative tolerance for numeric-fallback evidence")
        p.add_argument("--lambda", dest="lambda_expression", default=None,
                       help="cosmological-constant expression (default: the Lambda parameter)")
        p.add_argument("--natural-units", action="store_true",
                       help="set the energy-momentum prefactor c^4/(8*pi*G) to 1")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if metric_file:
            p.add_argument("--metric-file", default=None,
                           help="JSON metric-definition file instead of a catalog id")

    p = sub.add_parser("list", help="catalog metric ids")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_list)

    p = sub.add_parser("show", help="metric definition and available suites")
    p.add_argument("metric")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_show)

    p = sub.add_parser("compute", help="tensor components of a metric")
    p.add_argument("metric", nargs="?", default=None)
    p.add_argument("--tensor", default="riemann")
    common(p)
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("classify", help="run structure checks")
    p.add_argument("metric", nargs="?", default=None)
    p.add_argument("--structure", action="append", default=None,
                   help="restrict to named structure checks (repeatable)")
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("check", help="run a published-results suite")
    p.add_argument("metric")
    p.add_argument("--suite", required=True)
    common(p, metric_file=False)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("compare", help="similarities/dissimilarities of two metrics")
    p.add_argument("metric_a")
    p.add_argument("metric_b")
    p.add_argument("--structure", action="append", default=None)
    common(p, metric_file=False)
    p.set_defaults(fn=cmd_compare)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "metric", None) is None and getattr(args, "metric_file", None) is None \
            and args.command in ("compute", "classify"):
        parser.error("a catalog metric id or --metric-file is required")
    try:
        return args.fn(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
