"""Command-line front end.

Exit codes: 0 success, 1 validation failure (report on standard error),
2 hypothesis failure (an operation outside its regime), 3 verification
mismatch.  Output is deterministic: identical input and flags produce
byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import graph as graphmod
from .classify import koszul_report
from .graph import BrauerGraph, BrauerGraphError, HypothesisError, is_reduced, validate
from .oracle.fields import field_from_spec
from .oracle.verify import Fault, verify_graph
from .presentation import (
    present,
    quiver_to_dict,
    quiver_to_dot,
    relation_to_dict,
)
from .resolution import resolve_simple, resolve_simple_2d
from .strings import iterate_syzygy, period

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_HYPOTHESIS = 2
EXIT_MISMATCH = 3


def _emit(doc, fmt: str, text_renderer=None) -> None:
    if fmt == "text" and text_renderer is not None:
        sys.stdout.write(text_renderer(doc) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def _load(path: str) -> BrauerGraph:
    g = graphmod.load_file(path)
    report = validate(g)
    if not report.ok:
        for item in report.violations:
            sys.stderr.write(item + "\n")
        raise SystemExit(EXIT_INVALID)
    return g


def _uniform_degree(g: BrauerGraph):
    vals = {g.valency(v) * g.multiplicity(v) for v in g.vertex_ids}
    return vals.pop() if len(vals) == 1 else None


def cmd_quiver(args) -> int:
    g = _load(args.input)
    q = present(g).quiver
    if args.format == "dot":
        sys.stdout.write(quiver_to_dot(q) + "\n")
    else:
        _emit(quiver_to_dict(q), args.format)
    return EXIT_OK


def cmd_relations(args) -> int:
    g = _load(args.input)
    pres = present(g)
    rels = pres.minimal_relations if args.minimal else pres.all_relations
    doc = [relation_to_dict(r) for r in rels]

    def text(d):
        lines = []
        for r in d:
            terms = " - ".join("".join(p) or "id" for p in r["paths"])
            lines.append(f"[{r['kind']}] {terms}")
        return "\n".join(lines)

    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load(args.input)
    rep = koszul_report(g)
    doc = rep.to_json()
    if args.explain:
        doc["explanations"] = rep.explanations
        doc["witnesses"] = rep.witnesses

    def text(d):
        return "\n".join(f"{k}: {v}" for k, v in sorted(d.items()))

    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_resolve(args) -> int:
    g = _load(args.input)
    if is_reduced(g) and not g.has_truncated_edge() and not g.is_a2_trivial():
        steps = resolve_simple(g, args.edge, args.max)
    else:
        d = _uniform_degree(g)
        if d is None or d < 3 or g.has_truncated_edge():
            raise HypothesisError(
                "explicit resolutions need either a reduced graph without "
                "truncated edges or a uniform degree of at least three"
            )
        steps = resolve_simple_2d(g, args.edge, args.max)
    doc = [s.to_json() for s in steps]
    if not args.graded:
        for s in doc:
            s["summands"] = [x[:2] for x in s["summands"]]
    _emit(doc, args.format)
    return EXIT_OK


def cmd_syzygy(args) -> int:
    g = _load(args.input)
    trace = iterate_syzygy(g, args.edge, args.max)
    doc = trace.to_json()
    if trace.period is None:
        doc["period"] = period(g, args.edge)

    def text(d):
        lines = [f"Omega^{x['degree']}: " + " ".join(e + s for e, s in x["string"])
                 for x in d["trace"]]
        lines.append(f"period: {d['period']}")
        return "\n".join(lines)

    _emit(doc, args.format, text)
    return EXIT_OK


def cmd_walk(args) -> int:
    g = _load(args.input)
    walk = g.brauer_walk(args.edge)

    def text(d):
        return " -> ".join(d)

    _emit(list(walk.edges), args.format, text)
    return EXIT_OK


def cmd_ext(args) -> int:
    from .resolution import ext_dim

    g = _load(args.input)
    doc = {
        "from": getattr(args, "from"),
        "to": args.to,
        "dims": [ext_dim(g, getattr(args, "from"), args.to, n)
                 for n in range(args.max + 1)],
    }

    def text(d):
        return "\n".join(f"Ext^{n}: {v}" for n, v in enumerate(d["dims"]))

    _emit(doc, args.format, text)
    return EXIT_OK


def _verify_one(path: str, max_degree: int, field_spec: str,
                fault: Fault | None) -> tuple[str, int, dict]:
    g = graphmod.load_file(path)
    report = validate(g)
    if not report.ok:
        return path, EXIT_INVALID, {"ok": False, "diffs": report.violations}
    rep = verify_graph(g, max_degree=max_degree,
                       field_obj=field_from_spec(field_spec), fault=fault)
    return path, EXIT_OK if rep.ok else EXIT_MISMATCH, rep.to_json()


def cmd_verify(args) -> int:
    fault = None
    if args.inject_flip:
        edge, n, row, col = args.inject_flip.split(":")
        fault = Fault(flip_sign=(edge, int(n), int(row), int(col)))
    if args.inject_drop is not None:
        fault = Fault(drop_relation=args.inject_drop) if fault is None else Fault(
            flip_sign=fault.flip_sign, drop_relation=args.inject_drop
        )
    if args.input_dir:
        import os

        paths = sorted(
            os.path.join(args.input_dir, p)
            for p in os.listdir(args.input_dir)
            if p.endswith(".bg.json")
        )
        results = []
        with ProcessPoolExecutor() as pool:
            for path, code, doc in pool.map(
                _verify_one, paths, [args.max] * len(paths),
                [args.field] * len(paths), [fault] * len(paths)
            ):
                results.append({"input": path, "exit": code, "report": doc})
        _emit(results, args.format)
        return max((r["exit"] for r in results), default=EXIT_OK)
    _, code, doc = _verify_one(args.input, args.max, args.field, fault)
    _emit(doc, args.format)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauergraph",
        description="Exact computations over the algebra of a Brauer graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="graph file (.bg.json)")
        p.add_argument("--format", choices=["json", "dot", "text"], default="json")
        p.add_argument("--field", default="q", help="q or fp:<prime>")

    p = sub.add_parser("quiver", help="the quiver of the algebra")
    common(p)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("relations", help="defining relations")
    common(p)
    p.add_argument("--minimal", action="store_true",
                   help="only a minimal generating set")
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("classify", help="regularity classes of the algebra")
    common(p)
    p.add_argument("--explain", action="store_true",
                   help="attach reasons and witnesses")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("resolve", help="explicit minimal projective resolution")
    common(p)
    p.add_argument("--edge", required=True)
    p.add_argument("--max", type=int, default=4)
    p.add_argument("--graded", action="store_true",
                   help="attach generation degrees to summands")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("syzygy", help="syzygy descriptors of a simple module")
    common(p)
    p.add_argument("--edge", required=True)
    p.add_argument("--max", type=int, default=6)
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("walk", help="walk between truncated edges")
    common(p)
    p.add_argument("--edge", required=True)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("ext", help="cohomology dimensions between two simples")
    common(p)
    p.add_argument("--from", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--max", type=int, default=6)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("verify", help="cross-check everything against the oracle")
    p.add_argument("--input")
    p.add_argument("--input-dir", help="verify every .bg.json in a directory")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--field", default="q", help="q or fp:<prime>")
    p.add_argument("--max", type=int, default=4)
    p.add_argument("--inject-flip", metavar="EDGE:N:ROW:COL",
                   help="testing hook: flip one differential sign")
    p.add_argument("--inject-drop", type=int, metavar="K",
                   help="testing hook: drop the K-th relation from the oracle")
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.input and not args.input_dir:
        parser.error("verify needs --input or --input-dir")
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except BrauerGraphError as exc:
        sys.stderr.write(str(exc) + "\n")
        return EXIT_INVALID
    except HypothesisError as exc:
        sys.stderr.write(str(exc) + "\n")
        return EXIT_HYPOTHESIS


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
