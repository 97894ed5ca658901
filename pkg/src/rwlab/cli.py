"""Command-line workflows: generate family members, verify their structure,
evaluate decompositions, and extract certificates.

Exit codes: 0 success, 1 usage or I/O error, 2 a property check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import boundlab, gd_builder, graph_core, rankdec, tuple_order, verify

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PROPERTY = 2

HOLE_CAP_ENV = "RWLAB_MAX_HOLES"

CHECK_NAMES = (
    "diamond",
    "evenhole",
    "evenhole-structural",
    "cliquecutset",
    "parity-lemmas",
    "suffix",
    "large-color",
)

GRAPH_CHECKS = {"diamond", "evenhole", "evenhole-structural", "cliquecutset"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit_json(path: str | None, payload: dict) -> None:
    _write_text(path, json.dumps(payload, indent=2) + "\n")


def _usage(message: str) -> int:
    print(f"rwlab: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_gen(args) -> int:
    if args.d < 1:
        return _usage("depth must be at least 1")
    art = gd_builder.build_gd(args.d)
    if args.format == "edgelist":
        text = graph_core.write_edgelist(art.graph, include_labels=args.labels)
    elif args.format == "dimacs":
        text = graph_core.write_dimacs(art.graph, include_labels=args.labels)
    else:
        text = graph_core.to_dot(art.graph, include_labels=args.labels)
    try:
        _write_text(args.out, text)
    except OSError as exc:
        return _usage(f"cannot write {args.out}: {exc}")
    return EXIT_OK


def _labels_of(g: graph_core.Graph, vertices) -> list[str]:
    if g.labels is None:
        return [str(v) for v in vertices]
    return [graph_core.label_text(g.label(v)) for v in vertices]


def _run_one_check(name: str, d: int, art, cap: int) -> tuple[str, dict]:
    if name == "diamond":
        witness = verify.find_diamond(art.graph)
        if witness is None:
            return "pass", {}
        verts = witness.vertices()
        return "fail", {"vertices": list(verts), "labels": _labels_of(art.graph, verts)}
    if name == "evenhole":
        try:
            hole = verify.find_even_hole(art.graph, cap=cap)
        except verify.HoleOverflowError as exc:
            return "fail", {"overflow": True, "cap": exc.cap}
        if hole is None:
            return "pass", {}
        return "fail", {"vertices": list(hole), "labels": _labels_of(art.graph, hole)}
    if name == "evenhole-structural":
        holes = verify.structural_holes(art)
        even = [h for h in holes if h.length % 2 == 0]
        detail = {"holes": len(holes), "lengths_all_odd": not even}
        if even:
            bad = even[0]
            detail["vertices"] = list(bad.cycle)
            detail["labels"] = _labels_of(art.graph, bad.cycle)
            return "fail", detail
        return "pass", detail
    if name == "cliquecutset":
        witness = verify.find_clique_cutset(art.graph)
        if witness is None:
            return "pass", {}
        return "fail", {
            "clique": list(witness.clique),
            "clique_labels": _labels_of(art.graph, witness.clique),
            "separated": list(witness.separated),
        }
    if name == "parity-lemmas":
        report = tuple_order.check_parity_lemmas(d)
        return ("pass" if report.passed else "fail"), report.as_dict()
    if name == "suffix":
        report = boundlab.check_suffix_lemma(d)
        return ("pass" if report.passed else "fail"), report.as_dict()
    if name == "large-color":
        report = boundlab.check_large_color(d)
        if not report.passed:
            return "fail", report.as_dict()
        if all(entry.status == "skipped" for entry in report.entries):
            return "skip", report.as_dict()
        return "pass", report.as_dict()
    raise AssertionError(f"unknown check {name}")


def cmd_verify(args) -> int:
    if args.d < 1:
        return _usage("depth must be at least 1")
    names = [s.strip() for s in args.checks.split(",") if s.strip()]
    if not names:
        return _usage("no checks selected")
    unknown = [nm for nm in names if nm not in CHECK_NAMES]
    if unknown:
        return _usage(f"unknown checks: {', '.join(unknown)} (known: {', '.join(CHECK_NAMES)})")
    art = gd_builder.build_gd(args.d) if any(nm in GRAPH_CHECKS for nm in names) else None
    try:
        cap = int(os.environ.get(HOLE_CAP_ENV, verify.DEFAULT_HOLE_CAP))
    except ValueError:
        return _usage(f"{HOLE_CAP_ENV} must be an integer")
    results = []
    for name in names:
        t0 = time.perf_counter()
        status, detail = _run_one_check(name, args.d, art, cap)
        entry = {
            "name": name,
            "status": status,
            "elapsed_s": round(time.perf_counter() - t0, 6),
        }
        if detail:
            entry["detail"] = detail
        results.append(entry)
    passed = all(r["status"] != "fail" for r in results)
    report = {"schema": 1, "command": "verify", "d": args.d, "passed": passed, "checks": results}
    try:
        _emit_json(args.report, report)
    except OSError as exc:
        return _usage(f"cannot write {args.report}: {exc}")
    return EXIT_OK if passed else EXIT_PROPERTY


def cmd_width(args) -> int:
    try:
        g = graph_core.read_graph_text(_read_text(args.graph))
        dec = rankdec.parse_decomposition(_read_text(args.dec))
        report = rankdec.decomposition_width(g, dec)
    except (OSError, ValueError) as exc:
        return _usage(str(exc))
    payload = report.as_dict()
    payload["command"] = "width"
    _emit_json(args.report, payload)
    return EXIT_OK


def cmd_caterpillar(args) -> int:
    if args.d < 1:
        return _usage("depth must be at least 1")
    art = gd_builder.build_gd(args.d)
    dec = rankdec.caterpillar_decomposition(art)
    try:
        _write_text(args.out, rankdec.serialize_decomposition(dec))
    except OSError as exc:
        return _usage(f"cannot write {args.out}: {exc}")
    return EXIT_OK


def cmd_exact_rw(args) -> int:
    try:
        g = graph_core.read_graph_text(_read_text(args.graph))
        value, dec = rankdec.exact_rankwidth(g, limit=args.limit)
    except (OSError, ValueError) as exc:
        return _usage(str(exc))
    wrote = False
    if args.dec_out and dec is not None:
        try:
            _write_text(args.dec_out, rankdec.serialize_decomposition(dec))
        except OSError as exc:
            return _usage(f"cannot write {args.dec_out}: {exc}")
        wrote = True
    payload = {
        "schema": 1,
        "command": "exact-rw",
        "rankwidth": value,
        "decomposition_written": wrote,
    }
    _emit_json(args.report, payload)
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.d < 1:
        return _usage("depth must be at least 1")
    art = gd_builder.build_gd(args.d)
    try:
        dec = rankdec.parse_decomposition(_read_text(args.dec))
        cert = boundlab.extract_certificate(art, dec)
    except (OSError, ValueError) as exc:
        return _usage(str(exc))
    except RuntimeError as exc:
        print(f"rwlab: certificate failure: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    payload = cert.as_dict()
    payload["command"] = "certify"
    payload["d"] = args.d
    _emit_json(args.report, payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rwlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a family member to a graph file")
    gen.add_argument("-d", type=int, required=True, help="family depth (>= 1)")
    gen.add_argument("--format", choices=("edgelist", "dimacs", "dot"), default="edgelist")
    gen.add_argument("--labels", action="store_true", help="include vertex label comments")
    gen.add_argument("-o", "--out", default="-", help="output path, '-' for stdout")
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="run structural checks and emit a JSON report")
    ver.add_argument("-d", type=int, required=True)
    ver.add_argument("--checks", default=",".join(CHECK_NAMES), help="comma-separated check names")
    ver.add_argument("--report", default="-", help="report path, '-' for stdout")
    ver.set_defaults(func=cmd_verify)

    wid = sub.add_parser("width", help="evaluate a decomposition's per-edge widths")
    wid.add_argument("graph", help="graph file (edge list or DIMACS)")
    wid.add_argument("dec", help="decomposition file")
    wid.add_argument("--report", default="-")
    wid.set_defaults(func=cmd_width)

    cat = sub.add_parser("caterpillar", help="write the explicit caterpillar decomposition")
    cat.add_argument("-d", type=int, required=True)
    cat.add_argument("-o", "--out", default="-")
    cat.set_defaults(func=cmd_caterpillar)

    xrw = sub.add_parser("exact-rw", help="exact rank-width of a small graph file")
    xrw.add_argument("graph")
    xrw.add_argument("--dec-out", default=None, help="write a witness decomposition here")
    xrw.add_argument("--limit", type=int, default=16, help="vertex count limit")
    xrw.add_argument("--report", default="-")
    xrw.set_defaults(func=cmd_exact_rw)

    cert = sub.add_parser("certify", help="extract a lower-bound certificate for a decomposition")
    cert.add_argument("-d", type=int, required=True)
    cert.add_argument("--dec", required=True, help="decomposition file")
    cert.add_argument("--report", default="-")
    cert.set_defaults(func=cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
