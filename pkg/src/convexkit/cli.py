"""Command-line front end: ``convexkit <command> ... FILE``.

JSON on stdout is the stable interface; ``--format text`` is for people.
Exit codes: 0 success (including legitimate "not found" answers), 1 failed
verification suite, 2 unreadable or malformed input, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .convexity import ConvexityKind, hull, is_convex
from .digital import bipartite_dconvex_2partition, dconvex_cover, min_total_dominating_set
from .exact import exact_cover, exact_partition
from .graph import (
    Graph,
    GraphFormatError,
    bipartition,
    complement,
    format_graph,
    is_connected,
    members,
    read_graph,
)
from .limits import SizeCapError
from .mono import build_gadget_mono, find_clique_separator, mconvex_2cover
from .p3 import build_gadget_p3, find_matching_cut, p3_partition_from_cut
from .suites import SUITES, run_suite

EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 1, 2, 3


def _parse_set(text: str, g: Graph) -> int:
    mask = 0
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        v = int(tok)
        if not 0 <= v < g.n:
            raise GraphFormatError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def _graph_doc(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _doc(problem, convexity=None, p=None, found=None, classes=None, witness=None, method=None, graph=None, **extra):
    doc = {
        "problem": problem,
        "convexity": None if convexity is None else str(convexity),
        "p": p,
        "found": found,
        "classes": classes,
        "witness": witness,
        "method": method,
        "graph": graph,
    }
    doc.update(extra)
    return doc


def _solve(g: Graph, problem: str, kind: ConvexityKind, p: int, method: str):
    """Returns (family or None, witness, method actually used)."""
    if method == "paper":
        if problem == "cover" and kind is ConvexityKind.DIGITAL:
            fam = dconvex_cover(g, p)
            tds = min_total_dominating_set(complement(g)) if fam is not None else None
            return fam, None if tds is None else {"total_dominating_set_of_complement": members(tds)}, "paper"
        if problem == "cover" and kind is ConvexityKind.MONOPHONIC and p == 2:
            fam = mconvex_2cover(g)
            witness = None
            if fam is not None and is_connected(g):
                sep = find_clique_separator(g)
                if sep is not None:
                    witness = {"clique_separator": members(sep)}
            return fam, witness, "paper"
        if problem == "partition" and kind is ConvexityKind.P3 and p == 2:
            cut = find_matching_cut(g)
            if cut is None:
                return None, None, "paper"
            return p3_partition_from_cut(g, cut), {"matching_cut_edges": [list(e) for e in cut.crossing_edges(g)]}, "paper"
        if problem == "partition" and kind is ConvexityKind.DIGITAL and p == 2 and bipartition(g) is not None:
            return bipartite_dconvex_2partition(g), None, "paper"
    solver = exact_cover if problem == "cover" else exact_partition
    return solver(g, kind, p), None, "oracle"


def _emit(args, doc: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc))
    else:
        print(text)


def cmd_check(args) -> int:
    g = read_graph(args.file)
    s = _parse_set(args.set, g)
    ok = is_convex(g, args.convexity, s)
    doc = _doc("check", args.convexity, found=ok, classes=[members(s)], graph=_graph_doc(g), convex=ok)
    _emit(args, doc, f"{members(s)} is {'' if ok else 'not '}{args.convexity}-convex")
    return 0


def cmd_hull(args) -> int:
    g = read_graph(args.file)
    s = _parse_set(args.set, g)
    h = members(hull(g, args.convexity, s))
    doc = _doc("hull", args.convexity, found=True, classes=[h], graph=_graph_doc(g), hull=h)
    _emit(args, doc, " ".join(map(str, h)))
    return 0


def cmd_family(args) -> int:
    g = read_graph(args.file)
    kind = ConvexityKind(args.convexity)
    fam, witness, used = _solve(g, args.command, kind, args.p, args.method)
    classes = None if fam is None else fam.as_lists()
    doc = _doc(args.command, kind, args.p, fam is not None, classes, witness, used, _graph_doc(g))
    if fam is None:
        text = f"no {kind} convex {args.p}-{args.command}"
    else:
        text = "\n".join(" ".join(map(str, c)) for c in classes)
    _emit(args, doc, text)
    return 0


def cmd_gadget(args) -> int:
    g = read_graph(args.file)
    if args.kind == "p3":
        if args.p is None:
            raise SystemExit("gadget p3 needs -p")
        gr = build_gadget_p3(g, args.p)
        params = {"r": gr.r}
    else:
        gr = build_gadget_mono(g)
        params = {}
    embed, extra = list(gr.embed), members(gr.extra)
    doc = _doc(
        f"gadget-{args.kind}", p=args.p, found=True, method="paper", graph=_graph_doc(gr.gprime),
        embed=embed, extra=extra, **params,
    )
    comments = [f"embed: {' '.join(map(str, embed))}", f"extra: {' '.join(map(str, extra))}"]
    comments += [f"{k}: {v}" for k, v in params.items()]
    _emit(args, doc, format_graph(gr.gprime, comments).rstrip("\n"))
    return 0


def cmd_tds(args) -> int:
    g = read_graph(args.file)
    tds = min_total_dominating_set(g)
    found = tds is not None
    sol = members(tds) if found else None
    doc = _doc("tds", found=found, witness=sol, graph=_graph_doc(g), size=None if sol is None else len(sol))
    _emit(args, doc, " ".join(map(str, sol)) if found else "none (isolated vertex)")
    return 0


def cmd_matching_cut(args) -> int:
    g = read_graph(args.file)
    cut = find_matching_cut(g)
    if cut is None:
        _emit(args, _doc("matching-cut", found=False, graph=_graph_doc(g)), "none")
        return 0
    classes = [members(cut.a), members(cut.b)]
    edges = [list(e) for e in cut.crossing_edges(g)]
    doc = _doc("matching-cut", found=True, classes=classes, witness=edges, graph=_graph_doc(g))
    _emit(args, doc, f"{classes[0]} | {classes[1]} crossing {edges}")
    return 0


def cmd_clique_separator(args) -> int:
    g = read_graph(args.file)
    if not is_connected(g):
        raise GraphFormatError("clique-separator needs a connected graph")
    sep = find_clique_separator(g)
    found = sep is not None
    doc = _doc("clique-separator", found=found, witness=members(sep) if found else None, graph=_graph_doc(g))
    _emit(args, doc, " ".join(map(str, members(sep))) if found else "none")
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name) for name in names]
    if args.format == "json":
        print(json.dumps([
            {"suite": r.name, "ok": r.ok, "checked": r.checked, "seconds": round(r.seconds, 3),
             "failures": r.failures, "notes": r.notes}
            for r in results
        ]))
    else:
        for r in results:
            print(r.line())
            for f in r.failures:
                print(f"    {f}")
    return 0 if all(r.ok for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], help="default: json (text for verify)")

    kinds = [k.value for k in ConvexityKind]
    parser = argparse.ArgumentParser(prog="convexkit", description="Graph convexity covers and partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func in (("check", cmd_check), ("hull", cmd_hull)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--convexity", choices=kinds, required=True)
        sp.add_argument("--set", required=True, help="comma separated vertices, e.g. 0,2,5")
        sp.add_argument("file")
        sp.set_defaults(func=func)

    for name in ("cover", "partition"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--convexity", choices=kinds, required=True)
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("--method", choices=["paper", "oracle"], default="paper")
        sp.add_argument("file")
        sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("gadget", parents=[common])
    sp.add_argument("kind", choices=["p3", "mono"])
    sp.add_argument("-p", type=int)
    sp.add_argument("file")
    sp.set_defaults(func=cmd_gadget)

    for name, func in (("tds", cmd_tds), ("matching-cut", cmd_matching_cut), ("clique-separator", cmd_clique_separator)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("suite", choices=list(SUITES) + ["all"])
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "text" if args.command == "verify" else "json"
    try:
        return args.func(args)
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
