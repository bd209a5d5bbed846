"""Command-line interface.

Exit codes: 0 for success or a true verdict, 1 for a false verdict, 2 for
errors (bad usage, unreadable files, invalid input).  Verdict commands print
a one-line verdict followed by a JSON report.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from typing import Sequence

from . import catalog, io
from .expansion import ExpansionPatch
from .growth import grow
from .mapkernel import OrientedMap, dual, is_polyhedral, summarize
from .patchwork import Patch, boundary_weights
from .pipeline import (
    FamilySpec,
    MissingPF37,
    PolyhedralityFailed,
    check_admissible,
    expand_polyhedral,
    realize_family,
)
from .search import BoundsExhausted, SearchBounds, SearchStats, search_patch
from .sequences import parse_sequence

OK, FALSE, ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _emit(verdict: str | None, report: dict | None = None) -> None:
    if verdict is not None:
        print(verdict)
    if report is not None:
        print(json.dumps(report, indent=2, sort_keys=True))


def _load(ref: str):
    """Read ``ref`` as a file if it exists, else as a catalog name."""
    if os.path.exists(ref):
        return io.read(ref).obj
    if ref in catalog.PATCH_NAMES:
        return catalog.get_patch(ref)
    try:
        return catalog.get_seed(ref)
    except catalog.UnknownName:
        raise CliError(f"{ref!r} is neither a file nor a catalog name") from None


def _as_map(obj) -> OrientedMap:
    if isinstance(obj, OrientedMap):
        return obj
    raise CliError(f"expected a map, got a {io.kind_of(obj)}")


def _object_report(obj) -> dict:
    kind = io.kind_of(obj)
    patch = obj.patch if isinstance(obj, ExpansionPatch) else obj if isinstance(obj, Patch) else None
    M = patch.map if patch is not None else obj
    if patch is None:
        rep = {"kind": kind, "summary": summarize(M).as_dict()}
    else:
        degrees = Counter(M.degree(v) for v in range(M.num_vertices))
        rep = {"kind": kind, "r": patch.r, "num_vertices": M.num_vertices,
               "num_edges": M.num_edges, "degrees": dict(sorted(degrees.items()))}
        rep["inner_p_vector"] = patch.p_vector().as_dict()
        rep["boundary_weights"] = list(boundary_weights(patch).weights)
        rep["markers"] = [[m.kind, m.anchor, m.target1, m.target2] for m in patch.markers]
    if isinstance(obj, ExpansionPatch):
        rep["outer_tuple"] = list(obj.outer_tuple)
        ro = obj.roles
        rep["roles"] = {"m": ro.m, "n": ro.n, "s": ro.s, "i0": ro.i0}
    return rep


# commands

def cmd_validate(args) -> int:
    try:
        obj = io.read(args.file).obj
    except (io.FormatError, io.ValidationError) as exc:
        _emit(f"invalid: {exc}")
        return FALSE
    _emit(f"valid {io.kind_of(obj)}")
    return OK


def cmd_summary(args) -> int:
    _emit(None, _object_report(_load(args.file)))
    return OK


def cmd_dual(args) -> int:
    M = _as_map(_load(args.input))
    io.save(args.output, dual(M))
    return OK


def cmd_polyhedral_check(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, ExpansionPatch):
        obj = obj.patch
    M = obj.map if isinstance(obj, Patch) else obj
    rep = is_polyhedral(M)
    report = {"polyhedral": rep.ok, "witness": list(rep.witness) if rep.witness else None}
    if rep:
        _emit("polyhedral", report)
        return OK
    _emit(f"not polyhedral: faces ({rep.witness[0]}, {rep.witness[1]})", report)
    return FALSE


def cmd_admissible(args) -> int:
    rep = check_admissible(parse_sequence(args.p), parse_sequence(args.v), args.chi)
    _emit("admissible" if rep.admissible else "not admissible", rep.as_dict())
    return OK if rep.admissible else FALSE


def cmd_expand(args) -> int:
    M = _as_map(_load(args.seed))
    E = _load(args.patch)
    if not isinstance(E, ExpansionPatch):
        raise CliError("--patch must be an expansion patch")
    pf = _load(args.pf) if args.pf else None
    if isinstance(pf, ExpansionPatch):
        pf = pf.patch
    try:
        R = expand_polyhedral(M, E, pf)
    except PolyhedralityFailed as exc:
        _emit(f"not polyhedral: faces ({exc.witness[0]}, {exc.witness[1]})")
        return FALSE
    io.save(args.out, R)
    _emit("polyhedral", summarize(R).as_dict())
    return OK


def cmd_grow(args) -> int:
    P = _load(args.patch)
    patch = P.patch if isinstance(P, ExpansionPatch) else P
    if not isinstance(patch, Patch):
        raise CliError("--patch must be a patch")
    if not 0 <= args.marker < len(patch.markers):
        raise CliError(f"marker index {args.marker} out of range (patch has {len(patch.markers)})")
    m = patch.markers[args.marker]
    if m.kind != args.op:
        raise CliError(f"marker {args.marker} is a {m.kind} marker, not {args.op}")
    Q, _ = grow(P, m, args.k)
    io.save(args.out, Q)
    _emit(None, _object_report(Q))
    return OK


def cmd_realize(args) -> int:
    seed = _as_map(_load(args.seed))
    spec = FamilySpec(args.family, args.k, args.passes)
    pf = None
    if args.pf:
        pf = _load(args.pf)
        pf = pf.patch if isinstance(pf, ExpansionPatch) else pf
    try:
        rep = realize_family(seed, spec, pf)
    except PolyhedralityFailed as exc:
        _emit(f"not polyhedral: faces ({exc.witness[0]}, {exc.witness[1]})")
        return FALSE
    if args.out:
        io.save(args.out, rep.map)
    data = rep.as_dict()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    _emit(f"realized: c={rep.c}, d={rep.d}, polyhedral={str(rep.polyhedral).lower()}", data)
    return OK


def cmd_search(args) -> int:
    outer = tuple(int(x) for x in args.outer.split(","))
    gons = {int(x) for x in args.gons.split(",")}
    bounds = SearchBounds(args.max_faces, args.max_vertices, args.max_nodes)
    stats = SearchStats()
    try:
        P = search_patch(outer, args.r, gons, args.corners, bounds, stats)
    except BoundsExhausted as exc:
        _emit(f"inconclusive: {exc}", {"status": "bounds_exhausted", "nodes": stats.nodes,
                                       "inner_vertices": stats.inner_vertices})
        return FALSE
    if P is None:
        _emit("not found", {"status": "none_within_bounds", "nodes": stats.nodes})
        return FALSE
    if args.out:
        io.save(args.out, P)
    report = _object_report(P)
    report.update(status="found", nodes=stats.nodes)
    _emit("found", report)
    return OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.list_entries():
            print(name)
        return OK
    if not args.name:
        raise CliError("catalog show needs a name")
    if args.name in catalog.PATCH_NAMES:
        sys.stdout.write(catalog.raw_text(args.name))
    else:
        sys.stdout.write(io.write(catalog.get_seed(args.name)))
    return OK


def cmd_export_adj(args) -> int:
    obj = _load(args.file)
    if isinstance(obj, ExpansionPatch):
        obj = obj.patch
    M = obj.map if isinstance(obj, Patch) else obj
    lines = [f"{v}: " + " ".join(str(u) for u in M.neighbors(v)) for v in range(M.num_vertices)]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eberhard", description="Polyhedral maps from expansion patches.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="parse and validate a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("summary", help="print invariants of a file or catalog entry")
    p.add_argument("file")
    p.set_defaults(func=cmd_summary)

    p = sub.add_parser("dual", help="write the dual of a map")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("polyhedral-check", help="check that all faces meet properly")
    p.add_argument("file")
    p.set_defaults(func=cmd_polyhedral_check)

    p = sub.add_parser("admissible", help="check the Euler identities for p, v and chi")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--p", required=True, help='face counts, e.g. "3:4,5:12"')
    p.add_argument("--v", required=True, help='valence counts, e.g. "3:4"')
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("expand", help="expand a map with rings of an expansion patch")
    p.add_argument("--seed", required=True)
    p.add_argument("--patch", required=True)
    p.add_argument("--pf", help="patch for 4-gonal faces")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("grow", help="apply growth steps at a marker")
    p.add_argument("--patch", required=True)
    p.add_argument("--marker", type=int, required=True)
    p.add_argument("--op", choices=("square", "diamond", "vertex"), required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_grow)

    p = sub.add_parser("realize", help="realize a triangle family on a seed")
    p.add_argument("--seed", required=True)
    p.add_argument("--family", choices=("3:5", "3:7"), required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--passes", type=int, default=1)
    p.add_argument("--pf", help="4-gonal patch for the 3:7 family")
    p.add_argument("--out")
    p.add_argument("--report")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("search", help="search for a w-k-gonal patch")
    p.add_argument("--outer", required=True, help='side weights, e.g. "2,2"')
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--gons", required=True, help='allowed face sizes, e.g. "3,7"')
    p.add_argument("--corners", type=int, default=4)
    p.add_argument("--max-faces", type=int, default=64)
    p.add_argument("--max-vertices", type=int, default=96)
    p.add_argument("--max-nodes", type=int, default=2_000_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="list or show catalog entries")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("export-adj", help="write adjacency lists in rotation order")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_adj)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MissingPF37 as exc:
        print(f"error: MissingPF37: {exc}", file=sys.stderr)
        return ERROR
    except (CliError, OSError, ValueError, KeyError, RuntimeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
