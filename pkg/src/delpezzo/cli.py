"""Command line interface.

Collections are read as JSON ({"surface": ..., "objects": [...]}) from a file
argument or standard input.  Exit status is 0 exactly when every requested
check passed.
"""
from __future__ import annotations

import argparse
import json
import sys

from .collection import from_data, gram_matrix
from .fixtures import SURFACE_IDS
from .mutation import (is_minimal, quiver_mutate_left_tracked,
                       quiver_mutate_right_tracked, quiver_of,
                       reduce_to_block_complete)
from .polygon import polygon_of
from .svg import render_svg


def _read_collection(path):
    data = json.load(open(path) if path and path != "-" else sys.stdin)
    objs = []
    for o in data["objects"]:
        if o.get("r") == 0:
            objs.append([o["r"], o["c1"], o["chi"]])
        else:
            objs.append([o["r"], o["c1"]])
    return from_data(data["surface"], objs, data.get("blocks"))


def _collection_json(c):
    objs = []
    for e in c.objects:
        o = {"r": e.r, "c1": list(e.c1)}
        if e.r == 0:
            o["chi"] = e.chi
        objs.append(o)
    out = {"surface": c.surface.kind, "objects": objs}
    if c.blocks is not None:
        out["blocks"] = list(c.blocks)
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="delpezzo")
    sub = ap.add_subparsers(dest="cmd", required=True)

    for name in ("gram", "is-minimal", "reduce"):
        p = sub.add_parser(name)
        p.add_argument("collection", nargs="?", default="-",
                       help="collection JSON file (default stdin)")

    p = sub.add_parser("polygon")
    p.add_argument("collection", nargs="?", default="-")
    p.add_argument("--svg", metavar="OUT", help="write an SVG rendering")
    p.add_argument("--forbidden", action="store_true",
                   help="shade the forbidden region in the SVG")
    p.add_argument("--quiver", action="store_true",
                   help="overlay the quiver in the SVG")

    p = sub.add_parser("mutate")
    p.add_argument("collection", nargs="?", default="-")
    p.add_argument("--index", type=int, required=True,
                   help="object position to mutate at (0-based)")
    p.add_argument("--side", choices=("left", "right"), default="right")

    p = sub.add_parser("enumerate")
    p.add_argument("--surface", required=True, choices=SURFACE_IDS)
    p.add_argument("--blocks", type=int, required=True, choices=(3, 4))
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-fixtures")
    p.add_argument("--surface", choices=SURFACE_IDS, action="append")
    p = sub.add_parser("verify-relations")
    p.add_argument("--surface", choices=SURFACE_IDS, action="append")
    p = sub.add_parser("verify-certificates")
    p.add_argument("--surface", choices=SURFACE_IDS, action="append")

    p = sub.add_parser("serve")
    p.add_argument("--port", type=int, default=8023)
    p.add_argument("--host", default="127.0.0.1")

    args = ap.parse_args(argv)

    if args.cmd == "gram":
        c = _read_collection(args.collection)
        print(json.dumps([list(r) for r in gram_matrix(c)]))
        return 0

    if args.cmd == "polygon":
        c = _read_collection(args.collection)
        poly = polygon_of(c)
        doc = {"vertices": [[int(v[0]), int(v[1])] for v in poly.vertices]}
        if args.svg:
            svg = render_svg(poly, show_forbidden=args.forbidden,
                             quiver=args.quiver)
            if args.svg == "-":
                print(svg)
            else:
                with open(args.svg, "w") as fh:
                    fh.write(svg)
        print(json.dumps(doc))
        return 0

    if args.cmd == "mutate":
        c = _read_collection(args.collection)
        if args.side == "right":
            step = quiver_mutate_right_tracked(c.without_blocks(), args.index)
        else:
            b = args.index if args.index >= 1 else len(c)
            step = quiver_mutate_left_tracked(c.without_blocks(), b)
        res = step.collection
        out = {
            "collection": _collection_json(res),
            "polygon": {"vertices": [[int(v[0]), int(v[1])]
                                     for v in polygon_of(res).vertices]},
            "gram": [list(r) for r in gram_matrix(res)],
            "quiver": [list(r) for r in quiver_of(res).c],
            "minimal": is_minimal(res),
            "total_rank": res.total_rank(),
        }
        print(json.dumps(out))
        return 0

    if args.cmd == "is-minimal":
        c = _read_collection(args.collection)
        flag = is_minimal(c)
        print(json.dumps({"minimal": flag}))
        return 0 if flag else 1

    if args.cmd == "reduce":
        c = _read_collection(args.collection)
        red = reduce_to_block_complete(c)
        print(json.dumps(_collection_json(red)))
        return 0

    if args.cmd == "enumerate":
        from .classify import enumerate_minimal
        out = enumerate_minimal(args.surface, args.blocks)
        doc = [{"surface": c.surface, "alphas": list(c.alphas),
                "ranks": list(c.ranks), "chis": list(c.chis),
                "reduced_gram": [list(r) for r in c.reduced_gram]}
               for c in out]
        print(json.dumps(doc, indent=None if args.json else 1))
        return 0

    if args.cmd in ("verify-fixtures", "verify-relations", "verify-certificates"):
        from .verify import verify_certificates, verify_relations, verify_tables
        fn = {"verify-fixtures": verify_tables,
              "verify-relations": verify_relations,
              "verify-certificates": verify_certificates}[args.cmd]
        report = fn(args.surface)
        print(report.summary())
        return 0 if report.ok else 1

    if args.cmd == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
        return 0

    return 2


if __name__ == "__main__":
    sys.exit(main())
