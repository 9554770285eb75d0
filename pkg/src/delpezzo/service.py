"""Stateless JSON service over the library: validation, polygons, quivers,
mutations and minimality of collections, plus the fixture catalogue.

Schemas
-------
class:      {"r": int, "c1": [int...]} with "chi" required when r = 0
collection: {"surface": id, "objects": [class...], "blocks": [sizes]?}
polygon:    {"vertices": [[x, y]...]}
mutate:     {"collection": ..., "op": "quiver_mutate", "index": i,
             "side": "left"|"right"}
"""
from __future__ import annotations

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .collection import (Collection, CollectionError, detect_blocks, from_data,
                         gram_matrix, is_very_strong)
from .fixtures import SURFACE_IDS, load_surface_fixtures
from .mutation import (MutationError, is_minimal, quiver_mutate_left_tracked,
                       quiver_mutate_right_tracked, quiver_of)
from .polygon import PolygonError, polygon_of
from .surfaces import surface

app = FastAPI(title="delpezzo", docs_url=None, redoc_url=None)
app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                   allow_headers=["*"])


def _bad(reason: str, code: str = "invalid"):
    raise HTTPException(status_code=400, detail={"code": code, "reason": reason})


def parse_collection(payload) -> Collection:
    if not isinstance(payload, dict):
        _bad("collection must be an object")
    kind = payload.get("surface")
    if kind not in SURFACE_IDS:
        _bad(f"unknown surface {kind!r}", "unknown-surface")
    objs = payload.get("objects")
    if not isinstance(objs, list) or not objs:
        _bad("objects must be a non-empty list")
    s = surface(kind)
    data = []
    for i, o in enumerate(objs):
        if not isinstance(o, dict) or "r" not in o or "c1" not in o:
            _bad(f"object {i} must have fields r and c1")
        c1 = o["c1"]
        if not isinstance(c1, list) or len(c1) != s.picard_rank:
            _bad(f"object {i}: c1 must have length {s.picard_rank}",
                 "bad-c1-length")
        if o["r"] == 0:
            if "chi" not in o:
                _bad(f"object {i}: torsion class needs an explicit chi")
            data.append([o["r"], c1, o["chi"]])
        else:
            data.append([o["r"], c1])
    try:
        return from_data(kind, data, payload.get("blocks"))
    except (CollectionError, ValueError) as exc:
        _bad(str(exc), "not-exceptional")


def collection_json(c: Collection) -> dict:
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


def polygon_json(c: Collection) -> dict:
    p = polygon_of(c)
    return {"vertices": [[int(v[0]), int(v[1])] for v in p.vertices]}


@app.get("/surfaces")
def surfaces():
    out = []
    for kind in SURFACE_IDS:
        s = surface(kind)
        fixtures = []
        for entry in load_surface_fixtures(kind):
            fixtures.append({
                "label": list(entry.label),
                "alphas": list(entry.alphas),
                "ranks": list(entry.ranks),
                "collection": collection_json(entry.collection()),
            })
        out.append({"id": kind, "picard_rank": s.picard_rank, "k2": s.k2,
                    "length": s.rank_k0, "fixtures": fixtures})
    return {"surfaces": out}


@app.post("/collection/validate")
def validate(payload: dict = Body(...)):
    c = parse_collection(payload)
    try:
        vs = is_very_strong(c)
    except CollectionError:
        vs = False
    out = {"ok": True, "very_strong": vs, "total_rank": c.total_rank(),
           "full": c.is_full, "gram": [list(r) for r in gram_matrix(c)]}
    if vs and c.is_full:
        blocked, broken = detect_blocks(c.without_blocks())
        out["blocks"] = list(blocked.blocks)
        out["broken_blocks"] = broken
    return out


@app.post("/collection/polygon")
def polygon(payload: dict = Body(...)):
    c = parse_collection(payload)
    try:
        return polygon_json(c)
    except PolygonError as exc:
        _bad(str(exc), "no-polygon")


@app.post("/collection/quiver")
def quiver(payload: dict = Body(...)):
    c = parse_collection(payload)
    try:
        q = quiver_of(c)
    except (PolygonError, MutationError) as exc:
        _bad(str(exc), "no-quiver")
    return {"arrows": [list(r) for r in q.c]}


@app.post("/collection/minimal")
def minimal(payload: dict = Body(...)):
    c = parse_collection(payload)
    try:
        return {"minimal": is_minimal(c)}
    except (MutationError, CollectionError, PolygonError) as exc:
        _bad(str(exc), "not-very-strong")


@app.post("/collection/mutate")
def mutate(payload: dict = Body(...)):
    if not isinstance(payload, dict) or "collection" not in payload:
        _bad("request must carry a collection")
    if payload.get("op", "quiver_mutate") != "quiver_mutate":
        _bad(f"unknown op {payload.get('op')!r}", "unknown-op")
    c = parse_collection(payload["collection"])
    side = payload.get("side", "right")
    if side not in ("left", "right"):
        _bad("side must be left or right")
    index = payload.get("index")
    if not isinstance(index, int) or not 0 <= index < len(c):
        _bad(f"index must be an object position 0..{len(c) - 1}", "bad-index")
    try:
        if side == "right":
            step = quiver_mutate_right_tracked(c.without_blocks(), index)
        else:
            b = index if index >= 1 else len(c)
            step = quiver_mutate_left_tracked(c.without_blocks(), b)
    except (MutationError, CollectionError) as exc:
        _bad(str(exc), "mutation-failed")
    res = step.collection
    blocked, broken = detect_blocks(res)
    out = {
        "collection": collection_json(res),
        "polygon": polygon_json(res),
        "quiver": {"arrows": [list(r) for r in quiver_of(res).c]},
        "gram": [list(r) for r in gram_matrix(res)],
        "minimal": is_minimal(res),
        "total_rank": res.total_rank(),
        "blocks": list(blocked.blocks),
        "broken_blocks": broken,
        "positions": list(step.positions),
    }
    return out
