"""Machine-readable classification tables: one JSON data file per surface
with the labelled minimal block-complete collections, the mutation relations
connecting them, and the symmetry-orbit certificates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .collection import Collection, from_data

SURFACE_IDS = ["P2", "P1xP1", "X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8"]


@dataclass(frozen=True)
class FixtureEntry:
    surface: str
    label: tuple[int, int]
    alphas: tuple[int, ...]
    ranks: tuple[int, ...]
    reduced_gram: tuple
    reduced_quiver: tuple[int, ...]
    collection_blocks: tuple
    orbit: object  # "trivial" | "reflections" | {"certificate": [...]} | None

    def collection(self) -> Collection:
        objs = [o for blk in self.collection_blocks for o in blk]
        return from_data(self.surface, objs, [len(b) for b in self.collection_blocks])


@dataclass(frozen=True)
class Relation:
    surface: str
    source: tuple[int, int]
    target: object          # (b, n) or the string "3*"
    sequence: tuple[int, ...]


def _raw(kind: str) -> dict:
    text = resources.files("delpezzo").joinpath(f"data/{kind}.json").read_text()
    return json.loads(text)


def load_surface_fixtures(kind: str) -> list[FixtureEntry]:
    raw = _raw(kind)
    out = []
    for lab in raw["labels"]:
        out.append(FixtureEntry(
            surface=kind,
            label=tuple(lab["label"]),
            alphas=tuple(lab["alphas"]),
            ranks=tuple(lab["ranks"]),
            reduced_gram=tuple(tuple(r) for r in lab["reduced_gram"]),
            reduced_quiver=tuple(lab["reduced_quiver"]),
            collection_blocks=tuple(tuple(tuple([o[0], tuple(o[1])]) for o in blk)
                                    for blk in lab["collection_blocks"]),
            orbit=lab["orbit"],
        ))
    return out


def load_relations(kind: str) -> list[Relation]:
    raw = _raw(kind)
    out = []
    for rel in raw["relations"]:
        tgt = rel["target"]
        out.append(Relation(kind, tuple(rel["source"]),
                            "3*" if tgt == "3*" else tuple(tgt),
                            tuple(rel["sequence"])))
    return out


def all_fixtures() -> list[FixtureEntry]:
    return [e for kind in SURFACE_IDS for e in load_surface_fixtures(kind)]


def fixture(kind: str, label) -> FixtureEntry:
    for e in load_surface_fixtures(kind):
        if e.label == tuple(label):
            return e
    raise KeyError(f"no fixture {label} on {kind}")
