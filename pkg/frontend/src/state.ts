// Explorer session state: the current view, the undo history, and a
// recording of user actions that can be replayed deterministically.  Every
// number in a ViewState was produced by the service; nothing is recomputed
// here.

import { Api, CollectionJson, SurfaceJson } from "./api.js";

export interface ViewState {
  surface: string;
  label: number[] | null;
  collection: CollectionJson;
  polygon: number[][];
  quiver: number[][];
  gram: number[][];
  minimal: boolean;
  totalRank: number;
}

export type ClickEvent =
  | { type: "load"; surface: string; label: number[] }
  | { type: "mutate"; index: number; side: "left" | "right" }
  | { type: "undo" };

// Canonical serialization with a fixed key order, so that a replayed session
// reproduces recorded states byte-for-byte.
export function stateJson(s: ViewState): string {
  return JSON.stringify({
    surface: s.surface,
    label: s.label,
    collection: { surface: s.collection.surface, objects: s.collection.objects },
    polygon: s.polygon,
    quiver: s.quiver,
    gram: s.gram,
    minimal: s.minimal,
    total_rank: s.totalRank,
  });
}

export class Explorer {
  history: ViewState[] = [];
  recording: ClickEvent[] = [];
  private surfacesCache: SurfaceJson[] | null = null;

  constructor(private api: Api) {}

  get current(): ViewState | null {
    return this.history.length ? this.history[this.history.length - 1] : null;
  }

  async surfaces(): Promise<SurfaceJson[]> {
    if (!this.surfacesCache) this.surfacesCache = await this.api.surfaces();
    return this.surfacesCache;
  }

  async load(surface: string, label: number[]): Promise<ViewState> {
    const all = await this.surfaces();
    const surf = all.find((s) => s.id === surface);
    if (!surf) throw new Error(`unknown surface ${surface}`);
    const fix = surf.fixtures.find(
      (f) => f.label[0] === label[0] && f.label[1] === label[1],
    );
    if (!fix) throw new Error(`unknown label (${label.join(", ")}) on ${surface}`);
    const collection = fix.collection;
    const [polygon, quiver, validation, minimal] = await Promise.all([
      this.api.polygon(collection),
      this.api.quiver(collection),
      this.api.validate(collection),
      this.api.gramAndMinimal(collection),
    ]);
    const state: ViewState = {
      surface,
      label,
      collection,
      polygon,
      quiver,
      gram: validation.gram,
      minimal: minimal.minimal,
      totalRank: validation.total_rank,
    };
    this.history = [state];
    this.recording.push({ type: "load", surface, label });
    return state;
  }

  async mutate(index: number, side: "left" | "right"): Promise<ViewState> {
    const cur = this.current;
    if (!cur) throw new Error("nothing loaded");
    const res = await this.api.mutate(cur.collection, index, side);
    const state: ViewState = {
      surface: cur.surface,
      label: null,
      collection: res.collection,
      polygon: res.polygon.vertices,
      quiver: res.quiver.arrows,
      gram: res.gram,
      minimal: res.minimal,
      totalRank: res.total_rank,
    };
    this.history.push(state);
    this.recording.push({ type: "mutate", index, side });
    return state;
  }

  undo(): ViewState | null {
    if (this.history.length > 1) {
      this.history.pop();
      this.recording.push({ type: "undo" });
    }
    return this.current;
  }
}

// Re-execute a recorded session; returns the canonical state JSON after each
// event.  Replaying the same recording against the same service must yield
// identical strings.
export async function replay(api: Api, events: ClickEvent[]): Promise<string[]> {
  const ex = new Explorer(api);
  const out: string[] = [];
  for (const ev of events) {
    if (ev.type === "load") await ex.load(ev.surface, ev.label);
    else if (ev.type === "mutate") await ex.mutate(ev.index, ev.side);
    else ex.undo();
    const cur = ex.current;
    out.push(cur ? stateJson(cur) : "null");
  }
  return out;
}
