// Typed client for the delpezzo JSON service.  The explorer computes no
// mathematics of its own: every number shown in the UI comes verbatim from
// these responses.

export interface NumClassJson {
  r: number;
  c1: number[];
  chi?: number;
}

export interface CollectionJson {
  surface: string;
  objects: NumClassJson[];
  blocks?: number[];
}

export interface FixtureJson {
  label: number[];
  alphas: number[];
  ranks: number[];
  collection: CollectionJson;
}

export interface SurfaceJson {
  id: string;
  picard_rank: number;
  k2: number;
  length: number;
  fixtures: FixtureJson[];
}

export interface MutateResponse {
  collection: CollectionJson;
  polygon: { vertices: number[][] };
  quiver: { arrows: number[][] };
  gram: number[][];
  minimal: boolean;
  total_rank: number;
  blocks: number[];
  broken_blocks: boolean;
  positions: number[];
}

export type Fetcher = (url: string, init?: RequestInit) => Promise<Response>;

// Canonical request serialization: key order is fixed here so that recorded
// sessions replay byte-for-byte.
export function mutateBody(
  collection: CollectionJson,
  index: number,
  side: "left" | "right",
): string {
  return JSON.stringify({
    collection: { surface: collection.surface, objects: collection.objects },
    op: "quiver_mutate",
    index,
    side,
  });
}

export class Api {
  constructor(
    private base: string,
    private fetcher: Fetcher = (u, i) => fetch(u, i),
  ) {}

  private async post(path: string, body: string): Promise<unknown> {
    const res = await this.fetcher(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body,
    });
    const text = await res.text();
    if (!res.ok) {
      let reason = text;
      try {
        reason = (JSON.parse(text) as { detail: { reason: string } }).detail.reason;
      } catch {
        /* raw body */
      }
      throw new Error(reason);
    }
    return JSON.parse(text);
  }

  async surfaces(): Promise<SurfaceJson[]> {
    const res = await this.fetcher(this.base + "/surfaces");
    if (!res.ok) throw new Error(`service unreachable (${res.status})`);
    const data = (await res.json()) as { surfaces: SurfaceJson[] };
    return data.surfaces;
  }

  async polygon(c: CollectionJson): Promise<number[][]> {
    const body = JSON.stringify({ surface: c.surface, objects: c.objects });
    const data = (await this.post("/collection/polygon", body)) as {
      vertices: number[][];
    };
    return data.vertices;
  }

  async quiver(c: CollectionJson): Promise<number[][]> {
    const body = JSON.stringify({ surface: c.surface, objects: c.objects });
    const data = (await this.post("/collection/quiver", body)) as {
      arrows: number[][];
    };
    return data.arrows;
  }

  async validate(c: CollectionJson): Promise<{
    very_strong: boolean;
    total_rank: number;
    gram: number[][];
  }> {
    const body = JSON.stringify({ surface: c.surface, objects: c.objects });
    return (await this.post("/collection/validate", body)) as {
      very_strong: boolean;
      total_rank: number;
      gram: number[][];
    };
  }

  async gramAndMinimal(
    c: CollectionJson,
  ): Promise<{ minimal: boolean }> {
    const body = JSON.stringify({ surface: c.surface, objects: c.objects });
    return (await this.post("/collection/minimal", body)) as {
      minimal: boolean;
    };
  }

  async mutate(
    c: CollectionJson,
    index: number,
    side: "left" | "right",
  ): Promise<MutateResponse> {
    return (await this.post(
      "/collection/mutate",
      mutateBody(c, index, side),
    )) as MutateResponse;
  }
}
