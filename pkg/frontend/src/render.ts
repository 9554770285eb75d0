// SVG markup for the polygon and the quiver.  Coordinates arrive as exact
// integers from the service and are converted to pixel floats only here, at
// the final draw step.

const W = 420;
const H = 420;
const PAD = 30;

export interface Projection {
  sx: number;
  sy: number;
  ox: number;
  oy: number;
}

export function projectionFor(vertices: number[][]): Projection {
  const xs = vertices.map((v) => v[0]).concat([0]);
  const ys = vertices.map((v) => v[1]).concat([0]);
  const minx = Math.min(...xs);
  const maxx = Math.max(...xs);
  const miny = Math.min(...ys);
  const maxy = Math.max(...ys);
  const sx = (W - 2 * PAD) / Math.max(maxx - minx, 1e-9);
  const sy = (H - 2 * PAD) / Math.max(maxy - miny, 1e-9);
  const s = Math.min(sx, sy);
  return { sx: s, sy: s, ox: PAD - minx * s, oy: H - PAD + miny * s };
}

export function toPixel(p: Projection, v: number[]): [number, number] {
  return [v[0] * p.sx + p.ox, p.oy - v[1] * p.sy];
}

function f(x: number): string {
  return x.toFixed(2);
}

// Every edge is a clickable segment carrying its index; the edge of E_i runs
// from vertex i-1 to vertex i (cyclically), matching the service convention.
export function polygonSvg(vertices: number[][]): string {
  const proj = projectionFor(vertices);
  const n = vertices.length;
  const parts: string[] = [
    `<svg viewBox="0 0 ${W} ${H}" xmlns="http://www.w3.org/2000/svg">`,
  ];
  for (let i = 0; i < n; i++) {
    const [x1, y1] = toPixel(proj, vertices[(i - 1 + n) % n]);
    const [x2, y2] = toPixel(proj, vertices[i]);
    parts.push(
      `<line class="edge" data-edge="${i}" x1="${f(x1)}" y1="${f(y1)}"` +
        ` x2="${f(x2)}" y2="${f(y2)}"/>`,
    );
    parts.push(
      `<text class="edge-label" x="${f((x1 + x2) / 2)}" y="${f((y1 + y2) / 2 - 5)}">E${i}</text>`,
    );
  }
  for (const v of vertices) {
    const [x, y] = toPixel(proj, v);
    parts.push(`<circle class="vertex" cx="${f(x)}" cy="${f(y)}" r="3.5"/>`);
  }
  const [ox, oy] = toPixel(proj, [0, 0]);
  parts.push(`<circle class="origin" cx="${f(ox)}" cy="${f(oy)}" r="4.5"/>`);
  parts.push("</svg>");
  return parts.join("");
}

// Quiver vertices on a circle; arrows with multiplicity labels; vertices are
// clickable mutation targets.
export function quiverSvg(arrows: number[][]): string {
  const n = arrows.length;
  const cx = W / 2;
  const cy = H / 2;
  const rad = W / 2 - 50;
  const pos: [number, number][] = [];
  for (let i = 0; i < n; i++) {
    const a = -Math.PI / 2 + (2 * Math.PI * i) / n;
    pos.push([cx + rad * Math.cos(a), cy + rad * Math.sin(a)]);
  }
  const parts: string[] = [
    `<svg viewBox="0 0 ${W} ${H}" xmlns="http://www.w3.org/2000/svg">`,
    `<defs><marker id="arrowhead" markerWidth="7" markerHeight="7" refX="6" refY="2.5" orient="auto"><polygon points="0 0, 6 2.5, 0 5"/></marker></defs>`,
  ];
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      const c = arrows[i][j];
      if (c === 0) continue;
      const [src, dst] = c > 0 ? [pos[i], pos[j]] : [pos[j], pos[i]];
      const t = 0.12;
      const x1 = src[0] + (dst[0] - src[0]) * t;
      const y1 = src[1] + (dst[1] - src[1]) * t;
      const x2 = src[0] + (dst[0] - src[0]) * (1 - t);
      const y2 = src[1] + (dst[1] - src[1]) * (1 - t);
      parts.push(
        `<line class="qarrow" x1="${f(x1)}" y1="${f(y1)}" x2="${f(x2)}"` +
          ` y2="${f(y2)}" marker-end="url(#arrowhead)"/>`,
      );
      parts.push(
        `<text class="qmult" x="${f((x1 + x2) / 2 + 6)}" y="${f((y1 + y2) / 2)}">${Math.abs(c)}</text>`,
      );
    }
  }
  for (let i = 0; i < n; i++) {
    const [x, y] = pos[i];
    parts.push(
      `<g class="qvertex" data-vertex="${i}">` +
        `<circle cx="${f(x)}" cy="${f(y)}" r="13"/>` +
        `<text x="${f(x)}" y="${f(y + 4)}">${i}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function gramHtml(gram: number[][]): string {
  const rows = gram
    .map(
      (row) =>
        "<tr>" + row.map((x) => `<td>${x}</td>`).join("") + "</tr>",
    )
    .join("");
  return `<table class="gram">${rows}</table>`;
}
