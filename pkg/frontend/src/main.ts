// DOM wiring for the explorer: fixture picker, clickable polygon edges and
// quiver vertices, mutation side toggle, undo, badges, error banner, and a
// short polygon animation between states.

import { Api } from "./api.js";
import { gramHtml, polygonSvg, quiverSvg } from "./render.js";
import { Explorer, ViewState } from "./state.js";

const SERVICE = (window as { DELPEZZO_SERVICE?: string }).DELPEZZO_SERVICE ??
  "http://127.0.0.1:8023";

const api = new Api(SERVICE);
const explorer = new Explorer(api);

const el = (id: string) => document.getElementById(id)!;

function banner(msg: string | null): void {
  const b = el("banner");
  b.textContent = msg ?? "";
  b.style.display = msg ? "block" : "none";
}

function side(): "left" | "right" {
  const checked = document.querySelector(
    'input[name="side"]:checked',
  ) as HTMLInputElement | null;
  return checked?.value === "left" ? "left" : "right";
}

function drawState(state: ViewState): void {
  el("polygon-box").innerHTML = polygonSvg(state.polygon);
  el("quiver-box").innerHTML = quiverSvg(state.quiver);
  el("gram-box").innerHTML = gramHtml(state.gram);
  el("rank-badge").textContent = `total rank ${state.totalRank}`;
  const badge = el("minimal-badge");
  badge.textContent = state.minimal ? "minimal" : "not minimal";
  badge.className = state.minimal ? "badge ok" : "badge warn";
  el("undo-btn").toggleAttribute("disabled", explorer.history.length <= 1);
  el("history-count").textContent = `${explorer.history.length - 1} moves`;
}

function animateTo(prev: ViewState | null, next: ViewState): void {
  if (!prev || prev.polygon.length !== next.polygon.length) {
    drawState(next);
    return;
  }
  const frames = 12;
  let k = 0;
  const tick = () => {
    k += 1;
    const t = k / frames;
    const mix = prev.polygon.map((v, i) => [
      v[0] + (next.polygon[i][0] - v[0]) * t,
      v[1] + (next.polygon[i][1] - v[1]) * t,
    ]);
    el("polygon-box").innerHTML = polygonSvg(mix);
    if (k < frames) requestAnimationFrame(tick);
    else drawState(next);
  };
  requestAnimationFrame(tick);
}

async function loadSelected(): Promise<void> {
  banner(null);
  const sel = el("fixture-select") as HTMLSelectElement;
  const [surface, b, n] = sel.value.split("|");
  try {
    const state = await explorer.load(surface, [Number(b), Number(n)]);
    drawState(state);
  } catch (err) {
    banner(String(err instanceof Error ? err.message : err));
  }
}

async function mutateAt(index: number): Promise<void> {
  banner(null);
  const prev = explorer.current;
  try {
    const state = await explorer.mutate(index, side());
    animateTo(prev, state);
  } catch (err) {
    banner(String(err instanceof Error ? err.message : err));
  }
}

async function init(): Promise<void> {
  try {
    const surfaces = await explorer.surfaces();
    const sel = el("fixture-select") as HTMLSelectElement;
    for (const s of surfaces) {
      for (const fx of s.fixtures) {
        const opt = document.createElement("option");
        opt.value = `${s.id}|${fx.label[0]}|${fx.label[1]}`;
        opt.textContent = `${s.id}  (${fx.label[0]}, ${fx.label[1]})`;
        sel.appendChild(opt);
      }
    }
  } catch (err) {
    banner(`service unreachable at ${SERVICE}: ${String(err)}`);
    return;
  }
  el("load-btn").addEventListener("click", () => void loadSelected());
  el("undo-btn").addEventListener("click", () => {
    const state = explorer.undo();
    if (state) drawState(state);
  });
  el("polygon-box").addEventListener("click", (ev) => {
    const target = (ev.target as Element).closest("[data-edge]");
    if (target) void mutateAt(Number(target.getAttribute("data-edge")));
  });
  el("quiver-box").addEventListener("click", (ev) => {
    const target = (ev.target as Element).closest("[data-vertex]");
    if (target) void mutateAt(Number(target.getAttribute("data-vertex")));
  });
  el("export-btn").addEventListener("click", () => {
    const blob = new Blob([JSON.stringify(explorer.recording)], {
      type: "application/json",
    });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "session.json";
    a.click();
  });
  void loadSelected();
}

void init();
