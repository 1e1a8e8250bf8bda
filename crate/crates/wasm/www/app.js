import init, { decompose, local_search, generate } from "./pkg/kconn_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);
const palette = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"];
const NS = "http://www.w3.org/2000/svg";

function parse(text) {
  const rows = text.split("\n").map((l) => l.split("#")[0].trim()).filter((l) => l);
  const [n] = rows[0].split(/\s+/).map(Number);
  const edges = rows.slice(1).map((r) => r.split(/\s+/).map(Number));
  return { n, edges };
}

function el(name, attrs) {
  const e = document.createElementNS(NS, name);
  for (const [k, v] of Object.entries(attrs)) e.setAttribute(k, v);
  return e;
}

// Vertices on a circle; `color` maps a vertex to a fill, `hot` marks edges.
function draw({ color = () => "#999", hot = () => false } = {}) {
  const svg = $("view");
  svg.replaceChildren();
  const defs = el("defs", {});
  const marker = el("marker", { id: "tip", viewBox: "0 0 10 10", refX: 10, refY: 5, markerWidth: 4, markerHeight: 4, orient: "auto" });
  marker.append(el("path", { d: "M0,0 L10,5 L0,10 z", fill: "#666" }));
  defs.append(marker);
  svg.append(defs);
  const { n, edges } = parse($("graph").value);
  const pos = Array.from({ length: n }, (_, i) => [Math.cos((2 * Math.PI * i) / n), Math.sin((2 * Math.PI * i) / n)]);
  const r = Math.min(0.08, 2 / n);
  for (const [a, b] of edges) {
    if (a === b) continue;
    const [x1, y1] = pos[a];
    const [x2, y2] = pos[b];
    const len = Math.hypot(x2 - x1, y2 - y1);
    const [dx, dy] = [(x2 - x1) / len, (y2 - y1) / len];
    svg.append(el("line", {
      x1: x1 + dx * r, y1: y1 + dy * r, x2: x2 - dx * r, y2: y2 - dy * r,
      stroke: hot(a, b) ? "#d62728" : "#bbb", "stroke-width": hot(a, b) ? 0.012 : 0.005, "marker-end": "url(#tip)",
    }));
  }
  pos.forEach(([x, y], v) => {
    svg.append(el("circle", { cx: x, cy: y, r, fill: color(v), stroke: "#333", "stroke-width": 0.004 }));
    const label = el("text", { x, y: y + r * 0.35, "font-size": r, "text-anchor": "middle", fill: "#fff" });
    label.textContent = v;
    svg.append(label);
  });
}

function report(text, isError = false) {
  $("out").textContent = text;
  $("out").className = isError ? "error" : "";
}

function guarded(action) {
  return () => {
    try {
      action();
    } catch (e) {
      report(String(e.message ?? e), true);
    }
  };
}

function onGenerate() {
  $("graph").value = generate($("family").value, num("a"), num("b"), num("c"), BigInt(num("seed")));
  draw();
  report("");
}

function onDecompose() {
  const result = JSON.parse(decompose($("graph").value, $("mode").value, num("k"), $("baseline").checked));
  const owner = new Map();
  result.components.forEach((c, i) => c.forEach((v) => owner.set(v, owner.has(v) ? "#000" : palette[i % palette.length])));
  draw({ color: (v) => owner.get(v) ?? "#ccc" });
  const lines = result.components.map((c) => c.join(" "));
  report(`${lines.length} components\n${lines.join("\n")}\n\n${JSON.stringify(result.stats, null, 1)}`);
}

function onSearch() {
  const r = JSON.parse(local_search($("graph").value, num("u"), num("delta"), $("kind").value, num("sk"), $("dir").value));
  const inside = new Set(r.vertices);
  const boundary = new Set(r.boundary.map(([a, b]) => `${a},${b}`));
  draw({
    color: (v) => (v === r.separating_vertex ? "#ff7f0e" : inside.has(v) ? "#2ca02c" : "#ccc"),
    hot: (a, b) => boundary.has(`${a},${b}`),
  });
  report(r.found
    ? `set: ${r.vertices.join(" ")}\nboundary: ${r.boundary.map((e) => e.join("->")).join(", ") || "none"}\nseparating vertex: ${r.separating_vertex ?? "none"}\nedges scanned: ${r.edges_scanned}`
    : `no small component; edges scanned: ${r.edges_scanned}`);
}

await init();
$("gen").onclick = guarded(onGenerate);
$("run").onclick = guarded(onDecompose);
$("search").onclick = guarded(onSearch);
$("graph").onchange = guarded(() => draw());
guarded(onGenerate)();
