import init, { generate, transform, analyze, classify } from "./pkg/tournament_wasm.js";

const $ = (id) => document.getElementById(id);
const canvas = $("canvas");
const ctx = canvas.getContext("2d");

let trn = null;
let graph = null;
let selected = null;

function positions(n) {
  const r = canvas.width / 2 - 30;
  const c = canvas.width / 2;
  return Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [c + r * Math.cos(a), c + r * Math.sin(a)];
  });
}

function arrow(from, to, color, radius) {
  const [x1, y1] = from;
  const [x2, y2] = to;
  const d = Math.hypot(x2 - x1, y2 - y1);
  const ux = (x2 - x1) / d;
  const uy = (y2 - y1) / d;
  const ex = x2 - ux * radius;
  const ey = y2 - uy * radius;
  ctx.strokeStyle = color;
  ctx.fillStyle = color;
  ctx.beginPath();
  ctx.moveTo(x1 + ux * radius, y1 + uy * radius);
  ctx.lineTo(ex, ey);
  ctx.stroke();
  ctx.beginPath();
  ctx.moveTo(ex, ey);
  ctx.lineTo(ex - 8 * ux + 4 * uy, ey - 8 * uy - 4 * ux);
  ctx.lineTo(ex - 8 * ux - 4 * uy, ey - 8 * uy + 4 * ux);
  ctx.fill();
}

function draw() {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!graph) return;
  const pos = positions(graph.n);
  const radius = graph.n > 40 ? 4 : 10;
  for (const [i, j] of graph.arcs) {
    if (selected === null) arrow(pos[i], pos[j], "rgba(60,60,60,0.35)", radius);
    else if (i === selected) arrow(pos[i], pos[j], "#1f5fbf", radius);
    else if (j === selected) arrow(pos[i], pos[j], "#c06010", radius);
  }
  pos.forEach(([x, y], v) => {
    ctx.fillStyle = v === selected ? "#1f5fbf" : "#fff";
    ctx.strokeStyle = "#333";
    ctx.beginPath();
    ctx.arc(x, y, radius, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    if (graph.n <= 40) {
      ctx.fillStyle = v === selected ? "#fff" : "#000";
      ctx.font = "11px sans-serif";
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillText(String(v), x, y);
    }
  });
}

function show(text) {
  trn = text;
  graph = JSON.parse(analyze(text));
  selected = null;
  $("trn").textContent = text;
  $("tree").textContent = "";
  $("props").innerHTML = Object.entries(graph.props)
    .map(([k, v]) => `<tr><td>${k}</td><td class="${v ? "yes" : "no"}">${v}</td></tr>`)
    .join("");
  $("scores").textContent = `n = ${graph.n}, scores ${graph.scores.join(" ")}`;
  draw();
}

function guarded(f) {
  return () => {
    $("error").textContent = "";
    try {
      f();
    } catch (e) {
      $("error").textContent = String(e);
    }
  };
}

canvas.addEventListener("click", (ev) => {
  if (!graph) return;
  const rect = canvas.getBoundingClientRect();
  const x = ev.clientX - rect.left;
  const y = ev.clientY - rect.top;
  const hit = positions(graph.n).findIndex(([px, py]) => Math.hypot(px - x, py - y) < 12);
  selected = hit < 0 || hit === selected ? null : hit;
  draw();
});

await init();
$("generate").onclick = guarded(() => show(generate($("source").value)));
$("double").onclick = guarded(() => trn && show(transform(trn, "double")));
$("rdouble").onclick = guarded(() => trn && show(transform(trn, "rdouble")));
$("classify").onclick = guarded(() => {
  if (trn) $("tree").textContent = JSON.stringify(JSON.parse(classify(trn)), null, 2);
});
guarded(() => show(generate($("source").value)))();
