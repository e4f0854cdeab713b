import init, { check, certify, mul, gap_curve } from "./pkg/groupring_web.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("err");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e.message ?? e);
  }
}

function plot(curve) {
  const canvas = $("plot");
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 30;
  ctx.clearRect(0, 0, w, h);
  const xs = curve.points.map((p) => Number(eval_rational(p.c)));
  const ys = curve.points.map((p) => p.gap_approx);
  const x0 = Math.min(...xs), x1 = Math.max(...xs);
  const y0 = Math.min(0, ...ys), y1 = Math.max(0, ...ys);
  const sx = (x) => pad + ((x - x0) / (x1 - x0 || 1)) * (w - 2 * pad);
  const sy = (y) => h - pad - ((y - y0) / (y1 - y0 || 1)) * (h - 2 * pad);

  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(pad, sy(0));
  ctx.lineTo(w - pad, sy(0));
  ctx.stroke();
  ctx.fillStyle = "#333";
  ctx.fillText(`c = ${x0}`, pad, h - 8);
  ctx.fillText(`c = ${x1}`, w - pad - 40, h - 8);
  ctx.fillText("gap = 0", 2, sy(0) - 4);

  const t = curve.threshold_approx;
  if (t >= x0 && t <= x1) {
    ctx.strokeStyle = "#c80";
    ctx.setLineDash([4, 4]);
    ctx.beginPath();
    ctx.moveTo(sx(t), pad);
    ctx.lineTo(sx(t), h - pad);
    ctx.stroke();
    ctx.setLineDash([]);
  }

  ctx.strokeStyle = "#36c";
  ctx.beginPath();
  xs.forEach((x, k) => (k ? ctx.lineTo(sx(x), sy(ys[k])) : ctx.moveTo(sx(x), sy(ys[k]))));
  ctx.stroke();
  curve.points.forEach((p, k) => {
    ctx.fillStyle = p.verdict === "regular" ? "#2a2" : "#c33";
    ctx.fillRect(sx(xs[k]) - 2, sy(ys[k]) - 2, 4, 4);
  });
}

function eval_rational(s) {
  const [n, d] = s.split("/");
  return Number(n) / (d ? Number(d) : 1);
}

await init();

$("check").onclick = () => show($("check-out"), () => check($("group").value, $("expr").value));
$("certify").onclick = () => show($("check-out"), () => certify($("group").value, $("expr").value));
$("mul").onclick = () => show($("mul-out"), () => mul($("group").value, $("left").value, $("right").value));
$("curve").onclick = () => {
  const note = $("curve-note");
  note.classList.remove("err");
  try {
    const curve = JSON.parse(gap_curve($("group").value, $("rest").value, $("cmin").value, $("cmax").value, 80));
    note.textContent = `${curve.group}, rest = ${curve.rest}: regular for c ≥ ${curve.threshold_approx.toFixed(6)} (approx.)`;
    plot(curve);
  } catch (e) {
    note.classList.add("err");
    note.textContent = String(e.message ?? e);
  }
};
