import init, { hypersurface_report, semigroup_report, gorenstein_grid } from "./pkg/normcone_web.js";

const $ = (id) => document.getElementById(id);

const CLASS_COLOR = {
  reduced_hypersurface: "#1b7837",
  nonreduced_hypersurface: "#7fbf7b",
  complete_intersection: "#5aae61",
  not_gorenstein: "#d9d9d9",
};

function clear(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.font = "11px system-ui, sans-serif";
  return ctx;
}

// large entries arrive as decimal strings; the plots only need a magnitude
const num = (v) => (typeof v === "string" ? Number(v) : v);

function drawHVector(canvas, h) {
  const ctx = clear(canvas);
  if (!h) {
    ctx.fillText("h-vector not determined", 10, 20);
    return;
  }
  const vals = h.map(num);
  const top = Math.max(...vals, 1);
  const pad = 24;
  const w = (canvas.width - 2 * pad) / vals.length;
  const scale = (canvas.height - 2 * pad) / top;
  vals.forEach((v, i) => {
    const x = pad + i * w;
    const y = canvas.height - pad - v * scale;
    ctx.fillStyle = "#4c72b0";
    ctx.fillRect(x + 2, y, w - 4, v * scale);
    ctx.fillStyle = "#222";
    ctx.fillText(String(h[i]), x + w / 2 - 4, y - 4);
    ctx.fillText("h" + i, x + w / 2 - 6, canvas.height - 8);
  });
}

// cells x^k y^j with j >= n_k lie in the ideal; shade the complement
function drawStaircase(canvas, stairs) {
  const ctx = clear(canvas);
  const a = stairs.length;
  const top = Math.max(...stairs.map(([, n]) => n), 1) + 1;
  const pad = 24;
  const cw = (canvas.width - 2 * pad) / a;
  const ch = (canvas.height - 2 * pad) / top;
  const base = canvas.height - pad;
  for (const [k, n] of stairs) {
    ctx.fillStyle = "#c6dbef";
    ctx.fillRect(pad + k * cw, base - n * ch, cw, n * ch);
    ctx.fillStyle = "#08519c";
    ctx.beginPath();
    ctx.arc(pad + k * cw + cw / 2, base - n * ch, 4, 0, 2 * Math.PI);
    ctx.fill();
  }
  ctx.fillStyle = "#222";
  ctx.fillText("k (power of x) →", canvas.width - 110, canvas.height - 6);
  ctx.fillText("n_k", 2, 14);
}

function drawStrip(canvas, members) {
  const ctx = clear(canvas);
  const w = Math.max(2, Math.min(20, (canvas.width - 10) / members.length));
  members.forEach((inS, x) => {
    ctx.fillStyle = inS ? "#08306b" : "#f0f0f0";
    ctx.fillRect(5 + x * w, 10, w - 1, 24);
    if (w >= 14) {
      ctx.fillStyle = inS ? "#fff" : "#888";
      ctx.fillText(String(x), 5 + x * w + 2, 26);
    }
  });
  ctx.fillStyle = "#222";
  ctx.fillText("everything from here on is in S", 5, 52);
}

function summarize(report) {
  const inv = report.invariants;
  const lines = [
    `gorenstein: ${report.verdicts.gorenstein.status}`,
    ...report.verdicts.gorenstein.reasons.map((r) => `  ${r.criterion} ${r.status}: ${r.detail}`),
    `e0 = ${inv.e0}, e1 = ${inv.e1}, lambda = ${inv.lambda}`,
    `reduction number ${inv.reduction_number}, bound ${inv.bound}, maximal ${inv.maximal}`,
    `h-vector (${(inv.h_vector || []).join(", ")})`,
    `H(n): ${inv.length_table.join(" ")}`,
  ];
  if (report.verdicts.ring_class) lines.splice(1, 0, `ring class: ${report.verdicts.ring_class}`);
  for (const note of report.provenance.notes) lines.push(`note: ${note}`);
  return lines.join("\n");
}

function guarded(errorId, fn) {
  return () => {
    $(errorId).textContent = "";
    try {
      fn();
    } catch (e) {
      $(errorId).textContent = e.message || String(e);
    }
  };
}

const updateHypersurface = guarded("hs-error", () => {
  const doc = JSON.parse(hypersurface_report(+$("hs-a").value, +$("hs-b").value, +$("hs-m").value));
  drawStaircase($("hs-staircase"), doc.staircase);
  drawHVector($("hs-hvector"), doc.report.invariants.h_vector);
  $("hs-summary").textContent = summarize(doc.report);
});

const updateSemigroup = guarded("sg-error", () => {
  const doc = JSON.parse(semigroup_report($("sg-gens").value));
  drawStrip($("sg-strip"), doc.members);
  drawHVector($("sg-hvector"), doc.report.invariants.h_vector);
  $("sg-summary").textContent = summarize(doc.report);
});

let grid = null;

const updateGrid = guarded("grid-error", () => {
  grid = JSON.parse(gorenstein_grid(+$("grid-a").value, +$("grid-b").value));
  const canvas = $("grid");
  const ctx = clear(canvas);
  const rows = grid.rows;
  const cols = rows[0].length;
  const cw = canvas.width / cols;
  const ch = canvas.height / rows.length;
  rows.forEach((row, i) => {
    row.forEach((cell, j) => {
      if (!cell) return;
      ctx.fillStyle = CLASS_COLOR[cell.class];
      ctx.fillRect(j * cw, i * ch, Math.ceil(cw), Math.ceil(ch));
      if (cell.class === "complete_intersection" && cw > 4) {
        ctx.strokeStyle = "#00441b";
        ctx.strokeRect(j * cw + 0.5, i * ch + 0.5, cw - 1, ch - 1);
      }
    });
  });
});

$("grid").addEventListener("mousemove", (ev) => {
  if (!grid) return;
  const canvas = $("grid");
  const rect = canvas.getBoundingClientRect();
  const i = Math.floor(((ev.clientY - rect.top) / rect.height) * grid.rows.length);
  const j = Math.floor(((ev.clientX - rect.left) / rect.width) * grid.rows[0].length);
  const cell = grid.rows[i] && grid.rows[i][j];
  const a = i + 2;
  const b = j + 2;
  $("grid-hover").textContent = cell
    ? `a = ${a}, b = ${b}: ${cell.class.replace(/_/g, " ")}, r = ${cell.r}${cell.max_emb ? ", maximal embedding dimension" : ""}`
    : `a = ${a}, b = ${b}: needs b >= a`;
});

$("grid").addEventListener("click", () => {
  const text = $("grid-hover").textContent.match(/a = (\d+), b = (\d+)/);
  if (!text) return;
  $("hs-a").value = text[1];
  $("hs-b").value = text[2];
  updateHypersurface();
  $("hs-a").scrollIntoView({ behavior: "smooth" });
});

await init();
for (const id of ["hs-a", "hs-b", "hs-m"]) $(id).addEventListener("input", updateHypersurface);
$("sg-gens").addEventListener("input", updateSemigroup);
for (const id of ["grid-a", "grid-b"]) $(id).addEventListener("input", updateGrid);
updateHypersurface();
updateSemigroup();
updateGrid();
