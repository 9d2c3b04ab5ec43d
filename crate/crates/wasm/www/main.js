import init, { Clip, View, fit_curve } from "./pkg/lbf_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);
const SCALE = 2;

let clip = null;
let picked = null;

function report(err) {
  $("error").textContent = err ? String(err.message ?? err) : "";
}

function fmtDb(v) {
  return Number.isFinite(v) ? v.toFixed(2) + " dB" : "inf";
}

function draw(canvasId, view, index) {
  const canvas = $(canvasId);
  const w = clip.width, h = clip.height;
  canvas.width = w;
  canvas.height = h;
  canvas.style.width = `${w * SCALE}px`;
  canvas.style.height = `${h * SCALE}px`;
  const rgba = clip.frame_rgba(view, index);
  canvas.getContext("2d").putImageData(new ImageData(new Uint8ClampedArray(rgba), w, h), 0, 0);
}

function drawFrames() {
  const index = num("frame");
  $("frame-label").textContent = `${index} / ${clip.frame_count - 1}`;
  draw("original", View.Original, index);
  draw("decoded", View.Decoded, index);
  draw("mask", View.Mask, index);
}

function drawCurve() {
  if (!clip || !picked) return;
  const values = clip.pixel_trajectory(picked.x, picked.y);
  const fit = fit_curve(values, num("lambda"), num("delta"));
  const keys = Array.from(fit.keypixels);
  const decoded = fit.decoded;
  $("pixel-info").textContent =
    `pixel (${picked.x}, ${picked.y}): ${keys.length} keypixels of ${values.length} frames, ` +
    `worst segment MSE ${fit.max_segment_mse.toFixed(2)}`;
  fit.free();

  const canvas = $("curve");
  const ctx = canvas.getContext("2d");
  const pad = 20;
  const x = (i) => pad + (i * (canvas.width - 2 * pad)) / Math.max(1, values.length - 1);
  const y = (v) => canvas.height - pad - (v * (canvas.height - 2 * pad)) / 255;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#ccc";
  ctx.strokeRect(pad, pad, canvas.width - 2 * pad, canvas.height - 2 * pad);

  ctx.strokeStyle = "#888";
  ctx.beginPath();
  values.forEach((v, i) => (i ? ctx.lineTo(x(i), y(v)) : ctx.moveTo(x(i), y(v))));
  ctx.stroke();

  ctx.strokeStyle = "#c22";
  ctx.beginPath();
  keys.forEach((k, i) => (i ? ctx.lineTo(x(k), y(decoded[k])) : ctx.moveTo(x(k), y(decoded[k]))));
  ctx.stroke();
  ctx.fillStyle = "#c22";
  for (const k of keys) ctx.fillRect(x(k) - 2, y(decoded[k]) - 2, 5, 5);
}

function encode() {
  try {
    report(null);
    clip?.free();
    clip = new Clip(num("w"), num("h"), num("n"), num("noise"), 7n);
    const stats = clip.encode(num("lambda"), num("delta"));
    $("stats").textContent =
      `keypixels ${(100 * stats.keypixel_fraction).toFixed(2)} %, ` +
      `entropy ${stats.entropy_bpp.toFixed(3)} bits/symbol, PSNR ${fmtDb(stats.psnr_db)}`;
    stats.free();
    $("frame").max = clip.frame_count - 1;
    $("frame").value = Math.min(num("frame"), clip.frame_count - 1);
    if (picked && (picked.x >= clip.width || picked.y >= clip.height)) picked = null;
    drawFrames();
    drawCurve();
  } catch (err) {
    report(err);
  }
}

function sweep() {
  if (!clip) return;
  try {
    report(null);
    const lambdas = new Float64Array($("lambdas").value.split(",").map(Number));
    $("csv").textContent = clip.sweep(lambdas, num("delta"));
  } catch (err) {
    report(err);
  }
}

await init();
$("encode").addEventListener("click", encode);
$("sweep").addEventListener("click", sweep);
$("frame").addEventListener("input", () => clip && drawFrames());
$("original").addEventListener("click", (ev) => {
  const rect = ev.target.getBoundingClientRect();
  picked = {
    x: Math.floor(((ev.clientX - rect.left) / rect.width) * clip.width),
    y: Math.floor(((ev.clientY - rect.top) / rect.height) * clip.height),
  };
  try {
    drawCurve();
  } catch (err) {
    report(err);
  }
});
encode();
