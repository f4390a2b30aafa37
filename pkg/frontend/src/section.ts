// SVG rendering of x3 = 1 section plots for 3-alternative problems.
// Coordinates come straight from the geometry endpoint.

import { GeometryReport, SectionPlot } from "./types.js";

const SIZE = 360;
const PAD = 36;

interface Bounds {
  min: number;
  max: number;
}

function bounds(plots: SectionPlot[]): Bounds {
  const values: number[] = [];
  for (const plot of plots) {
    for (const [x, y] of plot.points) values.push(x, y);
    for (const seg of plot.segments) for (const [x, y] of seg) values.push(x, y);
  }
  if (!values.length) return { min: 0, max: 1 };
  const min = Math.min(...values);
  const max = Math.max(...values);
  const margin = (max - min || 1) * 0.15;
  return { min: min - margin, max: max + margin };
}

function scale(value: number, b: Bounds): number {
  return PAD + ((value - b.min) / (b.max - b.min)) * (SIZE - 2 * PAD);
}

function plotShapes(plot: SectionPlot, b: Bounds, color: string, cls: string): string {
  const parts: string[] = [];
  for (const [[x1, y1], [x2, y2]] of plot.segments) {
    parts.push(
      `<line class="${cls}" x1="${scale(x1, b)}" y1="${SIZE - scale(y1, b)}" ` +
        `x2="${scale(x2, b)}" y2="${SIZE - scale(y2, b)}" stroke="${color}" stroke-width="3"/>`,
    );
  }
  plot.points.forEach(([x, y], index) => {
    const label = plot.labels[index] ?? "";
    parts.push(
      `<circle class="${cls}" cx="${scale(x, b)}" cy="${SIZE - scale(y, b)}" r="4" fill="${color}">` +
        `<title>${label} (${x}, ${y})</title></circle>`,
    );
  });
  return parts.join("");
}

/** SVG section chart: priority span, most (red) and least (blue) solutions. */
export function renderSectionChart(geometry: GeometryReport): string {
  const plots = [
    geometry.priority_span,
    geometry.least_differentiating,
    ...geometry.most_differentiating,
  ];
  const b = bounds(plots);
  const axes =
    `<line x1="${PAD}" y1="${SIZE - PAD}" x2="${SIZE - PAD}" y2="${SIZE - PAD}" stroke="#999"/>` +
    `<line x1="${PAD}" y1="${PAD}" x2="${PAD}" y2="${SIZE - PAD}" stroke="#999"/>`;
  const spans = plotShapes(geometry.priority_span, b, "#888", "span");
  const least = plotShapes(geometry.least_differentiating, b, "#2563eb", "least");
  const most = geometry.most_differentiating
    .map((plot) => plotShapes(plot, b, "#dc2626", "most"))
    .join("");
  return (
    `<svg class="section-chart" viewBox="0 0 ${SIZE} ${SIZE}" role="img" ` +
    `aria-label="Section of the score cone at x3 = 1">${axes}${spans}${least}${most}</svg>`
  );
}
