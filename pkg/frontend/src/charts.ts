/**
 * Dependency-free SVG builders. Pure string generation so the chart
 * geometry is unit-testable without a DOM.
 */

export interface BarDatum {
  label: string;
  value: number;
}

const esc = (s: string) => s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

export function barChartSVG(data: BarDatum[], width = 420, height = 0): string {
  const rowH = 26;
  const labelW = 170;
  const h = height || data.length * rowH + 8;
  const maxValue = Math.max(...data.map((d) => d.value), 1e-12);
  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${h}" width="${width}" height="${h}" role="img">`,
  ];
  data.forEach((d, i) => {
    const y = 4 + i * rowH;
    const barW = ((width - labelW - 60) * d.value) / maxValue;
    parts.push(
      `<text x="${labelW - 6}" y="${y + 15}" text-anchor="end" class="bar-label">${esc(d.label)}</text>`,
      `<rect x="${labelW}" y="${y + 2}" width="${Math.max(barW, 1)}" height="${rowH - 8}" class="bar" rx="3"></rect>`,
      `<text x="${labelW + barW + 6}" y="${y + 15}" class="bar-value">${d.value.toFixed(4)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}

export function linePath(points: Array<[number, number]>): string {
  return points.map(([x, y], i) => `${i === 0 ? "M" : "L"}${x.toFixed(2)},${y.toFixed(2)}`).join(" ");
}

export interface ForecastChartData {
  observed: number[];
  fitted: number[];
  forecast: number[];
  asymptote: number | null;
  saturationTime: number | null; // 0-based curve offset
}

export function forecastChartSVG(data: ForecastChartData, width = 640, height = 320): string {
  const margin = { top: 16, right: 16, bottom: 26, left: 70 };
  const innerW = width - margin.left - margin.right;
  const innerH = height - margin.top - margin.bottom;
  const curve = [...data.fitted, ...data.forecast];
  const xMax = Math.max(curve.length - 1, data.observed.length - 1, data.saturationTime ?? 0, 1);
  const yCandidates = [...data.observed, ...curve];
  if (data.asymptote !== null) yCandidates.push(data.asymptote);
  const yMax = Math.max(...yCandidates) * 1.05;

  const sx = (t: number) => margin.left + (t / xMax) * innerW;
  const sy = (v: number) => margin.top + innerH - (v / yMax) * innerH;

  const parts = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" width="${width}" height="${height}" role="img">`,
    `<line x1="${margin.left}" y1="${margin.top + innerH}" x2="${margin.left + innerW}" y2="${margin.top + innerH}" class="axis"></line>`,
    `<line x1="${margin.left}" y1="${margin.top}" x2="${margin.left}" y2="${margin.top + innerH}" class="axis"></line>`,
  ];
  if (data.asymptote !== null) {
    const y = sy(data.asymptote);
    parts.push(
      `<line x1="${margin.left}" y1="${y.toFixed(2)}" x2="${margin.left + innerW}" y2="${y.toFixed(2)}" class="asymptote" stroke-dasharray="6 4"></line>`,
      `<text x="${margin.left + innerW - 4}" y="${(y - 6).toFixed(2)}" text-anchor="end" class="annotation">asymptote ${Math.round(data.asymptote).toLocaleString()}</text>`,
    );
  }
  parts.push(`<path d="${linePath(curve.map((v, t) => [sx(t), sy(v)]))}" class="curve" fill="none"></path>`);
  if (data.saturationTime !== null) {
    const x = sx(data.saturationTime);
    parts.push(
      `<line x1="${x.toFixed(2)}" y1="${margin.top}" x2="${x.toFixed(2)}" y2="${margin.top + innerH}" class="saturation" stroke-dasharray="2 4"></line>`,
      `<text x="${(x + 4).toFixed(2)}" y="${margin.top + 12}" class="annotation">saturates @ ${data.saturationTime + 1}</text>`,
    );
  }
  data.observed.forEach((v, t) => {
    parts.push(`<circle cx="${sx(t).toFixed(2)}" cy="${sy(v).toFixed(2)}" r="3.5" class="observed"></circle>`);
  });
  parts.push("</svg>");
  return parts.join("");
}
