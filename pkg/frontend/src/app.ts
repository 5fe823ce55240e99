/**
 * DOM wiring for the three panels: judgment matrix editor, what-if
 * allocation sliders, and the forecast chart. All numbers shown here come
 * from the API; this file only collects inputs and renders responses.
 */

import {
  AhpResponse,
  AllocateResponse,
  ApiFailure,
  ForecastResponse,
  LatestOnly,
  postJson,
} from "./api.js";
import { barChartSVG, forecastChartSVG } from "./charts.js";
import { parseSeriesCsv } from "./csv.js";
import { ARROW_GLYPH, rankArrows } from "./ranks.js";
import { SAATY_PICKS, label, parseLabel } from "./saaty.js";
import {
  IndicatorTable,
  SessionState,
  cellKey,
  displayCell,
  factorKey,
  matrixEntries,
  paperPreset,
  perturbedValues,
  resetFactors,
  setFactor,
  setPick,
} from "./session.js";
import { badgeClass, badgeText, orderedBars } from "./viewmodel.js";

// mirrors data/indicators_raw_demo.csv (synthetic demo values)
const DEMO_TABLE: IndicatorTable = {
  entities: ["France", "Germany", "Italy", "Poland", "Spain", "United Kingdom"],
  criteria: ["gdp", "land_area_per_capita", "public_welfare_index", "unemployment_rate"],
  values: [
    [2181, 8300, 45, 10.4],
    [3026, 4300, 60, 4.6],
    [1655, 4900, 30, 11.9],
    [430, 8200, 27, 7.5],
    [1081, 10800, 33, 22.1],
    [2580, 3700, 57, 5.3],
  ],
  directions: {
    gdp: "benefit",
    land_area_per_capita: "benefit",
    public_welfare_index: "benefit",
    unemployment_rate: "cost",
  },
};

let state: SessionState = { ...paperPreset(), indicators: DEMO_TABLE };
const gate = new LatestOnly();

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

function showError(id: string, err: unknown): void {
  const box = $(id);
  const message = err instanceof ApiFailure ? `${err.code}: ${err.message}` : String(err);
  box.textContent = message;
  box.classList.remove("hidden");
}

function clearError(id: string): void {
  $(id).classList.add("hidden");
}

// -- judgment matrix panel ---------------------------------------------------

function renderMatrix(): void {
  const n = state.labels.length;
  const table = $("matrix");
  const header = ["<tr><th></th>", ...state.labels.map((l) => `<th>${l}</th>`), "</tr>"].join("");
  const rows: string[] = [header];
  for (let r = 1; r <= n; r++) {
    const cells = [`<th>${state.labels[r - 1]}</th>`];
    for (let c = 1; c <= n; c++) {
      if (r < c) {
        const current = label(state.picks[cellKey(r, c)]);
        const options = SAATY_PICKS.map((p) => {
          const text = label(p);
          const selected = text === current ? " selected" : "";
          return `<option value="${text}"${selected}>${text}</option>`;
        }).join("");
        cells.push(`<td><select data-cell="${cellKey(r, c)}">${options}</select></td>`);
      } else {
        const css = r === c ? "diag" : "mirror";
        cells.push(`<td class="${css}" data-mirror="${cellKey(c, r)}">${displayCell(state, r, c)}</td>`);
      }
    }
    rows.push(`<tr>${cells.join("")}</tr>`);
  }
  table.innerHTML = rows.join("");
  table.querySelectorAll<HTMLSelectElement>("select[data-cell]").forEach((select) => {
    select.addEventListener("change", () => {
      const [i, j] = select.dataset.cell!.split(",").map(Number);
      state = setPick(state, i, j, parseLabel(select.value));
      const mirror = table.querySelector(`td[data-mirror="${cellKey(i, j)}"]`);
      if (mirror) mirror.textContent = displayCell(state, j, i);
      void refreshWeights();
    });
  });
}

function renderWeights(resp: AhpResponse): void {
  state = { ...state, lastAhp: resp };
  $("weight-bars").innerHTML = barChartSVG(orderedBars(resp));
  const badge = $("cr-badge");
  badge.textContent = badgeText(resp);
  badge.className = `badge ${badgeClass(resp.consistent)}`;
  badge.title = resp.consistent
    ? "judgments pass the consistency check (CR < 0.1)"
    : "inconsistent judgments (CR ≥ 0.1): revise until the badge turns green";
}

async function refreshWeights(): Promise<void> {
  clearError("matrix-error");
  try {
    const resp = await gate.run("ahp", () =>
      postJson<AhpResponse>("/api/ahp", { matrix: matrixEntries(state), labels: state.labels }),
    );
    if (resp) renderWeights(resp);
  } catch (err) {
    showError("matrix-error", err); // edits stay in place
  }
}

// -- what-if allocation panel ----------------------------------------------------

function renderSliders(): void {
  const table = state.indicators!;
  const host = $("sliders");
  const rows = table.entities.map((entity) => {
    const cells = table.criteria.map((criterion) => {
      const key = factorKey(entity, criterion);
      const factor = state.factors[key] ?? 1;
      return `<td>
        <input type="range" min="0.25" max="4" step="0.05" value="${factor}"
               data-key="${key}" aria-label="${entity} ${criterion} factor">
        <span class="factor" data-factor="${key}">×${factor.toFixed(2)}</span>
      </td>`;
    });
    return `<tr><th>${entity}</th>${cells.join("")}</tr>`;
  });
  const header = ["<tr><th></th>", ...table.criteria.map((c) => `<th>${c} (${table.directions[c]})</th>`), "</tr>"];
  host.innerHTML = `<table>${header.join("")}${rows.join("")}</table>`;
  host.querySelectorAll<HTMLInputElement>("input[type=range]").forEach((slider) => {
    slider.addEventListener("input", () => {
      const [entity, criterion] = slider.dataset.key!.split("|");
      state = setFactor(state, entity, criterion, Number(slider.value));
      const tag = host.querySelector(`span[data-factor="${slider.dataset.key}"]`);
      if (tag) tag.textContent = `×${Number(slider.value).toFixed(2)}`;
      void refreshAllocation();
    });
  });
}

function allocateBody(values: number[][]) {
  const table = state.indicators!;
  return {
    matrix: matrixEntries(state),
    labels: state.labels,
    indicators: { entities: table.entities, criteria: table.criteria, values },
    directions: table.directions,
    normalized: false,
  };
}

function renderRanking(resp: AllocateResponse, asBaseline = false): void {
  state = { ...state, lastAllocation: resp };
  if (asBaseline || !state.baselineRanking) {
    state = { ...state, baselineRanking: resp.ranking };
  }
  const arrows = rankArrows(state.baselineRanking!, resp.ranking);
  const rows = arrows.map((arrow) => {
    const row = resp.ranking.find((r) => r.entity === arrow.entity)!;
    const cls = arrow.direction === "same" ? "same" : arrow.direction;
    const tie = arrow.tied ? ` <span class="tie" title="score tied; entities shown in name order">tie</span>` : "";
    return `<tr>
      <td>${arrow.newRank}</td><td>${arrow.entity}${tie}</td>
      <td class="arrow ${cls}">${arrow.oldRank} ${ARROW_GLYPH[arrow.direction]} ${arrow.newRank}</td>
      <td>${row.score.toFixed(6)}</td><td>${(row.proportion * 100).toFixed(2)}%</td>
    </tr>`;
  });
  $("ranking").innerHTML =
    `<table><tr><th>rank</th><th>entity</th><th>shift</th><th>score</th><th>share</th></tr>${rows.join("")}</table>`;
}

async function refreshAllocation(): Promise<void> {
  clearError("whatif-error");
  const table = state.indicators!;
  try {
    const resp = await gate.run("allocate", () =>
      postJson<AllocateResponse>("/api/allocate", allocateBody(perturbedValues(table, state.factors))),
    );
    if (resp) renderRanking(resp);
  } catch (err) {
    showError("whatif-error", err);
  }
}

async function initBaseline(): Promise<void> {
  // baseline ranking uses factor 1 everywhere
  try {
    const resp = await gate.run("allocate", () =>
      postJson<AllocateResponse>("/api/allocate", allocateBody(state.indicators!.values)),
    );
    if (resp) renderRanking(resp, true);
  } catch (err) {
    showError("whatif-error", err);
  }
}

// -- forecast panel -----------------------------------------------------------------

function renderForecast(resp: ForecastResponse): void {
  $("forecast-chart").innerHTML = forecastChartSVG({
    observed: resp.series.values,
    fitted: resp.fitted,
    forecast: resp.forecast,
    asymptote: resp.saturation?.value ?? null,
    saturationTime: resp.saturation ? resp.saturation.time : null,
  });
  const badge = $("grade-badge");
  if (resp.accuracy) {
    badge.textContent = `grade ${resp.accuracy.grade} (q=${resp.accuracy.q.toFixed(4)}, ` +
      `c=${resp.accuracy.c.toFixed(4)}, p=${resp.accuracy.p.toFixed(2)})`;
    badge.className = `badge ${resp.accuracy.grade === "I" || resp.accuracy.grade === "II" ? "ok" : "warn"}`;
  }
  badge.classList.remove("hidden");
}

async function runForecast(text: string): Promise<void> {
  clearError("forecast-error");
  try {
    const series = parseSeriesCsv(text);
    const resp = await gate.run("forecast", () =>
      postJson<ForecastResponse>("/api/forecast", { series, horizon: 12 }),
    );
    if (resp) renderForecast(resp);
  } catch (err) {
    showError("forecast-error", err);
  }
}

// -- bootstrapping ---------------------------------------------------------------------

export function start(): void {
  renderMatrix();
  renderSliders();
  void refreshWeights();
  void initBaseline();

  $("preset-button").addEventListener("click", () => {
    state = { ...paperPreset(), indicators: state.indicators, baselineRanking: state.baselineRanking };
    renderMatrix();
    void refreshWeights();
  });

  $("reset-sliders").addEventListener("click", () => {
    state = resetFactors(state);
    renderSliders();
    void refreshAllocation();
  });

  $<HTMLInputElement>("series-file").addEventListener("change", async (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files?.[0];
    if (file) void runForecast(await file.text());
  });

  $("series-run").addEventListener("click", () => {
    void runForecast($<HTMLTextAreaElement>("series-text").value);
  });
}

if (typeof document !== "undefined" && document.getElementById("matrix")) {
  start();
}
