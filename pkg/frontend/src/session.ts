/**
 * Client-side session state: the upper triangle of the judgment matrix as
 * scale picks (the lower triangle is always the exact reciprocal), the
 * editable indicator table with per-cell slider factors, and the last
 * server responses.
 */

import { AhpResponse, AllocateResponse, IndicatorsBody, RankedRow } from "./api.js";
import { Rational, label, reciprocal, value } from "./saaty.js";

export interface IndicatorTable extends IndicatorsBody {
  directions: Record<string, string>;
}

export interface SessionState {
  labels: string[];
  picks: Record<string, Rational>; // "i,j" with 1-based i < j
  indicators: IndicatorTable | null;
  factors: Record<string, number>; // "entity|criterion" -> multiplier
  lastAhp: AhpResponse | null;
  baselineRanking: RankedRow[] | null;
  lastAllocation: AllocateResponse | null;
}

export const PRESET_LABELS = [
  "land_area_per_capita",
  "gdp",
  "unemployment_rate",
  "public_welfare_index",
];

// published baseline judgments for the preset button
export const PRESET_PICKS: Record<string, Rational> = {
  "1,2": { num: 1, den: 2 },
  "1,3": { num: 1, den: 4 },
  "1,4": { num: 2, den: 1 },
  "2,3": { num: 1, den: 2 },
  "2,4": { num: 3, den: 1 },
  "3,4": { num: 5, den: 1 },
};

export function cellKey(i: number, j: number): string {
  return `${i},${j}`;
}

export function newSession(labels: string[]): SessionState {
  if (labels.length < 2) throw new Error("need at least 2 criteria");
  const picks: Record<string, Rational> = {};
  for (let i = 1; i <= labels.length; i++) {
    for (let j = i + 1; j <= labels.length; j++) {
      picks[cellKey(i, j)] = { num: 1, den: 1 };
    }
  }
  return {
    labels: [...labels],
    picks,
    indicators: null,
    factors: {},
    lastAhp: null,
    baselineRanking: null,
    lastAllocation: null,
  };
}

export function paperPreset(): SessionState {
  const state = newSession(PRESET_LABELS);
  return { ...state, picks: { ...state.picks, ...PRESET_PICKS } };
}

export function setPick(state: SessionState, i: number, j: number, pick: Rational): SessionState {
  const key = cellKey(i, j);
  if (!(key in state.picks)) throw new Error(`not an upper-triangle cell: (${i},${j})`);
  return { ...state, picks: { ...state.picks, [key]: pick } };
}

/** Full matrix for the API: 1 diagonal, picks above, exact reciprocals below. */
export function matrixEntries(state: SessionState): number[][] {
  const n = state.labels.length;
  const entries: number[][] = Array.from({ length: n }, (_, r) =>
    Array.from({ length: n }, (_, c) => (r === c ? 1 : 0)),
  );
  for (let i = 1; i <= n; i++) {
    for (let j = i + 1; j <= n; j++) {
      const pick = state.picks[cellKey(i, j)];
      entries[i - 1][j - 1] = value(pick);
      entries[j - 1][i - 1] = value(reciprocal(pick));
    }
  }
  return entries;
}

/** What a cell displays: the pick above the diagonal, its mirror below. */
export function displayCell(state: SessionState, row: number, col: number): string {
  if (row === col) return "1";
  if (row < col) return label(state.picks[cellKey(row, col)]);
  return label(reciprocal(state.picks[cellKey(col, row)]));
}

export function factorKey(entity: string, criterion: string): string {
  return `${entity}|${criterion}`;
}

export function setFactor(
  state: SessionState, entity: string, criterion: string, factor: number,
): SessionState {
  if (factor < 0.25 || factor > 4) throw new Error(`slider factor out of range: ${factor}`);
  return { ...state, factors: { ...state.factors, [factorKey(entity, criterion)]: factor } };
}

export function resetFactors(state: SessionState): SessionState {
  return { ...state, factors: {} };
}

/** Indicator values with the current slider factors applied. */
export function perturbedValues(table: IndicatorsBody, factors: Record<string, number>): number[][] {
  return table.values.map((row, e) =>
    row.map((cell, c) => {
      const factor = factors[factorKey(table.entities[e], table.criteria[c])];
      return factor === undefined ? cell : cell * factor;
    }),
  );
}
