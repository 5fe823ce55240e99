/**
 * Rank-shift presentation: pair each entity's old and new rank into an
 * arrow. The server already breaks score ties lexicographically; equal
 * scores are additionally flagged so the tie is visible.
 */

import { RankedRow } from "./api.js";

export type Direction = "up" | "down" | "same";

export interface RankArrow {
  entity: string;
  oldRank: number;
  newRank: number;
  direction: Direction;
  tied: boolean;
}

export function tiedEntities(rows: RankedRow[]): Set<string> {
  const byScore = new Map<number, string[]>();
  for (const row of rows) {
    const group = byScore.get(row.score) ?? [];
    group.push(row.entity);
    byScore.set(row.score, group);
  }
  const tied = new Set<string>();
  for (const group of byScore.values()) {
    if (group.length > 1) group.forEach((entity) => tied.add(entity));
  }
  return tied;
}

/** Arrows in current-rank order; baseline and current must cover the same entities. */
export function rankArrows(baseline: RankedRow[], current: RankedRow[]): RankArrow[] {
  const oldRanks = new Map(baseline.map((row) => [row.entity, row.rank]));
  if (baseline.length !== current.length || current.some((row) => !oldRanks.has(row.entity))) {
    throw new Error("baseline and current rankings cover different entities");
  }
  const tied = tiedEntities(current);
  return [...current]
    .sort((a, b) => a.rank - b.rank)
    .map((row) => {
      const oldRank = oldRanks.get(row.entity)!;
      const direction: Direction =
        row.rank < oldRank ? "up" : row.rank > oldRank ? "down" : "same";
      return { entity: row.entity, oldRank, newRank: row.rank, direction, tied: tied.has(row.entity) };
    });
}

export const ARROW_GLYPH: Record<Direction, string> = { up: "↑", down: "↓", same: "→" };
