import { describe, expect, it } from "vitest";

import { RankedRow } from "../src/api";
import { rankArrows, tiedEntities } from "../src/ranks";

function row(entity: string, rank: number, score: number): RankedRow {
  return { entity, rank, score, proportion: score / 10 };
}

// rankings recorded from the compute engine on the raw demo table:
// baseline, and after halving France's unemployment rate (a cost
// criterion) — France climbs from third to second
const BASELINE = [
  row("Germany", 1, 0.83), row("United Kingdom", 2, 0.70), row("France", 3, 0.57),
  row("Poland", 4, 0.45), row("Italy", 5, 0.32), row("Spain", 6, 0.30),
];
const HALVED_FRANCE = [
  row("Germany", 1, 0.83), row("France", 2, 0.72), row("United Kingdom", 3, 0.70),
  row("Poland", 4, 0.45), row("Italy", 5, 0.32), row("Spain", 6, 0.30),
];

describe("rank arrows", () => {
  it("points up for the entity whose cost indicator halved", () => {
    const arrows = rankArrows(BASELINE, HALVED_FRANCE);
    const france = arrows.find((a) => a.entity === "France")!;
    expect(france.oldRank).toBe(3);
    expect(france.newRank).toBe(2);
    expect(france.direction).toBe("up");
  });

  it("marks displaced entities down and untouched ones same", () => {
    const arrows = rankArrows(BASELINE, HALVED_FRANCE);
    expect(arrows.find((a) => a.entity === "United Kingdom")!.direction).toBe("down");
    expect(arrows.find((a) => a.entity === "Germany")!.direction).toBe("same");
    expect(arrows.find((a) => a.entity === "Poland")!.direction).toBe("same");
  });

  it("is a no-op for identical rankings", () => {
    const arrows = rankArrows(BASELINE, BASELINE);
    expect(arrows.every((a) => a.direction === "same")).toBe(true);
    expect(arrows.every((a) => !a.tied)).toBe(true);
  });

  it("lists arrows in current-rank order", () => {
    const arrows = rankArrows(BASELINE, HALVED_FRANCE);
    expect(arrows.map((a) => a.newRank)).toEqual([1, 2, 3, 4, 5, 6]);
  });

  it("covers each entity exactly once", () => {
    const arrows = rankArrows(BASELINE, HALVED_FRANCE);
    expect([...new Set(arrows.map((a) => a.entity))]).toHaveLength(6);
  });

  it("rejects rankings over different entities", () => {
    expect(() => rankArrows(BASELINE, [row("Atlantis", 1, 0.9)])).toThrow();
  });

  it("flags exact score ties (server orders them by name)", () => {
    const tiedRanking = [
      row("Alpha", 1, 0.5), row("Beta", 2, 0.5), row("Gamma", 3, 0.2),
    ];
    expect([...tiedEntities(tiedRanking)].sort()).toEqual(["Alpha", "Beta"]);
    const arrows = rankArrows(tiedRanking, tiedRanking);
    expect(arrows.find((a) => a.entity === "Alpha")!.tied).toBe(true);
    expect(arrows.find((a) => a.entity === "Gamma")!.tied).toBe(false);
    expect(arrows.map((a) => a.entity)).toEqual(["Alpha", "Beta", "Gamma"]);
  });
});
