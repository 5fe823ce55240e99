import { describe, expect, it } from "vitest";

import { AhpResponse } from "../src/api";
import { badgeClass, badgeText, orderedBars } from "../src/viewmodel";

// responses recorded from the compute engine
const PRESET_RESPONSE: AhpResponse = {
  labels: ["land_area_per_capita", "gdp", "unemployment_rate", "public_welfare_index"],
  weights: [0.142792, 0.264118, 0.506768, 0.086322],
  lambda_max: 4.02113,
  ci: 0.007043,
  ri: 0.9,
  cr: 0.007826,
  consistent: true,
};

// a>b 9, b>c 9, c>a 9: maximally cyclic judgments
const THREE_CYCLE_RESPONSE: AhpResponse = {
  labels: ["a", "b", "c"],
  weights: [1 / 3, 1 / 3, 1 / 3],
  lambda_max: 10.111111,
  ci: 3.555556,
  ri: 0.58,
  cr: 6.130268,
  consistent: false,
};

describe("consistency badge", () => {
  it("shows green for the baseline preset", () => {
    expect(badgeClass(PRESET_RESPONSE.consistent)).toBe("ok");
  });

  it("shows red for the 3-cycle judgments and displays the exact cr", () => {
    expect(badgeClass(THREE_CYCLE_RESPONSE.consistent)).toBe("bad");
    expect(badgeText(THREE_CYCLE_RESPONSE)).toContain("6.1303");
  });
});

describe("weight bars", () => {
  it("orders the preset bars unemployment > gdp > land area > welfare", () => {
    expect(orderedBars(PRESET_RESPONSE).map((bar) => bar.label)).toEqual([
      "unemployment_rate",
      "gdp",
      "land_area_per_capita",
      "public_welfare_index",
    ]);
  });

  it("breaks equal weights by label for a stable render", () => {
    expect(orderedBars(THREE_CYCLE_RESPONSE).map((bar) => bar.label)).toEqual(["a", "b", "c"]);
  });
});
