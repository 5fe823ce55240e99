/** Pure response-to-presentation mappers shared by the DOM layer and tests. */

import { AhpResponse } from "./api.js";
import { BarDatum } from "./charts.js";

/** Green below the 0.1 consistency threshold, red at or above it. */
export function badgeClass(consistent: boolean): "ok" | "bad" {
  return consistent ? "ok" : "bad";
}

export function badgeText(resp: AhpResponse): string {
  return `CR = ${resp.cr.toFixed(4)} (λₘₐₓ ${resp.lambda_max.toFixed(3)})`;
}

/** Weight bars, heaviest criterion first. */
export function orderedBars(resp: AhpResponse): BarDatum[] {
  return resp.labels
    .map((label, i) => ({ label, value: resp.weights[i] }))
    .sort((a, b) => b.value - a.value || a.label.localeCompare(b.label));
}
