/** Minimal parser for the `period,value` series CSV the forecast panel accepts. */

export interface SeriesData {
  periods: string[];
  values: number[];
}

export function parseSeriesCsv(text: string): SeriesData {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== "");
  if (lines.length < 2) throw new Error("need a header row plus at least one data row");
  const periods: string[] = [];
  const values: number[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== 2) {
      throw new Error(`line ${i + 1}: expected 2 columns, got ${cells.length}`);
    }
    const parsed = Number(cells[1]);
    if (!Number.isFinite(parsed)) {
      throw new Error(`line ${i + 1}: ${cells[1].trim()} is not a number`);
    }
    periods.push(cells[0].trim());
    values.push(parsed);
  }
  return { periods, values };
}
