import { describe, expect, it } from "vitest";

import { ApiFailure, LatestOnly, postJson } from "../src/api";

function fakeFetch(status: number, body: unknown) {
  return async () =>
    new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
}

describe("postJson", () => {
  it("returns the parsed body on success", async () => {
    const result = await postJson<{ ok: boolean }>("/api/x", {}, fakeFetch(200, { ok: true }));
    expect(result.ok).toBe(true);
  });

  it("surfaces structured domain errors", async () => {
    const err = await postJson("/api/x", {}, fakeFetch(400, {
      error: { code: "SeriesTooShort", message: "need n >= 4" },
    })).catch((e) => e);
    expect(err).toBeInstanceOf(ApiFailure);
    expect(err.status).toBe(400);
    expect(err.code).toBe("SeriesTooShort");
    expect(err.message).toContain("n >= 4");
  });

  it("surfaces validation errors", async () => {
    const err = await postJson("/api/x", {}, fakeFetch(422, { detail: "matrix must be square" }))
      .catch((e) => e);
    expect(err).toBeInstanceOf(ApiFailure);
    expect(err.status).toBe(422);
    expect(err.message).toContain("square");
  });
});

describe("LatestOnly", () => {
  it("drops responses superseded by a newer request", async () => {
    const gate = new LatestOnly();
    let releaseFirst!: (v: string) => void;
    const first = gate.run("k", () => new Promise<string>((res) => (releaseFirst = res)));
    const second = gate.run("k", async () => "second");
    expect(await second).toBe("second");
    releaseFirst("first");
    expect(await first).toBeNull();
  });

  it("tracks keys independently", async () => {
    const gate = new LatestOnly();
    const a = gate.run("a", async () => "A");
    const b = gate.run("b", async () => "B");
    expect(await a).toBe("A");
    expect(await b).toBe("B");
  });
});
