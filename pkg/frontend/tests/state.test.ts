import { describe, expect, it } from "vitest";

import {
  DEFAULT_STATE,
  parseViewState,
  serializeViewState,
  type ViewState,
} from "../src/state";

const SAMPLE: ViewState = {
  view: "trends",
  corpus: "dsm",
  set: "reform",
  lambda: 1.5,
  window: 20,
  windows: [5, 15, 45],
  page: 3,
  pageSize: 25,
  minFreq: 11,
  query: "官",
  pairA: "官制",
  pairB: "立憲",
  pattern: "寶玉",
  event: "寶玉笑道",
  chart: "normalized",
};

describe("ViewState URL round-trip", () => {
  it("defaults serialize to the empty query string", () => {
    expect(serializeViewState(DEFAULT_STATE)).toBe("");
    expect(parseViewState("")).toEqual(DEFAULT_STATE);
  });

  it("round-trips a fully customized state", () => {
    expect(parseViewState(serializeViewState(SAMPLE))).toEqual(SAMPLE);
  });

  it("round-trips every single-field deviation from the default", () => {
    for (const key of Object.keys(SAMPLE) as (keyof ViewState)[]) {
      const state = { ...DEFAULT_STATE, [key]: SAMPLE[key] };
      expect(parseViewState(serializeViewState(state))).toEqual(state);
    }
  });

  it("serialization is stable (same state, same URL)", () => {
    expect(serializeViewState(SAMPLE)).toBe(serializeViewState(SAMPLE));
  });

  it("accepts a leading question mark", () => {
    const q = serializeViewState(SAMPLE);
    expect(parseViewState(`?${q}`)).toEqual(parseViewState(q));
  });
});

describe("ViewState validation", () => {
  it("rejects non-positive lambda", () => {
    expect(parseViewState("lambda=0").lambda).toBe(DEFAULT_STATE.lambda);
    expect(parseViewState("lambda=-1").lambda).toBe(DEFAULT_STATE.lambda);
    expect(parseViewState("lambda=abc").lambda).toBe(DEFAULT_STATE.lambda);
    expect(parseViewState("lambda=2.5").lambda).toBe(2.5);
  });

  it("rejects negative or fractional windows", () => {
    expect(parseViewState("window=-3").window).toBe(DEFAULT_STATE.window);
    expect(parseViewState("window=2.5").window).toBe(DEFAULT_STATE.window);
    expect(parseViewState("window=0").window).toBe(0);
  });

  it("rejects non-ascending sweep windows", () => {
    expect(parseViewState("windows=30,10").windows).toEqual(DEFAULT_STATE.windows);
    expect(parseViewState("windows=10,10").windows).toEqual(DEFAULT_STATE.windows);
    expect(parseViewState("windows=0,7,9").windows).toEqual([0, 7, 9]);
  });

  it("falls back on unknown views and charts", () => {
    expect(parseViewState("view=nonsense").view).toBe(DEFAULT_STATE.view);
    expect(parseViewState("chart=pie").chart).toBe(DEFAULT_STATE.chart);
  });

  it("keeps CJK keywords intact through the URL", () => {
    const state = { ...DEFAULT_STATE, pairA: "官制", pairB: "立憲" };
    const restored = parseViewState(serializeViewState(state));
    expect(restored.pairA).toBe("官制");
    expect(restored.pairB).toBe("立憲");
  });
});
