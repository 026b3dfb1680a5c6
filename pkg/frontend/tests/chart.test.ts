import { describe, expect, it } from "vitest";

import { chartDots, hitTest } from "../src/chart.js";
import { THREE_CARD_SWEEP } from "./fixtures.js";

const LAYOUT = { width: 400, height: 200, margin: 40 };

describe("chartDots", () => {
  it("maps extremes onto the drawable area", () => {
    const dots = chartDots(THREE_CARD_SWEEP.points, { num: 0, den: 1 }, LAYOUT);
    expect(dots).toHaveLength(5);
    // lowest defense kept sits at the left margin, highest at the right
    expect(dots[0].x).toBe(40);
    expect(dots[4].x).toBe(360);
    // highest attack sits at the top margin (small pixel y)
    expect(dots[0].y).toBe(40);
    expect(dots[4].y).toBe(160);
  });

  it("highlights exactly the current factor", () => {
    const dots = chartDots(THREE_CARD_SWEEP.points, { num: 2, den: 4 }, LAYOUT);
    expect(dots.map((d) => d.isCurrent)).toEqual([false, false, true, false, false]);
  });

  it("centers a flat chart instead of dividing by zero", () => {
    const flat = [THREE_CARD_SWEEP.points[0], THREE_CARD_SWEEP.points[1]];
    const dots = chartDots(flat, { num: 0, den: 1 }, LAYOUT);
    expect(dots[0].x).toBe(200);
    expect(dots[1].x).toBe(200);
  });

  it("handles an empty sweep", () => {
    expect(chartDots([], { num: 0, den: 1 }, LAYOUT)).toEqual([]);
  });
});

describe("hitTest", () => {
  it("picks the nearest dot within the radius", () => {
    const dots = chartDots(THREE_CARD_SWEEP.points, { num: 0, den: 1 }, LAYOUT);
    expect(hitTest(dots, dots[4].x + 3, dots[4].y - 2)).toBe(4);
  });

  it("misses when nothing is close", () => {
    const dots = chartDots(THREE_CARD_SWEEP.points, { num: 0, den: 1 }, LAYOUT);
    expect(hitTest(dots, 1, 199)).toBe(-1);
  });
});
