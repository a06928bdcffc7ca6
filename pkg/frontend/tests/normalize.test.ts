import { describe, expect, it } from "vitest";

import { locateExcerpt, normalizeForMatch } from "../src/normalize.js";
import { ESSAY } from "./helpers.js";

describe("normalizeForMatch", () => {
  it("collapses whitespace runs", () => {
    expect(normalizeForMatch("a  b\nc")).toBe("a b c");
  });

  it("straightens curly quotes", () => {
    expect(normalizeForMatch("“x”")).toBe('"x"');
    expect(normalizeForMatch("it’s")).toBe("it's");
  });

  it("trims", () => {
    expect(normalizeForMatch("  x  ")).toBe("x");
  });

  it("is idempotent", () => {
    const samples = ["a  b\nc", "“quoted”  text ", "", "   ", "plain"];
    for (const sample of samples) {
      const once = normalizeForMatch(sample);
      expect(normalizeForMatch(once)).toBe(once);
    }
  });
});

describe("locateExcerpt", () => {
  it("finds a verbatim excerpt at its first occurrence", () => {
    const range = locateExcerpt(ESSAY, "driverless cars are safe");
    expect(range).not.toBeNull();
    expect(ESSAY.slice(range!.start, range!.start + range!.length)).toBe(
      "driverless cars are safe",
    );
    expect(range!.start).toBe(ESSAY.indexOf("driverless"));
  });

  it("falls back to normalized matching for whitespace differences", () => {
    const range = locateExcerpt(ESSAY, "Letting   computers\ndrive");
    expect(range).not.toBeNull();
    const found = ESSAY.slice(range!.start, range!.start + range!.length);
    expect(normalizeForMatch(found)).toBe(
      normalizeForMatch("Letting   computers\ndrive"),
    );
  });

  it("maps quote variants onto the original text", () => {
    // excerpt uses straight quotes; essay has curly ones
    const range = locateExcerpt(ESSAY, '"smart systems" never get tired');
    expect(range).not.toBeNull();
    const found = ESSAY.slice(range!.start, range!.start + range!.length);
    expect(found.startsWith("“smart systems”")).toBe(true);
  });

  it("returns null when the excerpt is absent", () => {
    expect(locateExcerpt(ESSAY, "not in the essay at all")).toBeNull();
    expect(locateExcerpt(ESSAY, "")).toBeNull();
  });

  it("range endpoints always land on non-space characters", () => {
    const range = locateExcerpt(ESSAY, "  calmer   streets  ");
    expect(range).not.toBeNull();
    const found = ESSAY.slice(range!.start, range!.start + range!.length);
    expect(found).toBe("calmer streets");
  });
});
