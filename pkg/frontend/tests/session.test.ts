import { describe, expect, it, vi } from "vitest";

import { ApiError, Backend } from "../src/api.js";
import { Session, essayExcerpt } from "../src/session.js";
import { ChallengeResponse, UnlockResult } from "../src/types.js";
import { makeBundle } from "./helpers.js";

const ESSAY = "Cars are safe. Everyone agrees.";

function scriptedBackend(overrides: Partial<Backend> = {}): Backend & {
  challengeCalls: number;
  unlockCalls: number;
} {
  const bundle = makeBundle();
  const backend = {
    challengeCalls: 0,
    unlockCalls: 0,
    async challenge(req): Promise<ChallengeResponse> {
      backend.challengeCalls += 1;
      return bundle.feedback[req.persona ?? "reviewer2"];
    },
    async unlock(req): Promise<UnlockResult> {
      backend.unlockCalls += 1;
      return { suggestion: `S for ${req.label}`, tip: `T for ${req.label}` };
    },
    async exportSession(): Promise<string> {
      return "<!DOCTYPE html>";
    },
    async demoBundle() {
      return bundle;
    },
    ...overrides,
  } as Backend & { challengeCalls: number; unlockCalls: number };
  return backend;
}

describe("challenge flow", () => {
  it("renders four cards for reviewer2 and resets progress", async () => {
    const session = new Session(scriptedBackend());
    expect(await session.runChallenge(ESSAY, "reviewer2")).toBe(true);
    expect(session.cards).toHaveLength(4);
    expect(session.totalChallenges).toBe(4);
    expect(session.unlockedCount).toBe(0);
    expect(session.progressText()).toBe("0 of 4");
  });

  it("renders two cards for confusedReader", async () => {
    const session = new Session(scriptedBackend());
    await session.runChallenge(ESSAY, "confusedReader");
    expect(session.cards.map((c) => c.card.label)).toEqual([
      "CLARIFICATION",
      "CO_CONSTRUCTION",
    ]);
  });

  it("refuses an empty editor without calling the service", async () => {
    const backend = scriptedBackend();
    const session = new Session(backend);
    expect(session.canChallenge("   ")).toBe(false);
    expect(await session.runChallenge("   ", "reviewer2")).toBe(false);
    expect(backend.challengeCalls).toBe(0);
  });

  it("surfaces service errors as a notice and keeps state", async () => {
    const backend = scriptedBackend({
      challenge: async () => {
        throw new ApiError(502, "ExtractionFailed", "unusable output");
      },
    });
    const session = new Session(backend);
    expect(await session.runChallenge(ESSAY, "reviewer2")).toBe(false);
    expect(session.notice).toContain("ExtractionFailed");
    expect(session.cards).toHaveLength(0);
  });
});

describe("gate mirror (acceptance 9)", () => {
  it("unlock control tracks the trimmed defense draft exactly", async () => {
    const session = new Session(scriptedBackend());
    await session.runChallenge(ESSAY, "reviewer2");

    expect(session.canUnlock(0)).toBe(false); // empty draft
    session.setDefenseDraft(0, "   \t ");
    expect(session.canUnlock(0)).toBe(false); // whitespace only
    session.setDefenseDraft(0, "   \t x");
    expect(session.canUnlock(0)).toBe(true); // first non-whitespace character
    session.setDefenseDraft(0, "");
    expect(session.canUnlock(0)).toBe(false); // cleared again
  });

  it("no network call occurs while the gate is closed", async () => {
    const backend = scriptedBackend();
    const session = new Session(backend);
    await session.runChallenge(ESSAY, "reviewer2");

    expect(await session.runUnlock(0)).toBe(false); // empty
    session.setDefenseDraft(0, " \n ");
    expect(await session.runUnlock(0)).toBe(false); // whitespace
    expect(backend.unlockCalls).toBe(0);

    session.setDefenseDraft(0, "Because my survey covered three schools.");
    expect(await session.runUnlock(0)).toBe(true);
    expect(backend.unlockCalls).toBe(1);
  });
});

describe("unlock flow", () => {
  it("reveals the suggestion, increments progress, appends to the log", async () => {
    const session = new Session(scriptedBackend(), { now: () => "2026-03-14T10:00:00Z" });
    await session.runChallenge(ESSAY, "reviewer2");
    session.setDefenseDraft(0, "My defense.");
    session.setDefenseDraft(1, "Another defense.");

    await session.runUnlock(0);
    expect(session.cards[0].unlock).toEqual({ suggestion: "S for CLAIM", tip: "T for CLAIM" });
    expect(session.progressText()).toBe("1 of 4");

    await session.runUnlock(1);
    expect(session.progressText()).toBe("2 of 4");

    const log = session.sessionLog();
    expect(log.entries).toHaveLength(2);
    expect(log.entries[0]).toMatchObject({
      label: "CLAIM",
      defense: "My defense.",
      suggestion: "S for CLAIM",
      unlocked_at: "2026-03-14T10:00:00Z",
    });
    expect(log.unlocked_count).toBe(2);
    expect(log.total_challenges).toBe(4);
  });

  it("does not increment on failure and shows an inline notice", async () => {
    const backend = scriptedBackend({
      unlock: async () => {
        throw new ApiError(502, "SchemaViolation", "missing tip");
      },
    });
    const session = new Session(backend);
    await session.runChallenge(ESSAY, "reviewer2");
    session.setDefenseDraft(0, "A defense.");
    expect(await session.runUnlock(0)).toBe(false);
    expect(session.unlockedCount).toBe(0);
    expect(session.cards[0].notice).toContain("SchemaViolation");
    expect(session.cards[0].unlock).toBeNull();
  });

  it("a card unlocks at most once", async () => {
    const backend = scriptedBackend();
    const session = new Session(backend);
    await session.runChallenge(ESSAY, "reviewer2");
    session.setDefenseDraft(0, "Defense.");
    await session.runUnlock(0);
    expect(session.canUnlock(0)).toBe(false);
    expect(await session.runUnlock(0)).toBe(false);
    expect(backend.unlockCalls).toBe(1);
  });

  it("only one unlock request is in flight at a time", async () => {
    let release!: (value: UnlockResult) => void;
    const backend = scriptedBackend({
      unlock: () =>
        new Promise<UnlockResult>((resolve) => {
          release = resolve;
        }),
    });
    const session = new Session(backend);
    await session.runChallenge(ESSAY, "reviewer2");
    session.setDefenseDraft(0, "D0");
    session.setDefenseDraft(1, "D1");

    const first = session.runUnlock(0);
    expect(session.canUnlock(1)).toBe(false); // blocked while pending
    release({ suggestion: "S", tip: "T" });
    await first;
    expect(session.canUnlock(1)).toBe(true);
  });
});

describe("progress invariants", () => {
  it("unlocked count is monotone within a round and bounded by the total", async () => {
    const session = new Session(scriptedBackend());
    await session.runChallenge(ESSAY, "reviewer2");
    const seen: number[] = [];
    for (let i = 0; i < session.cards.length; i++) {
      session.setDefenseDraft(i, `D${i}`);
      await session.runUnlock(i);
      seen.push(session.unlockedCount);
      expect(session.unlockedCount).toBeLessThanOrEqual(session.totalChallenges);
    }
    expect(seen).toEqual([1, 2, 3, 4]);
  });

  it("a new round resets counters but preserves the session log", async () => {
    const session = new Session(scriptedBackend());
    await session.runChallenge(ESSAY, "reviewer2");
    session.setDefenseDraft(0, "D");
    await session.runUnlock(0);

    await session.runChallenge(ESSAY + " Revised.", "confusedReader");
    expect(session.unlockedCount).toBe(0);
    expect(session.totalChallenges).toBe(2);

    const log = session.sessionLog();
    expect(log.entries).toHaveLength(1); // earlier round survives
    expect(log.total_challenges).toBe(6); // 4 + 2 across rounds
    expect(log.unlocked_count).toBe(1);
  });
});

describe("view toggle", () => {
  it("never alters session log or card data", async () => {
    const session = new Session(scriptedBackend());
    await session.runChallenge(ESSAY, "reviewer2");
    session.setDefenseDraft(0, "Draft text");
    const cardsBefore = JSON.stringify(session.cards);
    const logBefore = JSON.stringify(session.sessionLog());

    session.setTabsView(true);
    session.setActiveTab(2);
    session.setTabsView(false);

    expect(JSON.stringify(session.cards)).toBe(cardsBefore);
    expect(JSON.stringify(session.sessionLog())).toBe(logBefore);
  });
});

describe("essay excerpt", () => {
  it("passes short essays through and truncates long ones", () => {
    expect(essayExcerpt("short")).toBe("short");
    const long = "y".repeat(700);
    expect(essayExcerpt(long)).toHaveLength(501);
    expect(essayExcerpt(long).endsWith("…")).toBe(true);
  });
});
