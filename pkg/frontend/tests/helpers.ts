import { DemoBundleData } from "../src/types.js";
import { Editor, EditorFormat } from "../src/editor.js";

export const ESSAY =
  "Everyone knows driverless cars are safe. Letting computers drive leads " +
  "to calmer streets, and “smart systems” never get tired.";

export interface FormatCall {
  start: number;
  length: number;
  format: EditorFormat;
}

/** Records formatting calls so tests can assert exact ranges and colors. */
export class FakeEditor implements Editor {
  formatCalls: FormatCall[] = [];
  clearCalls = 0;

  constructor(private text: string) {}

  getText(): string {
    return this.text;
  }

  setText(text: string): void {
    this.text = text;
  }

  formatText(start: number, length: number, format: EditorFormat): void {
    this.formatCalls.push({ start, length, format });
  }

  clearFormat(): void {
    this.clearCalls += 1;
  }
}

export function makeBundle(): DemoBundleData {
  const essay =
    "Everyone knows that human drivers make mistakes. Letting computers " +
    "do the driving leads to faster trips. Some people say hackers could " +
    "take over the cars, but that will probably be fixed soon. Cities " +
    "should replace regular cars with smart systems everywhere.";
  return {
    essay,
    feedback: {
      reviewer2: {
        persona: "reviewer2",
        warnings: [],
        cards: [
          { label: "CLAIM", question: "What carries 'everyone knows'?", excerpt: "Everyone knows that human drivers make mistakes." },
          { label: "REASONING", question: "What links the evidence to the rule?", excerpt: "Letting computers do the driving leads to faster trips." },
          { label: "COUNTERARGUMENT", question: "What would the strongest objection say?", excerpt: "Some people say hackers could take over the cars, but that will probably be fixed soon." },
          { label: "SCOPE", question: "Which cities does this cover?", excerpt: "Cities should replace regular cars with smart systems everywhere." },
        ],
      },
      confusedReader: {
        persona: "confusedReader",
        warnings: [],
        cards: [
          { label: "CLARIFICATION", question: "What is a smart system?", excerpt: "smart systems" },
          { label: "CO_CONSTRUCTION", question: "By what steps does driving lead to faster trips?", excerpt: "leads to faster trips" },
        ],
        claim_question: "What is a smart system?",
        reasoning_question: "By what steps does driving lead to faster trips?",
      },
    },
    unlocks: {
      CLAIM: { suggestion: "Narrow the claim.", tip: "Claim less, prove more." },
      REASONING: { suggestion: "Add the bridge.", tip: "Say 'this shows' and check it." },
      COUNTERARGUMENT: { suggestion: "Steelman the objection.", tip: "Answer the best version." },
      SCOPE: { suggestion: "Name the boundary.", tip: "Say where it stops." },
      CLARIFICATION: { suggestion: "Define the term early.", tip: "Define once, reuse everywhere." },
      CO_CONSTRUCTION: { suggestion: "Spell out one mechanism.", tip: "Ask 'by what steps?'" },
    },
  };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
