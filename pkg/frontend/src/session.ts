/** The client-side state machine for the write / challenge / defend /
 * improve loop. Framework-free so the gating and progress rules are
 * testable without a DOM. */

import { Backend, describeError } from "./api.js";
import {
  ChallengeCard,
  PersonaId,
  SessionEntryData,
  SessionLogData,
  UnlockResult,
} from "./types.js";

export const ESSAY_EXCERPT_CHARS = 500;

export function essayExcerpt(essay: string): string {
  if (essay.length <= ESSAY_EXCERPT_CHARS) return essay;
  return essay.slice(0, ESSAY_EXCERPT_CHARS) + "…";
}

export interface CardState {
  card: ChallengeCard;
  defenseDraft: string;
  unlock: UnlockResult | null;
  pending: boolean;
  notice: string | null;
}

export interface SessionOptions {
  /** Timestamp source, injectable for tests. */
  now?: () => string;
}

export class Session {
  currentPersona: PersonaId = "reviewer2";
  useTabsView = false;
  activeTab = 0;
  cards: CardState[] = [];
  totalChallenges = 0;
  unlockedCount = 0;
  notice: string | null = null;
  warnings: string[] = [];
  essay = "";

  private entries: SessionEntryData[] = [];
  private allRoundsTotal = 0;
  private challengePending = false;
  private unlockPending = false;
  private readonly now: () => string;

  constructor(private backend: Backend, options: SessionOptions = {}) {
    this.now = options.now ?? (() => new Date().toISOString());
  }

  get busy(): boolean {
    return this.challengePending || this.unlockPending;
  }

  canChallenge(essayText: string): boolean {
    return essayText.trim() !== "" && !this.challengePending;
  }

  /** Submit the essay for questioning. Starts a new round: fresh cards,
   * progress reset, session log preserved. */
  async runChallenge(essayText: string, persona: PersonaId): Promise<boolean> {
    if (!this.canChallenge(essayText)) return false;
    this.challengePending = true;
    this.notice = null;
    try {
      const response = await this.backend.challenge({ essay: essayText, persona });
      this.currentPersona = response.persona ?? persona;
      this.cards = response.cards.map((card) => ({
        card,
        defenseDraft: "",
        unlock: null,
        pending: false,
        notice: null,
      }));
      this.totalChallenges = this.cards.length;
      this.unlockedCount = 0;
      this.allRoundsTotal += this.cards.length;
      this.activeTab = 0;
      this.essay = essayText;
      this.warnings = response.warnings ?? [];
      return true;
    } catch (error) {
      this.notice = describeError(error);
      return false;
    } finally {
      this.challengePending = false;
    }
  }

  setDefenseDraft(index: number, draft: string): void {
    const state = this.cards[index];
    if (state) state.defenseDraft = draft;
  }

  /** The gate mirror: the unlock control for a card is enabled exactly
   * when its defense draft has non-whitespace content, the card is still
   * locked, and no unlock request is in flight. */
  canUnlock(index: number): boolean {
    const state = this.cards[index];
    return (
      !!state &&
      state.unlock === null &&
      !state.pending &&
      !this.unlockPending &&
      state.defenseDraft.trim() !== ""
    );
  }

  /** Trade the defense for a suggestion. Refuses locally while the gate
   * is closed, so no request ever leaves with a blank defense. */
  async runUnlock(index: number): Promise<boolean> {
    if (!this.canUnlock(index)) return false;
    const state = this.cards[index];
    state.pending = true;
    this.unlockPending = true;
    state.notice = null;
    try {
      const result = await this.backend.unlock({
        essay: this.essay,
        label: state.card.label,
        excerpt: state.card.excerpt,
        question: state.card.question,
        user_defense: state.defenseDraft,
      });
      state.unlock = result;
      this.unlockedCount += 1;
      this.entries.push({
        label: state.card.label,
        question: state.card.question,
        excerpt: state.card.excerpt ?? null,
        defense: state.defenseDraft,
        suggestion: result.suggestion,
        tip: result.tip,
        unlocked_at: this.now(),
      });
      return true;
    } catch (error) {
      state.notice = describeError(error);
      return false;
    } finally {
      state.pending = false;
      this.unlockPending = false;
    }
  }

  progressText(): string {
    return `${this.unlockedCount} of ${this.totalChallenges}`;
  }

  setTabsView(useTabs: boolean): void {
    this.useTabsView = useTabs;
  }

  setActiveTab(index: number): void {
    if (index >= 0 && index < this.cards.length) this.activeTab = index;
  }

  /** The accumulated interaction history, shaped for the export endpoint.
   * Entries survive across rounds; counts cover all rounds. */
  sessionLog(): SessionLogData {
    return {
      persona: this.currentPersona,
      essay_excerpt: essayExcerpt(this.essay),
      entries: [...this.entries],
      total_challenges: this.allRoundsTotal,
      unlocked_count: this.entries.length,
    };
  }
}
