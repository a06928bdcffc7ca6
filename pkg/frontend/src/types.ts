/** Wire types, matching the service's JSON shapes exactly. */

export type PersonaId = "reviewer2" | "confusedReader";

export interface ChallengeCard {
  label: string;
  question: string;
  excerpt?: string;
}

export interface ChallengeResponse {
  persona: PersonaId;
  cards: ChallengeCard[];
  warnings: string[];
  /** Compat fields, present only for confusedReader responses. */
  claim_question?: string;
  reasoning_question?: string;
}

export interface UnlockResult {
  suggestion: string;
  tip: string;
}

export interface ChallengeRequest {
  essay: string;
  persona?: PersonaId;
  api_key?: string;
}

export interface UnlockRequest {
  essay: string;
  label: string;
  excerpt?: string;
  question: string;
  user_defense: string;
  api_key?: string;
}

export interface SessionEntryData {
  label: string;
  question: string;
  excerpt: string | null;
  defense: string;
  suggestion: string;
  tip: string;
  unlocked_at: string;
}

export interface SessionLogData {
  persona: PersonaId;
  essay_excerpt: string;
  entries: SessionEntryData[];
  total_challenges: number;
  unlocked_count: number;
}

export interface DemoBundleData {
  essay: string;
  feedback: Record<string, ChallengeResponse>;
  unlocks: Record<string, UnlockResult>;
}
