/** Tolerant excerpt matching: the same normalization the service applies
 * (collapse whitespace runs, straighten curly quotes, trim), plus an
 * offset-mapped search so a normalized match can still be highlighted at
 * its exact position in the original editor text. */

export interface ExcerptRange {
  start: number;
  length: number;
}

const QUOTE_MAP: Record<string, string> = {
  "“": '"',
  "”": '"',
  "„": '"',
  "‟": '"',
  "‘": "'",
  "’": "'",
  "‚": "'",
  "‛": "'",
};

function straighten(ch: string): string {
  return QUOTE_MAP[ch] ?? ch;
}

export function normalizeForMatch(text: string): string {
  let out = "";
  for (const ch of text) out += straighten(ch);
  return out.replace(/\s+/g, " ").trim();
}

/** Locate an excerpt in editor content: exact match first, then the
 * normalized fallback. Returns the range in original-content offsets, or
 * null when the excerpt cannot be found. */
export function locateExcerpt(content: string, excerpt: string): ExcerptRange | null {
  if (!excerpt) return null;
  const exact = content.indexOf(excerpt);
  if (exact !== -1) return { start: exact, length: excerpt.length };

  // Build the normalized view of the content alongside a map from each
  // normalized character back to its original index.
  const chars: string[] = [];
  const map: number[] = [];
  let lastWasSpace = true; // leading whitespace drops, like trim()
  for (let i = 0; i < content.length; i++) {
    const ch = content[i];
    if (/\s/.test(ch)) {
      if (!lastWasSpace) {
        chars.push(" ");
        map.push(i);
        lastWasSpace = true;
      }
    } else {
      chars.push(straighten(ch));
      map.push(i);
      lastWasSpace = false;
    }
  }
  while (chars.length > 0 && chars[chars.length - 1] === " ") {
    chars.pop();
    map.pop();
  }

  const needle = normalizeForMatch(excerpt);
  if (!needle) return null;
  const at = chars.join("").indexOf(needle);
  if (at === -1) return null;
  const start = map[at];
  const end = map[at + needle.length - 1];
  return { start, length: end - start + 1 };
}
