/** Hover-driven excerpt highlighting: locate the quoted passage in the
 * editor (exact first, normalized fallback) and paint it translucent
 * yellow; hover end always restores the editor. */

import { Editor } from "./editor.js";
import { ExcerptRange, locateExcerpt } from "./normalize.js";

export const HIGHLIGHT_COLOR = "rgba(250, 204, 21, 0.4)";

export class ExcerptHighlighter {
  private active: ExcerptRange | null = null;

  constructor(private editor: Editor) {}

  /** Card hover: highlight the excerpt's range if it can be located.
   * Returns the range, or null when there is nothing to highlight. */
  hoverStart(excerpt: string | null | undefined): ExcerptRange | null {
    this.hoverEnd();
    if (!excerpt) return null;
    const range = locateExcerpt(this.editor.getText(), excerpt);
    if (range) {
      this.editor.formatText(range.start, range.length, {
        background: HIGHLIGHT_COLOR,
      });
      this.active = range;
    }
    return range;
  }

  /** Hover end: clear formatting unconditionally. */
  hoverEnd(): void {
    if (this.active) {
      this.editor.clearFormat();
      this.active = null;
    }
  }
}
