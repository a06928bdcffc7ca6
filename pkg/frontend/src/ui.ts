/** DOM wiring shared by the main app and the demo page. Kept as thin as
 * possible: all decisions live in Session / ExcerptHighlighter. */

import { Backend } from "./api.js";
import { Editor } from "./editor.js";
import { ExcerptHighlighter } from "./highlight.js";
import { Session } from "./session.js";
import { PersonaId } from "./types.js";

export interface PageElements {
  personaSelect: HTMLSelectElement;
  challengeButton: HTMLButtonElement;
  tabsToggle: HTMLInputElement;
  progress: HTMLElement;
  notice: HTMLElement;
  cards: HTMLElement;
  exportButton: HTMLButtonElement;
}

export function downloadDocument(html: string, filename = "session-report.html"): void {
  const blob = new Blob([html], { type: "text/html" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

export class FeedbackPage {
  private highlighter: ExcerptHighlighter;

  constructor(
    private session: Session,
    private backend: Backend,
    private editor: Editor,
    private el: PageElements,
  ) {
    this.highlighter = new ExcerptHighlighter(editor);
    this.wire();
    this.render();
  }

  private wire(): void {
    this.el.challengeButton.addEventListener("click", () => void this.challenge());
    this.el.tabsToggle.addEventListener("change", () => {
      this.session.setTabsView(this.el.tabsToggle.checked);
      this.render();
    });
    this.el.exportButton.addEventListener("click", () => void this.export());
  }

  private async challenge(): Promise<void> {
    const essay = this.editor.getText();
    if (!this.session.canChallenge(essay)) {
      this.el.notice.textContent = "Write or paste an essay first.";
      return;
    }
    this.el.challengeButton.disabled = true;
    await this.session.runChallenge(
      essay,
      this.el.personaSelect.value as PersonaId,
    );
    this.el.challengeButton.disabled = false;
    this.render();
  }

  private async export(): Promise<void> {
    const log = this.session.sessionLog();
    try {
      const html = await this.backend.exportSession(log);
      downloadDocument(html);
    } catch (error) {
      this.el.notice.textContent = `Export failed: ${String(error)}`;
    }
  }

  render(): void {
    const s = this.session;
    this.el.progress.textContent =
      s.totalChallenges > 0 ? `${s.progressText()} unlocked` : "";
    this.el.notice.textContent = [s.notice ?? "", ...s.warnings].join(" ").trim();
    this.el.cards.innerHTML = "";

    if (s.useTabsView && s.cards.length > 0) {
      const nav = document.createElement("nav");
      nav.className = "tabs";
      s.cards.forEach((state, index) => {
        const tab = document.createElement("button");
        tab.type = "button";
        tab.className = index === s.activeTab ? "tab active" : "tab";
        tab.textContent = state.card.label;
        tab.addEventListener("click", () => {
          s.setActiveTab(index);
          this.render();
        });
        nav.appendChild(tab);
      });
      this.el.cards.appendChild(nav);
    }

    s.cards.forEach((state, index) => {
      if (s.useTabsView && index !== s.activeTab) return;
      this.el.cards.appendChild(this.renderCard(index));
    });
  }

  private renderCard(index: number): HTMLElement {
    const s = this.session;
    const state = s.cards[index];
    const card = document.createElement("section");
    card.className = "card";

    card.addEventListener("mouseenter", () =>
      this.highlighter.hoverStart(state.card.excerpt),
    );
    card.addEventListener("mouseleave", () => this.highlighter.hoverEnd());

    const chip = document.createElement("span");
    chip.className = "chip";
    chip.textContent = state.card.label;
    card.appendChild(chip);

    const question = document.createElement("p");
    question.className = "question";
    question.textContent = state.card.question;
    card.appendChild(question);

    if (state.unlock) {
      const result = document.createElement("div");
      result.className = "unlock-result";
      const suggestion = document.createElement("p");
      suggestion.textContent = state.unlock.suggestion;
      const tip = document.createElement("p");
      tip.className = "tip";
      tip.textContent = `Tip: ${state.unlock.tip}`;
      result.append(suggestion, tip);
      const defense = document.createElement("p");
      defense.className = "defense-echo";
      defense.textContent = `Your defense: ${state.defenseDraft}`;
      card.append(defense, result);
      return card;
    }

    const draft = document.createElement("textarea");
    draft.className = "defense";
    draft.placeholder = "Defend this choice in your own words to unlock a suggestion";
    draft.value = state.defenseDraft;

    const unlock = document.createElement("button");
    unlock.type = "button";
    unlock.className = "unlock";
    unlock.textContent = "Unlock suggestion";
    unlock.disabled = !s.canUnlock(index);

    // gate mirror: the button state tracks the draft keystroke by keystroke
    draft.addEventListener("input", () => {
      s.setDefenseDraft(index, draft.value);
      unlock.disabled = !s.canUnlock(index);
    });
    unlock.addEventListener("click", () => {
      void s.runUnlock(index).then(() => this.render());
    });

    card.append(draft, unlock);

    if (state.notice) {
      const notice = document.createElement("p");
      notice.className = "card-notice";
      notice.textContent = state.notice;
      card.appendChild(notice);
    }
    return card;
  }
}
