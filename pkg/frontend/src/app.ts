/** Entry point for the main application page. */

import { HttpBackend } from "./api.js";
import { ContentEditableEditor } from "./editor.js";
import { clearKey, hasKey, loadKey, saveKey } from "./keys.js";
import { Session } from "./session.js";
import { FeedbackPage, PageElements } from "./ui.js";

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
}

function wireKeyEntry(onChange: () => void): void {
  const input = byId<HTMLInputElement>("key-input");
  const status = byId<HTMLElement>("key-status");
  const refresh = () => {
    status.textContent = hasKey(localStorage)
      ? "A key is saved in this browser."
      : "No key saved; the server's key is used if configured.";
    input.value = ""; // the stored key is never rendered back
    onChange();
  };
  byId<HTMLButtonElement>("key-save").addEventListener("click", () => {
    saveKey(input.value, localStorage);
    refresh();
  });
  byId<HTMLButtonElement>("key-clear").addEventListener("click", () => {
    clearKey(localStorage);
    refresh();
  });
  refresh();
}

function main(): void {
  const backend = new HttpBackend(undefined, () => loadKey(localStorage));
  const editor = new ContentEditableEditor(byId("editor"));
  const session = new Session(backend);
  const elements: PageElements = {
    personaSelect: byId<HTMLSelectElement>("persona"),
    challengeButton: byId<HTMLButtonElement>("challenge"),
    tabsToggle: byId<HTMLInputElement>("tabs-toggle"),
    progress: byId("progress"),
    notice: byId("notice"),
    cards: byId("cards"),
    exportButton: byId<HTMLButtonElement>("export"),
  };
  new FeedbackPage(session, backend, editor, elements);
  wireKeyEntry(() => undefined);
}

main();
