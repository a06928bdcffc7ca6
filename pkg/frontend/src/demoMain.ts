/** Entry point for the self-contained demo page: loads the bundle once,
 * then the whole loop resolves offline. No key required. */

import { DemoBackend, HttpBackend } from "./api.js";
import { ContentEditableEditor } from "./editor.js";
import { Session } from "./session.js";
import { FeedbackPage, PageElements } from "./ui.js";

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) throw new Error(`missing element #${id}`);
  return element as T;
}

async function main(): Promise<void> {
  const http = new HttpBackend();
  const bundle = await http.demoBundle();
  const backend = new DemoBackend(bundle, http);

  const editorHost = byId("editor");
  const editor = new ContentEditableEditor(editorHost);
  editor.setText(bundle.essay);

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
}

void main().catch((error) => {
  const notice = document.getElementById("notice");
  if (notice) notice.textContent = `Demo failed to load: ${String(error)}`;
});
