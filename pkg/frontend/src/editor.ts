/** Editor boundary. The loop logic only needs plain-text extraction and
 * range formatting, so anything satisfying this interface plugs in; the
 * bundled implementation wraps a contenteditable element. */

export interface EditorFormat {
  background: string;
}

export interface Editor {
  getText(): string;
  formatText(start: number, length: number, format: EditorFormat): void;
  clearFormat(): void;
}

interface TextSegment {
  node: Text;
  start: number; // global plain-text offset of the node's first character
}

const BLOCK_TAGS = new Set(["DIV", "P", "LI", "BLOCKQUOTE", "PRE", "H1", "H2", "H3"]);

/** Walk the editor subtree, producing the plain text (newlines at <br> and
 * block boundaries) and the text-node offsets needed to map ranges back. */
function walk(root: HTMLElement): { text: string; segments: TextSegment[] } {
  let text = "";
  const segments: TextSegment[] = [];

  const visit = (node: Node): void => {
    if (node.nodeType === Node.TEXT_NODE) {
      const textNode = node as Text;
      segments.push({ node: textNode, start: text.length });
      text += textNode.data;
      return;
    }
    if (!(node instanceof HTMLElement)) return;
    if (node.tagName === "BR") {
      text += "\n";
      return;
    }
    const isBlock = node !== root && BLOCK_TAGS.has(node.tagName);
    if (isBlock && text.length > 0 && !text.endsWith("\n")) text += "\n";
    node.childNodes.forEach(visit);
    if (isBlock && !text.endsWith("\n")) text += "\n";
  };

  visit(root);
  return { text, segments };
}

export class ContentEditableEditor implements Editor {
  private marks: HTMLElement[] = [];

  constructor(private root: HTMLElement) {
    root.setAttribute("contenteditable", "true");
  }

  getText(): string {
    return walk(this.root).text;
  }

  setText(text: string): void {
    this.clearFormat();
    this.root.textContent = text;
  }

  formatText(start: number, length: number, format: EditorFormat): void {
    const end = start + length;
    const { segments } = walk(this.root);
    // collect slices first: wrapping mutates the node list
    const slices: { node: Text; from: number; to: number }[] = [];
    for (const segment of segments) {
      const nodeEnd = segment.start + segment.node.data.length;
      const from = Math.max(start, segment.start);
      const to = Math.min(end, nodeEnd);
      if (from < to) {
        slices.push({ node: segment.node, from: from - segment.start, to: to - segment.start });
      }
    }
    for (const slice of slices) {
      const range = this.root.ownerDocument.createRange();
      range.setStart(slice.node, slice.from);
      range.setEnd(slice.node, slice.to);
      const mark = this.root.ownerDocument.createElement("span");
      mark.style.backgroundColor = format.background;
      mark.dataset.editorMark = "1";
      range.surroundContents(mark);
      this.marks.push(mark);
    }
  }

  clearFormat(): void {
    for (const mark of this.marks) {
      const parent = mark.parentNode;
      if (!parent) continue;
      while (mark.firstChild) parent.insertBefore(mark.firstChild, mark);
      parent.removeChild(mark);
      parent.normalize();
    }
    this.marks = [];
  }
}
