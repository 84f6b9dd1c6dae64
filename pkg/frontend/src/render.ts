// DOM builders for the dot plot and the tornado popup. All numbers shown
// are formatted for display only; viewmodels keep the API values verbatim.

import type { DotPlotViewModel } from "./dotplot.js";
import type { TornadoViewModel } from "./tornado.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const BAR_WIDTH = 160;
const DOT_WIDTH = 360;
const ROW_HEIGHT = 22;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

function svg(tag: string, attrs: Record<string, string> = {}): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

export interface DotPlotHandlers {
  onSelect: (key: string) => void;
  onDrill: (key: string) => void;
  selected: ReadonlySet<string>;
  tooltipText: (key: string) => string;
}

export function renderDotPlot(
  container: HTMLElement,
  vm: DotPlotViewModel,
  handlers: DotPlotHandlers,
  tooltip: HTMLElement,
): void {
  container.textContent = "";
  if (vm.empty) {
    container.append(
      el("div", { class: "empty-state" }, "No tweets match the current filters."),
    );
    return;
  }
  const header = el("div", { class: "dotplot-header" });
  header.append(
    el("span", { class: "col-label" }, "group"),
    el("span", { class: "col-bar" }, "tweets by polarity"),
    el("span", { class: "col-dots" }, "emotion means 0 → 1"),
  );
  container.append(header);
  for (const row of vm.rows) {
    const rowEl = el("div", {
      class: `dotplot-row${handlers.selected.has(row.label) ? " selected" : ""}`,
      "data-key": row.label,
      "data-total": String(row.total),
    });
    rowEl.addEventListener("click", () => handlers.onSelect(row.label));
    rowEl.addEventListener("mouseenter", () => {
      tooltip.textContent = handlers.tooltipText(row.label);
      tooltip.style.display = "block";
    });
    rowEl.addEventListener("mouseleave", () => {
      tooltip.style.display = "none";
    });

    const label = el("span", { class: "col-label" }, row.label);
    const drill = el("button", { class: "drill-btn", title: "drill down" }, "⤵");
    drill.addEventListener("click", (event) => {
      event.stopPropagation();
      handlers.onDrill(row.label);
    });
    label.append(drill);

    const bar = svg("svg", {
      class: "col-bar",
      width: String(BAR_WIDTH),
      height: String(ROW_HEIGHT - 6),
    });
    const barLength = row.maxTotal > 0 ? (row.total / row.maxTotal) * BAR_WIDTH : 0;
    let x = BAR_WIDTH - barLength; // right-aligned, grows leftwards
    for (const segment of row.segments) {
      const width = segment.fraction * barLength;
      const rect = svg("rect", {
        x: String(x),
        y: "2",
        width: String(width),
        height: String(ROW_HEIGHT - 10),
        fill: segment.color,
        "data-polarity": segment.polarity,
        "data-count": String(segment.count),
      });
      bar.append(rect);
      x += width;
    }

    const dots = svg("svg", {
      class: "col-dots",
      width: String(DOT_WIDTH),
      height: String(ROW_HEIGHT - 6),
    });
    dots.append(
      svg("line", {
        x1: "0",
        y1: String((ROW_HEIGHT - 6) / 2),
        x2: String(DOT_WIDTH),
        y2: String((ROW_HEIGHT - 6) / 2),
        stroke: "#ddd",
      }),
    );
    for (const dot of row.dots) {
      if (dot.contributingCount === 0) continue; // no contributing tweets, no dot
      dots.append(
        svg("circle", {
          cx: String(dot.x * DOT_WIDTH),
          cy: String((ROW_HEIGHT - 6) / 2),
          r: "5",
          fill: dot.color,
          "data-emotion": dot.emotion,
          "data-x": String(dot.x),
        }),
      );
    }
    rowEl.append(label, bar, dots);
    container.append(rowEl);
  }
}

export function renderTornado(container: HTMLElement, vm: TornadoViewModel): void {
  container.textContent = "";
  const heading = el("div", { class: "tornado-heading" });
  heading.append(
    el("span", { class: "side-a" }, vm.labelA),
    el("span", {}, " vs "),
    el("span", { class: "side-b" }, vm.labelB),
  );
  container.append(heading);
  const half = 180;
  const rowHeight = 24;
  for (const row of vm.rows) {
    const rowEl = el("div", { class: "tornado-row", "data-emotion": row.emotion });
    const leftValue = el(
      "span",
      { class: "tornado-value value-a", "data-emotion": row.emotion },
      row.left.toFixed(3),
    );
    const rightValue = el(
      "span",
      { class: "tornado-value value-b", "data-emotion": row.emotion },
      row.right.toFixed(3),
    );
    const chart = svg("svg", {
      width: String(half * 2),
      height: String(rowHeight - 6),
      class: "tornado-bars",
    });
    chart.append(
      svg("rect", {
        x: String(half - row.left * half),
        y: "2",
        width: String(row.left * half),
        height: String(rowHeight - 10),
        fill: row.color,
        "fill-opacity": "0.55",
      }),
      svg("rect", {
        x: String(half),
        y: "2",
        width: String(row.right * half),
        height: String(rowHeight - 10),
        fill: row.color,
        "fill-opacity": "0.55",
      }),
    );
    if (row.overlay) {
      const inner = Math.min(row.left, row.right);
      const overlayWidth = row.overlay.length * half;
      chart.append(
        svg("rect", {
          x:
            row.overlay.side === "A"
              ? String(half - inner * half - overlayWidth)
              : String(half + inner * half),
          y: "2",
          width: String(overlayWidth),
          height: String(rowHeight - 10),
          fill: row.color,
          class: "tornado-overlay",
          "data-side": row.overlay.side,
          "data-length": String(row.overlay.length),
        }),
      );
    }
    rowEl.append(
      leftValue,
      el("span", { class: "tornado-emotion" }, row.emotion),
      chart,
      rightValue,
    );
    container.append(rowEl);
  }
}

export function renderLegend(container: HTMLElement, colors: Record<string, string>): void {
  container.textContent = "";
  for (const [emotion, color] of Object.entries(colors)) {
    const chip = el("span", { class: "legend-chip" });
    const swatch = el("span", { class: "legend-swatch" });
    swatch.style.backgroundColor = color;
    chip.append(swatch, el("span", {}, emotion));
    container.append(chip);
  }
}
