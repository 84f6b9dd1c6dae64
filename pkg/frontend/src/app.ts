// View controller: owns the filter/axis/drill/selection state and drives
// every view change through a fresh API call (no client-side
// re-aggregation). In-flight queries are superseded latest-wins.

import { ApiClient, ApiError, RequestSuperseded } from "./api.js";
import { EMOTIONS, EMOTION_COLORS } from "./colors.js";
import { buildDotPlotViewModel } from "./dotplot.js";
import { emptyFilters, filterParams, type FilterState } from "./filters.js";
import { el, renderDotPlot, renderLegend, renderTornado } from "./render.js";
import { buildTornadoViewModel } from "./tornado.js";
import type { AggregateRow, MetaPayload } from "./types.js";

export type Granularity = "day" | "week" | "month";

export interface DrillContext {
  axis: string; // group axis of the selected row: state | day | week | month
  value: string;
}

export class App {
  readonly api: ApiClient;
  readonly root: HTMLElement;

  axis: "state" | "time" = "state";
  granularity: Granularity = "month";
  drill: DrillContext | null = null;
  filters: FilterState = emptyFilters();
  selection: string[] = [];
  meta: MetaPayload | null = null;
  lastRows: AggregateRow[] = [];

  private dotplotEl!: HTMLElement;
  private bannerArea!: HTMLElement;
  private breadcrumbEl!: HTMLElement;
  private popupEl!: HTMLElement;
  private popupBody!: HTMLElement;
  private tooltipEl!: HTMLElement;
  private sortByCount = false;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.api = api;
    this.buildLayout();
  }

  async init(): Promise<void> {
    try {
      this.meta = await this.api.meta();
      this.populateFilterPanel();
    } catch (err) {
      this.showError(err);
    }
    await this.refresh();
  }

  // --- layout -----------------------------------------------------------

  private buildLayout(): void {
    this.root.textContent = "";
    this.bannerArea = el("div", { class: "banner-area" });

    const toolbar = el("div", { class: "toolbar" });
    const axisSelect = el("select", { class: "axis-select" });
    axisSelect.append(
      new Option("by state", "state", true, true),
      new Option("by time", "time"),
    );
    axisSelect.addEventListener("change", () => {
      this.axis = axisSelect.value as "state" | "time";
      this.drill = null;
      void this.refresh();
    });
    const granularitySelect = el("select", { class: "granularity-select" });
    granularitySelect.append(
      new Option("day", "day"),
      new Option("week", "week"),
      new Option("month", "month", true, true),
    );
    granularitySelect.addEventListener("change", () => {
      this.granularity = granularitySelect.value as Granularity;
      void this.refresh();
    });
    const sortToggle = el("label", { class: "sort-toggle" });
    const sortBox = el("input", { type: "checkbox", class: "sort-by-count" });
    sortBox.addEventListener("change", () => {
      this.sortByCount = (sortBox as HTMLInputElement).checked;
      this.renderRows();
    });
    sortToggle.append(sortBox, el("span", {}, " sort by count"));
    this.breadcrumbEl = el("div", { class: "breadcrumb" });
    toolbar.append(axisSelect, granularitySelect, sortToggle, this.breadcrumbEl);

    const main = el("div", { class: "main" });
    this.dotplotEl = el("div", { class: "dotplot" });
    const legend = el("div", { class: "legend" });
    renderLegend(legend, EMOTION_COLORS);
    main.append(legend, this.dotplotEl);

    const sidebar = el("div", { class: "sidebar" });
    sidebar.append(el("h3", {}, "Filters"));
    sidebar.append(el("div", { class: "filter-states" }));
    sidebar.append(el("div", { class: "filter-emotion" }));
    sidebar.append(el("div", { class: "filter-range" }));
    sidebar.append(el("div", { class: "filter-dates" }));

    this.popupEl = el("div", { class: "popup", style: "display:none" });
    const closeBtn = el("button", { class: "popup-close" }, "close");
    closeBtn.addEventListener("click", () => this.closePopup());
    this.popupBody = el("div", { class: "popup-body" });
    this.popupEl.append(closeBtn, this.popupBody);

    this.tooltipEl = el("div", { class: "tooltip", style: "display:none" });

    this.root.append(this.bannerArea, toolbar, main, sidebar, this.popupEl, this.tooltipEl);
  }

  private populateFilterPanel(): void {
    if (!this.meta) return;
    const statesBox = this.root.querySelector(".filter-states") as HTMLElement;
    statesBox.textContent = "";
    statesBox.append(el("h4", {}, "States"));
    for (const state of this.meta.states_present) {
      const label = el("label", { class: "state-option" });
      const box = el("input", { type: "checkbox", value: state, class: "state-box" });
      box.addEventListener("change", () => {
        const checked = Array.from(
          this.root.querySelectorAll<HTMLInputElement>(".state-box:checked"),
        ).map((node) => node.value);
        this.filters = { ...this.filters, states: checked };
        void this.refresh();
      });
      label.append(box, el("span", {}, state));
      statesBox.append(label);
    }

    const emotionBox = this.root.querySelector(".filter-emotion") as HTMLElement;
    emotionBox.textContent = "";
    emotionBox.append(el("h4", {}, "Emotion"));
    const emotionSelect = el("select", { class: "emotion-select" });
    emotionSelect.append(new Option("(none)", "", true, true));
    for (const emotion of EMOTIONS) emotionSelect.append(new Option(emotion, emotion));
    emotionSelect.addEventListener("change", () => {
      this.filters = { ...this.filters, emotion: emotionSelect.value || null };
      void this.refresh();
    });
    emotionBox.append(emotionSelect);

    const rangeBox = this.root.querySelector(".filter-range") as HTMLElement;
    rangeBox.textContent = "";
    rangeBox.append(el("h4", {}, "Score range (inclusive)"));
    const minInput = el("input", {
      type: "range", min: "0", max: "1", step: "0.05", value: "0", class: "range-min",
    });
    const maxInput = el("input", {
      type: "range", min: "0", max: "1", step: "0.05", value: "1", class: "range-max",
    });
    const readout = el("span", { class: "range-readout" }, "0 – 1");
    const onRange = () => {
      const lo = Number((minInput as HTMLInputElement).value);
      const hi = Number((maxInput as HTMLInputElement).value);
      this.filters = { ...this.filters, scoreMin: Math.min(lo, hi), scoreMax: Math.max(lo, hi) };
      readout.textContent = `${this.filters.scoreMin} – ${this.filters.scoreMax}`;
      void this.refresh();
    };
    minInput.addEventListener("change", onRange);
    maxInput.addEventListener("change", onRange);
    rangeBox.append(minInput, maxInput, readout);

    const datesBox = this.root.querySelector(".filter-dates") as HTMLElement;
    datesBox.textContent = "";
    datesBox.append(el("h4", {}, "Date range"));
    const fromInput = el("input", { type: "date", class: "date-from" });
    const toInput = el("input", { type: "date", class: "date-to" });
    const onDates = () => {
      const from = (fromInput as HTMLInputElement).value;
      const to = (toInput as HTMLInputElement).value;
      this.filters = {
        ...this.filters,
        from: from ? `${from}T00:00:00Z` : null,
        to: to ? `${to}T00:00:00Z` : null,
      };
      void this.refresh();
    };
    fromInput.addEventListener("change", onDates);
    toInput.addEventListener("change", onDates);
    datesBox.append(fromInput, toInput);
  }

  // --- data flow ---------------------------------------------------------

  aggregateParams(): Record<string, string> {
    const params: Record<string, string> = { ...filterParams(this.filters) };
    if (this.axis === "state") {
      params.axis = "state";
    } else {
      params.axis = "time";
      params.granularity = this.granularity;
    }
    if (this.drill) {
      params.restrict_axis = this.drill.axis;
      params.restrict_value = this.drill.value;
    }
    return params;
  }

  async refresh(): Promise<void> {
    try {
      const rows = await this.api.aggregate(this.aggregateParams());
      this.lastRows = rows;
      this.renderRows();
      this.renderBreadcrumb();
    } catch (err) {
      if (err instanceof RequestSuperseded) return;
      this.showError(err);
    }
  }

  private renderRows(): void {
    const rows = this.sortByCount
      ? [...this.lastRows].sort((a, b) => b.tweet_count - a.tweet_count)
      : this.lastRows;
    const vm = buildDotPlotViewModel(rows, this.meta?.polarity_colors);
    renderDotPlot(
      this.dotplotEl,
      vm,
      {
        onSelect: (key) => this.onSelect(key),
        onDrill: (key) => this.onDrill(key),
        selected: new Set(this.selection),
        tooltipText: (key) => this.tooltipText(key),
      },
      this.tooltipEl,
    );
  }

  private renderBreadcrumb(): void {
    this.breadcrumbEl.textContent = "";
    if (!this.drill) return;
    const back = el("a", { class: "breadcrumb-back", href: "#" },
      `← all ${this.drill.axis === "state" ? "states" : "periods"}`);
    back.addEventListener("click", (event) => {
      event.preventDefault();
      const wasState = this.drill?.axis === "state";
      this.drill = null;
      this.axis = wasState ? "state" : "time";
      void this.refresh();
    });
    this.breadcrumbEl.append(
      back,
      el("span", { class: "breadcrumb-current" }, ` / ${this.drill.value}`),
    );
  }

  tooltipText(key: string): string {
    const row = this.lastRows.find((r) => r.key === key);
    if (!row) return key;
    const counts = row.polarity_counts;
    return (
      `${key}: ${row.tweet_count} tweets — ` +
      `${counts.negative} negative, ${counts.neutral} neutral, ${counts.positive} positive`
    );
  }

  // --- interactions ------------------------------------------------------

  onSelect(key: string): void {
    if (this.selection.includes(key)) {
      this.selection = this.selection.filter((k) => k !== key);
    } else {
      this.selection = [...this.selection, key];
    }
    if (this.selection.length === 2) {
      void this.openCompare(this.selection[0], this.selection[1]);
    }
    this.renderRows();
  }

  async openCompare(a: string, b: string): Promise<void> {
    const params = { ...this.aggregateParams(), a, b };
    try {
      const payload = await this.api.compare(params);
      const vm = buildTornadoViewModel(payload);
      renderTornado(this.popupBody, vm);
      this.popupEl.style.display = "block";
    } catch (err) {
      if (err instanceof RequestSuperseded) return;
      this.showError(err);
    }
  }

  closePopup(): void {
    this.popupEl.style.display = "none";
    this.selection = [];
    this.renderRows();
  }

  onDrill(key: string): void {
    const groupAxis = this.axis === "state" ? "state" : this.granularity;
    this.drill = { axis: groupAxis, value: key };
    this.axis = this.axis === "state" ? "time" : "state";
    this.selection = [];
    void this.refresh();
  }

  // --- errors ------------------------------------------------------------

  showError(err: unknown): void {
    const message =
      err instanceof ApiError
        ? `${err.body.code}: ${err.body.message}`
        : String(err);
    const banner = el("div", { class: "banner error" });
    const dismiss = el("button", { class: "banner-dismiss" }, "dismiss");
    dismiss.addEventListener("click", () => banner.remove());
    banner.append(el("span", {}, message), dismiss);
    this.bannerArea.append(banner);
  }
}
