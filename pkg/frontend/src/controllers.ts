/** View controllers: own the fetch choreography so renders stay pure.
 *
 * The trend controller implements the λ contract: counts and shares are
 * fetched once per corpus/set, and moving the slider re-requests only the
 * special-year report.
 */

import type { ApiClient } from "./api.js";
import { renderTrendView, specialKey } from "./render.js";
import type { SpecialEntry, TrendResponse } from "./types.js";

export class TrendController {
  private trends: TrendResponse | null = null;
  private special: SpecialEntry[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly corpus: string,
    private readonly set: string,
  ) {}

  /** Full load: one trends request (which carries the initial report). */
  async load(lambda: number): Promise<string> {
    this.trends = await this.api.trends(this.corpus, this.set, lambda);
    this.special = this.trends.special;
    return this.render();
  }

  /** λ change: only the special-year report is re-requested. */
  async setLambda(lambda: number): Promise<string> {
    if (this.trends === null) return this.load(lambda);
    const report = await this.api.specialYears(this.corpus, this.set, lambda);
    this.special = report.special;
    return this.render();
  }

  specialPairs(): Set<string> {
    return new Set(this.special.map((e) => specialKey(e.keyword, e.year)));
  }

  render(): string {
    if (this.trends === null) throw new Error("trend view not loaded");
    return renderTrendView(this.trends, this.specialPairs());
  }
}

export class CollocationController {
  constructor(
    private readonly api: ApiClient,
    private readonly corpus: string,
  ) {}

  series(a: string, b: string, window: number) {
    return this.api.collocations(this.corpus, a, b, window);
  }

  sweep(a: string, b: string, windows: number[]) {
    return this.api.collocationSweep(this.corpus, a, b, windows);
  }
}
