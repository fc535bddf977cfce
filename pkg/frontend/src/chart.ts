/** Minimal dependency-free SVG line charts, returned as markup strings.
 * Scaling here is pure presentation; every number a user can read (labels,
 * table cells) is rendered verbatim from the API elsewhere. */

export interface ChartSeries {
  label: string;
  /** x positions (years or chapter numbers) and y values; null = no point. */
  points: [number, number | null][];
  highlighted?: Set<number>; // x positions to mark (e.g. special years)
}

const PALETTE = ["#1f6feb", "#d1242f", "#1a7f37", "#9a6700", "#8250df", "#bf3989"];
const W = 640;
const H = 240;
const PAD = 36;

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function lineChart(series: ChartSeries[], opts: { logLog?: boolean } = {}): string {
  const xs = series.flatMap((s) => s.points.map(([x]) => x));
  const ys = series.flatMap((s) =>
    s.points.map(([, y]) => y).filter((y): y is number => y !== null),
  );
  if (xs.length === 0 || ys.length === 0) {
    return `<svg class="chart empty" viewBox="0 0 ${W} ${H}"><text x="${W / 2}" y="${H / 2}" text-anchor="middle">no data</text></svg>`;
  }
  const tx = opts.logLog ? Math.log10 : (v: number) => v;
  const ty = opts.logLog ? Math.log10 : (v: number) => v;
  const xlo = Math.min(...xs.map(tx));
  const xhi = Math.max(...xs.map(tx));
  const ylo = Math.min(0, ...ys.map(ty));
  const yhi = Math.max(...ys.map(ty), ylo + 1e-12);
  const px = (x: number) => PAD + ((tx(x) - xlo) / (xhi - xlo || 1)) * (W - 2 * PAD);
  const py = (y: number) => H - PAD - ((ty(y) - ylo) / (yhi - ylo)) * (H - 2 * PAD);

  const parts: string[] = [
    `<svg class="chart" viewBox="0 0 ${W} ${H}" role="img">`,
    `<line x1="${PAD}" y1="${H - PAD}" x2="${W - PAD}" y2="${H - PAD}" stroke="#888"/>`,
    `<line x1="${PAD}" y1="${PAD}" x2="${PAD}" y2="${H - PAD}" stroke="#888"/>`,
  ];
  series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const coords = s.points
      .filter((p): p is [number, number] => p[1] !== null)
      .map(([x, y]) => `${px(x).toFixed(1)},${py(y).toFixed(1)}`);
    if (coords.length > 0) {
      parts.push(
        `<polyline fill="none" stroke="${color}" stroke-width="1.5" points="${coords.join(" ")}" data-label="${esc(s.label)}"/>`,
      );
    }
    for (const [x, y] of s.points) {
      if (y !== null && s.highlighted?.has(x)) {
        parts.push(
          `<circle cx="${px(x).toFixed(1)}" cy="${py(y).toFixed(1)}" r="4" fill="${color}" data-special="${x}"/>`,
        );
      }
    }
    parts.push(
      `<text x="${W - PAD + 4}" y="${PAD + 14 * i}" fill="${color}" font-size="11">${esc(s.label)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}
