import type { FetchLike } from "../src/api";

export interface RecordedFetch {
  fetch: FetchLike;
  /** URLs in request order (method-prefixed for non-GET). */
  log: string[];
}

/** Route table → recording fetch. Routes are matched by path prefix (before
 * the query string); handlers may inspect the full URL. */
export function fakeFetch(
  routes: Record<string, (url: string, init?: RequestInit) => { body: unknown; headers?: Record<string, string>; status?: number }>,
): RecordedFetch {
  const log: string[] = [];
  const fetch: FetchLike = async (url, init) => {
    const method = init?.method ?? "GET";
    log.push(method === "GET" ? url : `${method} ${url}`);
    const path = url.split("?")[0];
    const handler = routes[path];
    if (!handler) {
      return new Response(JSON.stringify({ error: `no route for ${path}` }), {
        status: 404,
        headers: { "Content-Type": "application/json" },
      });
    }
    const { body, headers = {}, status = 200 } = handler(url, init);
    return new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json", ...headers },
    });
  };
  return { fetch, log };
}

/** All numeric table-cell contents of a rendered HTML string, in order. */
export function numericCells(html: string): string[] {
  return [...html.matchAll(/<td class="num">([^<]*)<\/td>/g)].map((m) => m[1]);
}
