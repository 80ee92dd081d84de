/** Typed client for the cycloset JSON service.
 *
 * Every displayed quantity in the UI comes out of one of these calls; the
 * client keeps a complete request log so tests can audit that nothing was
 * computed locally.
 */

export type PointJson = number | { limit: number; pos: number };
export type ArcJson = [PointJson, PointJson];

export interface TailJson {
  tail: { limit: number; dir: string; start: number };
}

export interface FamilyJson {
  fixed: TailJson;
  moving: TailJson;
  offset: number;
}

export interface PosetDescriptor {
  kind: string;
  [key: string]: unknown;
}

export interface ClusterJson {
  poset: PosetDescriptor;
  arcs: ArcJson[];
  families?: FamilyJson[];
}

export interface ClusterBody extends ClusterJson {
  hash: string;
}

export interface SessionState {
  schema_version: number;
  id: string;
  cluster: ClusterBody;
  svg: string;
}

export interface MutateResponse {
  schema_version: number;
  cluster: ClusterBody;
  svg: string;
  exchange_partner: ArcJson;
  removed: ArcJson;
  ext_changes: { removed_vs_added: [number, number] };
}

export interface NeighborEntry {
  arc: ArcJson;
  partner: ArcJson;
  hash: string;
}

export interface NeighborsResponse {
  schema_version: number;
  neighbors: NeighborEntry[];
  frozen: ArcJson[];
}

export interface HistoryEntry {
  arc: ArcJson;
  hash: string;
}

export interface HistoryResponse {
  schema_version: number;
  seed_hash: string;
  current_hash: string;
  history: HistoryEntry[];
}

export interface HomdimResponse {
  schema_version: number;
  poset: PosetDescriptor;
  source: ArcJson;
  target: ArcJson;
  ext: boolean;
  dim: number;
  statuses: [string, string];
}

export interface TriangulationCheckResponse {
  schema_version: number;
  kind: string;
  verdict: boolean;
  locally_finite?: boolean;
  witness?: string | null;
  defect?: string | null;
  limit_pairs?: number[][];
  rho?: number[][];
}

export interface CactusDisk {
  marked: number[];
  pinch_points: number[];
  cluster?: ClusterJson;
}

export interface CactusResponse {
  schema_version: number;
  poset: PosetDescriptor;
  classes: number[][];
  components: number[][];
  disk_count: number;
  disks: CactusDisk[];
  tree: number[][];
  sites: string[];
}

export interface CatalogEntry {
  name: string;
  descriptor: PosetDescriptor;
  seeds: string[];
}

export interface CatalogResponse {
  schema_version: number;
  posets: CatalogEntry[];
}

export interface NetworkLogEntry {
  method: string;
  path: string;
  body?: unknown;
  status: number;
  response: unknown;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly kind: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

interface ErrorBody {
  error?: { type?: string; message?: string };
}

export class ApiClient {
  /** Audit trail of every request this client has made. */
  readonly networkLog: NetworkLogEntry[] = [];

  constructor(readonly baseUrl: string = "") {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await fetch(this.baseUrl + path, init);
    const data: unknown = await res.json();
    const entry: NetworkLogEntry = { method, path, status: res.status, response: data };
    if (body !== undefined) entry.body = body;
    this.networkLog.push(entry);
    if (!res.ok) {
      const err = (data as ErrorBody).error ?? {};
      throw new ApiError(res.status, err.type ?? "HttpError", err.message ?? `HTTP ${res.status}`);
    }
    return data as T;
  }

  catalog(): Promise<CatalogResponse> {
    return this.request("GET", "/api/posets");
  }

  createSession(payload: { poset: unknown; seed?: unknown }): Promise<SessionState> {
    return this.request("POST", "/api/session", payload);
  }

  getSession(sid: string): Promise<SessionState> {
    return this.request("GET", `/api/session/${sid}`);
  }

  mutate(sid: string, arc: ArcJson): Promise<MutateResponse> {
    return this.request("POST", `/api/session/${sid}/mutate`, { arc });
  }

  neighbors(sid: string): Promise<NeighborsResponse> {
    return this.request("GET", `/api/session/${sid}/neighbors`);
  }

  history(sid: string): Promise<HistoryResponse> {
    return this.request("GET", `/api/session/${sid}/history`);
  }

  homdim(payload: {
    poset: unknown;
    from: ArcJson | string;
    to: ArcJson | string;
    ext?: boolean;
  }): Promise<HomdimResponse> {
    return this.request("POST", "/api/homdim", payload);
  }

  triangulationCheck(cluster: ClusterJson): Promise<TriangulationCheckResponse> {
    return this.request("POST", "/api/triangulation-check", { cluster });
  }

  cactusFromCluster(cluster: ClusterJson): Promise<CactusResponse> {
    return this.request("POST", "/api/cactus", { cluster });
  }

  cactusFromPartition(poset: unknown, classes: number[][]): Promise<CactusResponse> {
    return this.request("POST", "/api/cactus", { poset, rho: { classes } });
  }
}
