/** Typed client for the sortmatch HTTP service.
 *
 * The service is stateless, so every call ships the full puzzle. Calls
 * accept an AbortSignal so the board can supersede in-flight requests
 * when the player keeps clicking.
 */

export interface PuzzleLabels {
  n: number;
  rows: string;
  cols: string;
}

export interface Witness {
  rows: [number, number];
  cols: [number, number];
}

export interface CheckResponse {
  solvable: boolean;
  witness: Witness | null;
}

export interface Violation {
  kind: 'row' | 'col';
  line: number;
  positions: [number, number][];
}

export interface ValidateResponse {
  valid: boolean;
  complete: boolean;
  violations: Violation[];
}

export interface RepairResponse {
  cost: number;
  strategy: string;
  target: PuzzleLabels;
}

export interface HintResponse {
  cell: [number, number] | null;
  value: number | null;
  reason: string;
  repair?: RepairResponse;
}

export interface CountResponse {
  count: string;
  method: string;
}

export interface SolveResponse {
  grid: number[][];
}

export class ServiceError extends Error {
  constructor(readonly status: number, detail: string) {
    super(`service responded ${status}: ${detail}`);
  }
}

export class ApiClient {
  constructor(public baseUrl: string) {}

  private async post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    const res = await fetch(`${this.baseUrl}${path}`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
      signal,
    });
    if (!res.ok) {
      let detail = res.statusText;
      try {
        detail = JSON.stringify((await res.json()).detail);
      } catch {
        /* non-JSON error body; keep the status text */
      }
      throw new ServiceError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  check(puzzle: PuzzleLabels, signal?: AbortSignal): Promise<CheckResponse> {
    return this.post('/check', puzzle, signal);
  }

  validate(
    puzzle: PuzzleLabels,
    grid: (number | null)[][],
    signal?: AbortSignal,
  ): Promise<ValidateResponse> {
    return this.post('/validate', { ...puzzle, grid }, signal);
  }

  solve(puzzle: PuzzleLabels, signal?: AbortSignal): Promise<SolveResponse> {
    return this.post('/solve', puzzle, signal);
  }

  count(puzzle: PuzzleLabels, signal?: AbortSignal): Promise<CountResponse> {
    return this.post('/count', puzzle, signal);
  }

  repair(puzzle: PuzzleLabels, signal?: AbortSignal): Promise<RepairResponse> {
    return this.post('/repair', puzzle, signal);
  }

  hint(
    puzzle: PuzzleLabels,
    grid: (number | null)[][],
    signal?: AbortSignal,
  ): Promise<HintResponse> {
    return this.post('/hint', { ...puzzle, grid }, signal);
  }
}
