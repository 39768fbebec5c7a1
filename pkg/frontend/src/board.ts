/** Board state machine for the playground.
 *
 * Pure of any DOM concerns so it can be driven headlessly in tests.
 * The browser owns all game state; the service is queried afresh after
 * every change, and stale responses are dropped when a newer change
 * superseded them.
 */

import {
  ApiClient,
  CheckResponse,
  CountResponse,
  HintResponse,
  RepairResponse,
  Violation,
  Witness,
} from './api.js';

export type Badge = 'checking' | 'solvable' | 'unsolvable' | 'solved';

interface Snapshot {
  rows: string;
  cols: string;
  cells: number[][];
}

function flip(label: string): string {
  return label === 'A' ? 'D' : 'A';
}

export class Board {
  rows: string;
  cols: string;
  /** cells[i][j], 0-based internally; 0 marks an empty cell. */
  cells: number[][];
  selectedTile: number | null = null;

  badge: Badge = 'checking';
  witness: Witness | null = null;
  violations: Violation[] = [];
  hint: HintResponse | null = null;
  repairSuggestion: RepairResponse | null = null;
  countResult: CountResponse | null = null;
  /** Inline feedback for rejected interactions; never modal. */
  notice: string | null = null;

  private history: Snapshot[] = [];
  private future: Snapshot[] = [];
  private listeners: Array<() => void> = [];
  private generation = 0;
  private inflight: AbortController | null = null;

  constructor(
    private api: ApiClient,
    readonly n: number,
    rows?: string,
    cols?: string,
  ) {
    this.rows = rows ?? 'A'.repeat(n);
    this.cols = cols ?? 'A'.repeat(n);
    this.cells = Array.from({ length: n }, () => Array(n).fill(0));
  }

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const fn of this.listeners) fn();
  }

  get labels() {
    return { n: this.n, rows: this.rows, cols: this.cols };
  }

  private gridPayload(): (number | null)[][] {
    return this.cells.map((row) => row.map((v) => (v === 0 ? null : v)));
  }

  placedValues(): Set<number> {
    const out = new Set<number>();
    for (const row of this.cells) for (const v of row) if (v !== 0) out.add(v);
    return out;
  }

  unplacedValues(): number[] {
    const placed = this.placedValues();
    const out: number[] = [];
    for (let v = 1; v <= this.n * this.n; v++) if (!placed.has(v)) out.push(v);
    return out;
  }

  /** Re-query solvability and violations; drops superseded responses. */
  async refresh(): Promise<void> {
    const gen = ++this.generation;
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    this.badge = 'checking';
    this.emit();
    let check: CheckResponse;
    let solved = false;
    try {
      check = await this.api.check(this.labels, controller.signal);
      const validation = await this.api.validate(
        this.labels,
        this.gridPayload(),
        controller.signal,
      );
      if (gen !== this.generation) return;
      this.violations = validation.violations;
      solved = validation.complete && validation.valid;
    } catch (err) {
      if (gen !== this.generation) return;
      if ((err as Error).name === 'AbortError') return;
      this.notice = String(err);
      this.emit();
      return;
    }
    this.witness = check.witness;
    this.badge = solved ? 'solved' : check.solvable ? 'solvable' : 'unsolvable';
    this.emit();
  }

  private snapshot(): Snapshot {
    return {
      rows: this.rows,
      cols: this.cols,
      cells: this.cells.map((row) => [...row]),
    };
  }

  private restore(snap: Snapshot): void {
    this.rows = snap.rows;
    this.cols = snap.cols;
    this.cells = snap.cells.map((row) => [...row]);
  }

  private commit(): void {
    this.history.push(this.snapshot());
    this.future = [];
    // Every committed change invalidates cached answers.
    this.hint = null;
    this.repairSuggestion = null;
    this.countResult = null;
    this.notice = null;
  }

  /** Flip one label; 1-based index to match the service's conventions. */
  async toggleLabel(which: 'row' | 'col', index: number): Promise<void> {
    if (index < 1 || index > this.n) throw new RangeError(`label index ${index}`);
    this.commit();
    if (which === 'row') {
      const chars = this.rows.split('');
      chars[index - 1] = flip(chars[index - 1]);
      this.rows = chars.join('');
    } else {
      const chars = this.cols.split('');
      chars[index - 1] = flip(chars[index - 1]);
      this.cols = chars.join('');
    }
    await this.refresh();
  }

  /** Place a tile; duplicate values and occupied cells give inline notices. */
  async placeTile(row: number, col: number, value: number): Promise<boolean> {
    const { n } = this;
    if (row < 1 || row > n || col < 1 || col > n || value < 1 || value > n * n) {
      throw new RangeError(`placement (${row}, ${col}) = ${value}`);
    }
    if (this.cells[row - 1][col - 1] !== 0) {
      this.notice = `cell (${row}, ${col}) is occupied`;
      this.emit();
      return false;
    }
    if (this.placedValues().has(value)) {
      this.notice = `tile ${value} is already on the board`;
      this.emit();
      return false;
    }
    this.commit();
    this.cells[row - 1][col - 1] = value;
    this.selectedTile = null;
    await this.refresh();
    return true;
  }

  async removeTile(row: number, col: number): Promise<boolean> {
    if (this.cells[row - 1][col - 1] === 0) return false;
    this.commit();
    this.cells[row - 1][col - 1] = 0;
    await this.refresh();
    return true;
  }

  async requestHint(): Promise<HintResponse> {
    const hint = await this.api.hint(this.labels, this.gridPayload());
    this.hint = hint;
    if (hint.repair) this.repairSuggestion = hint.repair;
    this.emit();
    return hint;
  }

  async requestRepair(): Promise<RepairResponse> {
    const suggestion = await this.api.repair(this.labels);
    this.repairSuggestion = suggestion;
    this.emit();
    return suggestion;
  }

  /** Labels whose suggested target differs from the board, for pulsing. */
  suggestedFlips(): Array<{ which: 'row' | 'col'; index: number }> {
    const target = this.repairSuggestion?.target;
    if (!target) return [];
    const out: Array<{ which: 'row' | 'col'; index: number }> = [];
    for (let i = 0; i < this.n; i++) {
      if (target.rows[i] !== this.rows[i]) out.push({ which: 'row', index: i + 1 });
      if (target.cols[i] !== this.cols[i]) out.push({ which: 'col', index: i + 1 });
    }
    return out;
  }

  async acceptRepair(): Promise<void> {
    const target = this.repairSuggestion?.target;
    if (!target) return;
    this.commit();
    this.rows = target.rows;
    this.cols = target.cols;
    await this.refresh();
  }

  async requestCount(): Promise<CountResponse> {
    const result = await this.api.count(this.labels);
    this.countResult = result;
    this.emit();
    return result;
  }

  canUndo(): boolean {
    return this.history.length > 0;
  }

  canRedo(): boolean {
    return this.future.length > 0;
  }

  async undo(): Promise<boolean> {
    const snap = this.history.pop();
    if (!snap) return false;
    this.future.push(this.snapshot());
    this.restore(snap);
    await this.refresh();
    return true;
  }

  async redo(): Promise<boolean> {
    const snap = this.future.pop();
    if (!snap) return false;
    this.history.push(this.snapshot());
    this.restore(snap);
    await this.refresh();
    return true;
  }
}
