/** DOM renderer: draws the board from a Board's state and forwards
 * interactions back to it. Rendering is a full redraw per change; the
 * boards are at most 6x6, so there is nothing to optimize.
 */

import { Board } from './board.js';

export interface Handlers {
  onToggleLabel(which: 'row' | 'col', index: number): void;
  onCellClick(row: number, col: number): void;
  onTileClick(value: number): void;
}

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderBoard(root: HTMLElement, board: Board, handlers: Handlers): void {
  root.replaceChildren();
  const n = board.n;

  const badge = el('div', `badge badge-${board.badge}`, board.badge.toUpperCase());
  root.appendChild(badge);

  const violatedCells = new Set<string>();
  for (const violation of board.violations) {
    for (const [i, j] of violation.positions) violatedCells.add(`${i},${j}`);
  }
  const witnessCells = new Set<string>();
  if (board.witness) {
    for (const i of board.witness.rows) {
      for (const j of board.witness.cols) witnessCells.add(`${i},${j}`);
    }
  }
  const pulsing = new Set(
    board.suggestedFlips().map((f) => `${f.which}${f.index}`),
  );

  const table = el('div', 'board');
  table.style.gridTemplateColumns = `repeat(${n + 1}, 3rem)`;

  table.appendChild(el('div', 'corner'));
  for (let j = 1; j <= n; j++) {
    const label = el('button', 'label col-label', board.cols[j - 1]);
    if (pulsing.has(`col${j}`)) label.classList.add('pulse');
    label.addEventListener('click', () => handlers.onToggleLabel('col', j));
    table.appendChild(label);
  }
  for (let i = 1; i <= n; i++) {
    const label = el('button', 'label row-label', board.rows[i - 1]);
    if (pulsing.has(`row${i}`)) label.classList.add('pulse');
    label.addEventListener('click', () => handlers.onToggleLabel('row', i));
    table.appendChild(label);
    for (let j = 1; j <= n; j++) {
      const value = board.cells[i - 1][j - 1];
      const cell = el('button', 'cell', value === 0 ? '' : String(value));
      if (violatedCells.has(`${i},${j}`)) cell.classList.add('violation');
      if (witnessCells.has(`${i},${j}`)) cell.classList.add('witness');
      const ghost = board.hint;
      if (ghost?.cell && ghost.cell[0] === i && ghost.cell[1] === j && value === 0) {
        cell.classList.add('ghost');
        cell.textContent = String(ghost.value);
      }
      cell.addEventListener('click', () => handlers.onCellClick(i, j));
      table.appendChild(cell);
    }
  }
  root.appendChild(table);

  const tray = el('div', 'tray');
  for (const value of board.unplacedValues()) {
    const tile = el('button', 'tile', String(value));
    if (board.selectedTile === value) tile.classList.add('selected');
    tile.addEventListener('click', () => handlers.onTileClick(value));
    tray.appendChild(tile);
  }
  root.appendChild(tray);

  const status = el('div', 'status');
  if (board.notice) status.appendChild(el('div', 'notice', board.notice));
  if (board.countResult) {
    status.appendChild(
      el('div', 'count', `${board.countResult.count} solutions (${board.countResult.method})`),
    );
  }
  if (board.repairSuggestion && board.repairSuggestion.cost > 0) {
    status.appendChild(
      el(
        'div',
        'repair',
        `repair: ${board.repairSuggestion.cost} flip(s) via ${board.repairSuggestion.strategy}`,
      ),
    );
  }
  if (board.hint && !board.hint.cell && board.hint.reason) {
    status.appendChild(el('div', 'hint-reason', board.hint.reason));
  }
  root.appendChild(status);
}
