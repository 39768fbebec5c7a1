import { ApiClient } from './api.js';
import { Board } from './board.js';
import { renderBoard } from './render.js';

const DEFAULT_BASE_URL = 'http://127.0.0.1:8737';

function start(): void {
  const app = document.getElementById('app');
  const controls = document.getElementById('controls');
  if (!app || !controls) throw new Error('missing #app / #controls containers');

  const baseInput = document.getElementById('base-url') as HTMLInputElement;
  const sizeSelect = document.getElementById('board-size') as HTMLSelectElement;
  baseInput.value = DEFAULT_BASE_URL;

  let api = new ApiClient(baseInput.value);
  let board: Board;

  const handlers = {
    onToggleLabel: (which: 'row' | 'col', index: number) => {
      void board.toggleLabel(which, index);
    },
    onCellClick: (row: number, col: number) => {
      if (board.selectedTile !== null) {
        void board.placeTile(row, col, board.selectedTile);
      } else if (board.cells[row - 1][col - 1] !== 0) {
        void board.removeTile(row, col);
      }
    },
    onTileClick: (value: number) => {
      board.selectedTile = board.selectedTile === value ? null : value;
      redraw();
    },
  };

  const redraw = () => renderBoard(app, board, handlers);

  const newBoard = () => {
    board = new Board(api, Number(sizeSelect.value));
    board.onChange(redraw);
    void board.refresh();
  };

  baseInput.addEventListener('change', () => {
    api = new ApiClient(baseInput.value);
    newBoard();
  });
  sizeSelect.addEventListener('change', newBoard);

  const button = (label: string, onClick: () => void) => {
    const b = document.createElement('button');
    b.textContent = label;
    b.addEventListener('click', onClick);
    controls.appendChild(b);
    return b;
  };

  button('hint', () => void board.requestHint());
  button('repair', () => void board.requestRepair());
  button('accept repair', () => void board.acceptRepair());
  button('count', () => void board.requestCount());
  button('undo', () => void board.undo());
  button('redo', () => void board.redo());

  newBoard();
}

document.addEventListener('DOMContentLoaded', start);
