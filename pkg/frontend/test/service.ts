/** Spawns a real sortmatch service for the scripted playground tests. */

import { ChildProcess, spawn } from 'node:child_process';

export async function startService(port: number): Promise<ChildProcess> {
  const proc = spawn(
    'python3',
    ['-m', 'sortmatch.cli', 'serve', '--port', String(port)],
    { stdio: ['ignore', 'inherit', 'inherit'] },
  );
  const probe = { n: 1, rows: 'A', cols: 'A' };
  for (let attempt = 0; attempt < 150; attempt++) {
    if (proc.exitCode !== null) break;
    try {
      const res = await fetch(`http://127.0.0.1:${port}/check`, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(probe),
      });
      if (res.ok) return proc;
    } catch {
      /* not up yet */
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
  proc.kill();
  throw new Error(`sortmatch service did not come up on port ${port}`);
}

export function stopService(proc: ChildProcess): Promise<void> {
  return new Promise((resolve) => {
    proc.once('exit', () => resolve());
    proc.kill();
  });
}
