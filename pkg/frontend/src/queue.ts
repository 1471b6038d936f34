/**
 * Serializes user actions so server ordering matches click ordering.
 *
 * Actions fired while another is in flight are queued, never dropped or
 * doubled; a failed action does not break the chain.
 */
export class ActionQueue {
  private tail: Promise<unknown> = Promise.resolve();
  private depth = 0;

  /** Number of actions queued or running. */
  get pending(): number {
    return this.depth;
  }

  run<T>(action: () => Promise<T>): Promise<T> {
    this.depth += 1;
    const result = this.tail.then(action).finally(() => {
      this.depth -= 1;
    });
    this.tail = result.catch(() => undefined);
    return result;
  }
}
