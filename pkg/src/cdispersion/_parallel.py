from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor


def scan(worker, rows, args, n_first: int, threads: int = 1):
    """Run ``worker(rows, *args, firsts)`` over a partition of first indices.

    Subsets are split by their smallest element. Each worker returns
    ``(cost, combo, count)`` holding the best subset in its share, where ties
    go to the lexicographically smallest combo. The merge applies the same
    rule, so the answer does not depend on ``threads``.
    """
    threads = max(1, int(threads))
    if threads == 1 or n_first <= 1:
        return worker(rows, *args, range(n_first))
    shares = [range(w, n_first, threads) for w in range(min(threads, n_first))]
    with ProcessPoolExecutor(max_workers=len(shares)) as pool:
        results = list(pool.map(worker, *zip(*[(rows, *args, s) for s in shares])))
    return merge(results)


def merge(results):
    best, best_combo, total = -math.inf, None, 0
    for cost, combo, count in results:
        total += count
        if combo is None:
            continue
        if best_combo is None or cost > best or (cost == best and combo < best_combo):
            best, best_combo = cost, combo
    return best, best_combo, total
