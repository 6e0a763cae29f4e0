from functools import lru_cache

import numpy as np


@lru_cache(maxsize=16)
def lex_permutations(n: int) -> np.ndarray:
    """All permutations of range(n) as rows, in lexicographic order.

    Built by prefixing each a in range(k) to the (k-1)-table shifted past a,
    which preserves lexicographic order at every step. Read-only result.
    """
    table = np.zeros((1, 0), dtype=np.int8)
    for k in range(1, n + 1):
        blocks = []
        for a in range(k):
            rest = table + (table >= a)
            head = np.full((rest.shape[0], 1), a, dtype=np.int8)
            blocks.append(np.hstack([head, rest.astype(np.int8)]))
        table = np.vstack(blocks)
    table.setflags(write=False)
    return table
