"""Pure-numpy kernels. Same contracts as the numba versions, vectorised
over whole permutation tables instead of backtracking."""

import numpy as np

from ._perms import lex_permutations

_CHUNK = 1 << 16


def distinct_label_counts(f, labelings):
    """Number of distinct |x[f[j]] - x[j]| per labeling row."""
    x = np.asarray(labelings, dtype=np.int64)
    if x.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    labels = np.abs(x[:, f] - x)
    masks = np.bitwise_or.reduce(np.left_shift(np.int64(1), labels), axis=1)
    return np.bitwise_count(masks).astype(np.int64)


def best_labeling(f, vorder, lorder, lo, hi, target):
    """Scan labelings in depth-first order; see the numba twin for the order.

    Row r of the rank table assigns label lorder[rank[r, d]] to vertex
    vorder[d]; rows are lexicographic in rank, which is exactly the DFS
    visiting order. Returns (best, witness) with the same tie-breaking:
    the first row reaching ``target``, else the first row of maximum count.
    """
    n = f.shape[0]
    rest = lex_permutations(n - 1).astype(np.int64)
    best = 0
    witness = np.zeros(n, dtype=np.int64)
    for a in range(lo, hi):
        ranks = np.empty((rest.shape[0], n), dtype=np.int64)
        ranks[:, 0] = a
        ranks[:, 1:] = rest + (rest >= a)
        x = np.empty_like(ranks)
        x[:, vorder] = lorder[ranks]
        counts = distinct_label_counts(f, x)
        hits = np.flatnonzero(counts >= target)
        if hits.size:
            return int(counts[hits[0]]), x[hits[0]].copy()
        i = int(np.argmax(counts))
        if counts[i] > best:
            best = int(counts[i])
            witness = x[i].copy()
    return best, witness


def first_nonvanishing(coeffs, consts, points):
    """Index of the first point where every affine form is nonzero, else -1."""
    c = np.asarray(coeffs, dtype=np.int64)
    k = np.asarray(consts, dtype=np.int64)
    for start in range(0, points.shape[0], _CHUNK):
        block = np.asarray(points[start:start + _CHUNK], dtype=np.int64)
        values = block @ c.T + k
        ok = np.all(values != 0, axis=1)
        hit = np.flatnonzero(ok)
        if hit.size:
            return start + int(hit[0])
    return -1
