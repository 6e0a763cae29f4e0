"""numba kernels: iterative backtracking with label-collision bounding."""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def distinct_label_counts(f, labelings):
    m, n = labelings.shape
    out = np.zeros(m, dtype=np.int64)
    seen = np.zeros(n, dtype=np.int64)
    for r in range(m):
        c = 0
        for j in range(n):
            lab = abs(labelings[r, f[j]] - labelings[r, j])
            if seen[lab] != r + 1:
                seen[lab] = r + 1
                c += 1
        out[r] = c
    return out


@njit(cache=True, nogil=True)
def _touch(v, sign, f, x, pred_ptr, pred, label_count, state):
    # state[0] = distinct labels, state[1] = determined edges
    w = f[v]
    if w == v or x[w] >= 0:
        lab = abs(x[w] - x[v])
        _bump(lab, sign, label_count, state)
    for p in range(pred_ptr[v], pred_ptr[v + 1]):
        j = pred[p]
        if j != v and x[j] >= 0:
            lab = abs(x[v] - x[j])
            _bump(lab, sign, label_count, state)


@njit(cache=True, nogil=True)
def _bump(lab, sign, label_count, state):
    if sign > 0:
        if label_count[lab] == 0:
            state[0] += 1
        label_count[lab] += 1
        state[1] += 1
    else:
        label_count[lab] -= 1
        if label_count[lab] == 0:
            state[0] -= 1
        state[1] -= 1


@njit(cache=True, nogil=True)
def best_labeling(f, vorder, lorder, lo, hi, target):
    """Max distinct edge labels over labelings, depth-first.

    Depth d assigns vertex vorder[d]; label ranks are tried in increasing
    order (label lorder[rank]), the first depth restricted to ranks [lo, hi).
    A branch is cut when distinct-so-far + undetermined edges <= best,
    which keeps the first DFS labeling of maximal count reachable.
    """
    n = f.shape[0]
    pred_ptr = np.zeros(n + 1, dtype=np.int64)
    for j in range(n):
        pred_ptr[f[j] + 1] += 1
    for v in range(n):
        pred_ptr[v + 1] += pred_ptr[v]
    pred = np.empty(n, dtype=np.int64)
    fill = pred_ptr[:n].copy()
    for j in range(n):
        pred[fill[f[j]]] = j
        fill[f[j]] += 1

    x = -np.ones(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    label_count = np.zeros(n, dtype=np.int64)
    state = np.zeros(2, dtype=np.int64)
    ptr = np.zeros(n, dtype=np.int64)
    best = 0
    witness = np.zeros(n, dtype=np.int64)

    d = 0
    ptr[0] = lo
    while d >= 0:
        v = vorder[d]
        if x[v] >= 0:
            _touch(v, -1, f, x, pred_ptr, pred, label_count, state)
            used[x[v]] = False
            x[v] = -1
        limit = hi if d == 0 else n
        advanced = False
        while ptr[d] < limit:
            lab = lorder[ptr[d]]
            ptr[d] += 1
            if used[lab]:
                continue
            x[v] = lab
            used[lab] = True
            _touch(v, 1, f, x, pred_ptr, pred, label_count, state)
            if state[0] + (n - state[1]) <= best:
                _touch(v, -1, f, x, pred_ptr, pred, label_count, state)
                used[lab] = False
                x[v] = -1
                continue
            advanced = True
            break
        if not advanced:
            d -= 1
            continue
        if d == n - 1:
            best = state[0]
            witness[:] = x
            if best >= target:
                return best, witness
        else:
            d += 1
            ptr[d] = 0
    return best, witness


@njit(cache=True, nogil=True)
def first_nonvanishing(coeffs, consts, points):
    m = points.shape[0]
    k, n = coeffs.shape
    for r in range(m):
        ok = True
        for q in range(k):
            s = consts[q]
            for j in range(n):
                s += coeffs[q, j] * points[r, j]
            if s == 0:
                ok = False
                break
        if ok:
            return r
    return -1
