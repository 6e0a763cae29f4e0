"""Distinct-edge-label maximisation, gracefulness and the graceful conjugates."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .config import check_size
from .errors import ConstructionUnavailableError, DomainSizeError, PremiseError
from .transform import (
    Transformation,
    automorphism_group,
    conjugate,
    is_semigroup_member,
    left_coset_representatives,
)
from .trees import distances_from, underlying_tree


@dataclass(frozen=True)
class Labeling:
    """values[j] is the label x_j of vertex j; a bijection on Z_n."""

    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(len(values))):
            raise DomainSizeError(f"{values} is not a permutation of Z_{len(values)}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, j):
        return self.values[j]


@dataclass(frozen=True)
class BetaResult:
    beta: int
    witness: Labeling
    graceful: bool


@dataclass(frozen=True)
class GrLResult:
    count: int
    representatives: tuple  # (sigma, sigma f sigma^-1) pairs


def _as_labeling(x) -> Labeling:
    return x if isinstance(x, Labeling) else Labeling(tuple(x))


def edge_label_set(f: Transformation, x) -> tuple:
    """Sorted multiset {|x_{f(j)} - x_j| : j}."""
    x = _as_labeling(x)
    if x.n != f.n:
        raise DomainSizeError(f"labeling on Z_{x.n} for map on Z_{f.n}")
    v = x.values
    return tuple(sorted(abs(v[f(j)] - v[j]) for j in range(f.n)))


def distinct_label_count(f: Transformation, x) -> int:
    return len(set(edge_label_set(f, x)))


def search_orders(f: Transformation):
    """Vertex order (degree descending, index ascending) and label order 0, n-1, 1, n-2, ..."""
    n = f.n
    deg = [1] * n
    for v in f.images:
        deg[v] += 1
    vorder = sorted(range(n), key=lambda v: (-deg[v], v))
    lorder = []
    lo, hi = 0, n - 1
    while lo <= hi:
        lorder.append(lo)
        if hi != lo:
            lorder.append(hi)
        lo, hi = lo + 1, hi - 1
    return np.asarray(vorder, dtype=np.int64), np.asarray(lorder, dtype=np.int64)


def _run(f: Transformation, target: int, workers: int, backend: Optional[str]):
    k = _kernels.get_backend(backend)
    n = f.n
    farr = f.as_array()
    vorder, lorder = search_orders(f)
    if workers <= 1 or n == 1:
        best, wit = k.best_labeling(farr, vorder, lorder, 0, n, target)
        return int(best), tuple(int(v) for v in wit)

    # one shard per first-vertex label rank; shard order == DFS order
    def shard(a):
        return k.best_labeling(farr, vorder, lorder, a, a + 1, target)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(shard, range(n)))
    for best, wit in results:
        if best >= target:
            return int(best), tuple(int(v) for v in wit)
    top = max(int(b) for b, _ in results)
    for best, wit in results:
        if best == top:
            return top, tuple(int(v) for v in wit)


def beta(f: Transformation, *, max_n: Optional[int] = None, workers: int = 1,
         backend: Optional[str] = None) -> BetaResult:
    """Maximum number of distinct edge labels over all n! labelings.

    The witness is the first maximiser in the deterministic search order of
    :func:`search_orders`, independent of backend and worker count.
    """
    check_size(f.n, max_n)
    best, wit = _run(f, f.n, workers, backend)
    return BetaResult(best, Labeling(wit), best == f.n)


def is_graceful(f: Transformation, **kw) -> bool:
    return beta(f, **kw).graceful


def has_labeling_with(f: Transformation, m: int, *, backend: Optional[str] = None) -> bool:
    """Some labeling achieves at least m distinct edge labels (early exit)."""
    best, _ = _run(f, m, 1, backend)
    return best >= m


def grl(f: Transformation, *, max_n: Optional[int] = None,
        backend: Optional[str] = None) -> GrLResult:
    """Graceful conjugates sigma f sigma^-1, one sigma per left coset of Aut(G_f)."""
    check_size(f.n, max_n)
    reps = left_coset_representatives(automorphism_group(f))
    k = _kernels.get_backend(backend)
    # labeling x_j = sigma(j) realises the edge labels of sigma f sigma^-1
    counts = k.distinct_label_counts(f.as_array(), np.asarray(reps, dtype=np.int64))
    kept = tuple((sigma, conjugate(sigma, f)) for sigma, c in zip(reps, counts) if c == f.n)
    return GrLResult(len(kept), kept)


def fixed_point_swap(f: Transformation, *, all_vertices: bool = False):
    """Move the loop of a semigroup member to a vertex two edges from a leaf.

    The underlying tree is re-rooted at the chosen vertex and relabelled in
    breadth-first order (neighbours ascending), so the result is again a
    semigroup member. Leaves are undirected degree-1 vertices, the old root
    included. With ``all_vertices`` a list covering every qualifying vertex
    is returned.
    """
    if not is_semigroup_member(f):
        raise PremiseError(f"{f} is not a semigroup member")
    n = f.n
    if n <= 2:
        raise ConstructionUnavailableError(f"n={n}: no vertex at distance 2 from a leaf")
    adj = underlying_tree(f)
    leaves = [v for v in range(n) if len(adj[v]) == 1]
    qualifying = set()
    for leaf in leaves:
        dist = distances_from(adj, leaf)
        qualifying.update(v for v in range(n) if dist[v] == 2)
    if not qualifying:
        raise ConstructionUnavailableError(f"{f}: no vertex at distance 2 from a leaf")
    chosen = sorted(qualifying)
    results = [_reroot(adj, v) for v in chosen]
    return results if all_vertices else results[0]


def _reroot(adj: list, root: int) -> Transformation:
    n = len(adj)
    new = {root: 0}
    parent = {root: root}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in new:
                new[w] = len(order)
                parent[w] = v
                order.append(w)
    images = [0] * n
    for v in order:
        images[new[v]] = new[parent[v]]
    return Transformation(tuple(images))


def cycle_union(s: int, t: int, *, max_n: Optional[int] = None) -> Transformation:
    """Loop at 0 plus 2^s disjoint 2^t-cycles on consecutive blocks."""
    if s < 1:
        raise ValueError(f"s must be a positive integer, got {s}")
    if t <= 1:
        raise ValueError(f"t must satisfy t > 1, got {t}")
    n = 1 + 2 ** (s + t)
    check_size(n, max_n)
    length = 2 ** t
    images = [0]
    for b in range(2 ** s):
        start = 1 + b * length
        images.extend(start + (k + 1) % length for k in range(length))
    return Transformation(tuple(images))


def graceful_permutation_count(f: Transformation, backend: Optional[str] = None) -> int:
    """Number of sigma in S_n whose conjugate has n distinct labels."""
    k = _kernels.get_backend(backend)
    perms = _kernels.lex_permutations(f.n).astype(np.int64)
    counts = k.distinct_label_counts(f.as_array(), perms)
    return int(np.count_nonzero(counts == f.n))
