"""AHU canonical codes for the trees underlying semigroup members."""

from __future__ import annotations

from collections import deque

from .transform import Transformation


def underlying_tree(f: Transformation) -> list:
    """Undirected adjacency lists of G_f with loops dropped (sorted)."""
    adj = [set() for _ in range(f.n)]
    for i, j in enumerate(f.images):
        if i != j:
            adj[i].add(j)
            adj[j].add(i)
    return [sorted(a) for a in adj]


def rooted_code(adj: list, root: int) -> str:
    """AHU code: each vertex is '(' + sorted child codes + ')'."""
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
    codes = {}
    for v in reversed(order):
        kids = sorted(codes[w] for w in adj[v] if parent.get(w) == v)
        codes[v] = "(" + "".join(kids) + ")"
    return codes[root]


def centers(adj: list) -> list:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def tree_canonical_code(adj: list) -> str:
    """Isomorphism-invariant code of an unrooted tree."""
    return min(rooted_code(adj, c) for c in centers(adj))


def distances_from(adj: list, source: int) -> list:
    dist = [-1] * len(adj)
    dist[source] = 0
    q = deque([source])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist
