"""Self-maps of Z_n, their functional digraphs and automorphism groups."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainSizeError, GroupAxiomError, LiteralParseError

Perm = tuple  # image tuple of a bijection on Z_n


@dataclass(frozen=True)
class Transformation:
    """A total map Z_n -> Z_n stored as its image sequence."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise DomainSizeError("a transformation needs n >= 1")
        for i, v in enumerate(images):
            if not 0 <= v < n:
                raise DomainSizeError(f"image f({i})={v} outside Z_{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __iter__(self):
        return iter(self.images)

    def __str__(self):
        return ",".join(map(str, self.images))

    @classmethod
    def identity(cls, n: int) -> "Transformation":
        return cls(tuple(range(n)))

    @classmethod
    def from_literal(cls, text: str) -> "Transformation":
        return parse_function_literal(text)

    def is_permutation(self) -> bool:
        return len(set(self.images)) == self.n

    def as_array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64)


def parse_function_literal(text: str) -> Transformation:
    """Parse ``"0,0,1"`` into f with f(0)=0, f(1)=0, f(2)=1."""
    if text is None or text.strip() == "":
        raise LiteralParseError("empty function literal")
    tokens = [t.strip() for t in text.split(",")]
    values = []
    for i, tok in enumerate(tokens):
        if not tok.isdigit():
            raise LiteralParseError(f"token {i} ({tok!r}) is not a non-negative decimal integer")
        values.append(int(tok))
    n = len(values)
    for i, v in enumerate(values):
        if v >= n:
            raise LiteralParseError(f"image at index {i} is {v}, must be < n={n}")
    return Transformation(tuple(values))


def compose(f: Transformation, g: Transformation) -> Transformation:
    """Right-to-left: compose(f, g)(i) == f(g(i))."""
    if f.n != g.n:
        raise DomainSizeError(f"cannot compose maps on Z_{f.n} and Z_{g.n}")
    fi = f.images
    return Transformation(tuple(fi[j] for j in g.images))


def iterate(f: Transformation, k: int) -> Transformation:
    """f^(k) by repeated squaring; f^(0) is the identity."""
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")
    result = Transformation.identity(f.n)
    base = f
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def square(f: Transformation) -> Transformation:
    return compose(f, f)


def is_semigroup_member(f: Transformation) -> bool:
    # h(i) <= i together with h^(n-1)(Z_n) = {0} forces h(0) = 0 and forbids any
    # other fixed point (it would survive every iterate), so h(i) < i for i >= 1.
    # Conversely a strictly decreasing chain from i reaches 0 within i <= n-1 steps.
    im = f.images
    return im[0] == 0 and all(im[i] < i for i in range(1, f.n))


def is_semigroup_member_literal(f: Transformation) -> bool:
    """The two defining conditions checked as written (slow reference)."""
    top = iterate(f, f.n - 1)
    return set(top.images) == {0} and all(f(i) <= i for i in range(f.n))


def enumerate_semigroup(n: int) -> Iterator[Transformation]:
    """All (n-1)! maps with f(0)=0 and f(i) < i, lexicographically."""
    if n < 1:
        raise ValueError("n must be >= 1")
    choices = [range(1)] + [range(i) for i in range(1, n)]
    for images in itertools.product(*choices):
        yield Transformation(images)


def enumerate_all(n: int) -> Iterator[Transformation]:
    """All n^n maps in lexicographic order."""
    for images in itertools.product(range(n), repeat=n):
        yield Transformation(images)


@dataclass(frozen=True)
class FunctionalGraph:
    n: int
    edges: tuple
    adjacency: np.ndarray = field(compare=False, repr=False)

    @classmethod
    def of(cls, f: Transformation) -> "FunctionalGraph":
        a = np.zeros((f.n, f.n), dtype=np.int64)
        a[np.arange(f.n), f.as_array()] = 1
        a.setflags(write=False)
        return cls(f.n, tuple((i, f(i)) for i in range(f.n)), a)

    def transformation(self) -> Transformation:
        return Transformation(tuple(j for _, j in self.edges))


def adjacency_matrix(f: Transformation) -> np.ndarray:
    return FunctionalGraph.of(f).adjacency


def adjacency_algebra_check(f: Transformation) -> bool:
    """(A-I)(A+I) == A_{f^2}-I == (A+I)(A-I) and A^2 == A_{f^2}, over Z."""
    a = adjacency_matrix(f)
    a2 = adjacency_matrix(square(f))
    eye = np.eye(f.n, dtype=np.int64)
    lhs = (a - eye) @ (a + eye)
    rhs = (a + eye) @ (a - eye)
    return (
        bool(np.array_equal(lhs, a2 - eye))
        and bool(np.array_equal(rhs, a2 - eye))
        and bool(np.array_equal(a @ a, a2))
    )


# -- permutations ----------------------------------------------------------

def perm_compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[j] for j in q)


def perm_inverse(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def conjugate(sigma: Sequence[int], f: Transformation) -> Transformation:
    """sigma f sigma^-1."""
    inv = perm_inverse(sigma)
    im = f.images
    return Transformation(tuple(sigma[im[inv[i]]] for i in range(f.n)))


def transposition(n: int, a: int, b: int) -> Perm:
    p = list(range(n))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


@dataclass(frozen=True)
class PermutationGroup:
    """Explicit, sorted element list of a subgroup of S_n."""

    n: int
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(tuple(e) for e in self.elements)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, sigma):
        return tuple(sigma) in self._members

    def __iter__(self):
        return iter(self.elements)

    @property
    def _members(self) -> frozenset:
        cached = self.__dict__.get("_member_set")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_member_set", cached)
        return cached

    def check_axioms(self) -> None:
        """Raise GroupAxiomError unless this is a subgroup of S_n."""
        ident = tuple(range(self.n))
        members = self._members
        if len(members) != len(self.elements):
            raise GroupAxiomError("duplicate elements")
        for e in self.elements:
            if len(e) != self.n or sorted(e) != list(range(self.n)):
                raise GroupAxiomError(f"{e} is not a permutation of Z_{self.n}")
        if ident not in members:
            raise GroupAxiomError("identity missing")
        for p in self.elements:
            if perm_inverse(p) not in members:
                raise GroupAxiomError(f"inverse of {p} missing")
            for q in self.elements:
                if perm_compose(p, q) not in members:
                    raise GroupAxiomError(f"{p} o {q} not in the set")
        if math.factorial(self.n) % self.order:
            raise GroupAxiomError("order does not divide n!")

    def issubset(self, other: "PermutationGroup") -> bool:
        return self._members <= other._members

    @classmethod
    def symmetric(cls, n: int) -> "PermutationGroup":
        return cls(n, tuple(itertools.permutations(range(n))))

    @classmethod
    def trivial(cls, n: int) -> "PermutationGroup":
        return cls(n, (tuple(range(n)),))


def _vertex_invariants(f: Transformation) -> list:
    """Per-vertex data preserved by any automorphism of G_f."""
    n = f.n
    indeg = [0] * n
    for v in f.images:
        indeg[v] += 1
    cyc = [0] * n  # cycle length if on a cycle
    for v in range(n):
        w, k = f(v), 1
        while w != v and k <= n:
            w, k = f(w), k + 1
        if w == v:
            cyc[v] = k
    depth = [0] * n  # distance to the cycle
    for v in range(n):
        w, dpt = v, 0
        while not cyc[w]:
            w, dpt = f(w), dpt + 1
        depth[v] = dpt
    return [(indeg[v], cyc[v], depth[v]) for v in range(n)]


def automorphism_group(f: Transformation) -> PermutationGroup:
    """{sigma : sigma f = f sigma} by backtracking with forward propagation.

    Choosing sigma(v) = w forces sigma(f(v)) = f(w); candidates for w are
    restricted to vertices with the same (indegree, cycle length, depth).
    """
    n = f.n
    inv = _vertex_invariants(f)
    im = f.images
    sigma = [-1] * n
    taken = [False] * n
    found = []

    def assign(v, w, trail):
        # set sigma(v)=w and propagate along f; False on conflict
        while True:
            if sigma[v] >= 0:
                return sigma[v] == w
            if taken[w] or inv[v] != inv[w]:
                return False
            sigma[v] = w
            taken[w] = True
            trail.append(v)
            v, w = im[v], im[w]

    def undo(trail):
        for v in trail:
            taken[sigma[v]] = False
            sigma[v] = -1

    def search(v):
        while v < n and sigma[v] >= 0:
            v += 1
        if v == n:
            found.append(tuple(sigma))
            return
        for w in range(n):
            if taken[w] or inv[v] != inv[w]:
                continue
            trail = []
            if assign(v, w, trail):
                search(v + 1)
            undo(trail)

    search(0)
    return PermutationGroup(n, tuple(found))


def automorphism_group_bruteforce(f: Transformation) -> PermutationGroup:
    n = f.n
    im = f.images
    return PermutationGroup(
        n,
        tuple(
            s for s in itertools.permutations(range(n))
            if all(s[im[i]] == im[s[i]] for i in range(n))
        ),
    )


def left_coset_representatives(group: PermutationGroup) -> list:
    """Lexicographically least member of every left coset sigma*G."""
    group.check_axioms()
    n = group.n
    covered = set()
    reps = []
    expected = math.factorial(n) // group.order
    for sigma in itertools.permutations(range(n)):
        if sigma in covered:
            continue
        reps.append(sigma)
        if len(reps) == expected:
            break
        for g in group.elements:
            covered.add(perm_compose(sigma, g))
    return reps
