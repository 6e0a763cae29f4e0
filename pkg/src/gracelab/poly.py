"""Products of affine linear forms over Q, evaluated on the lattice (Z_n)^n.

Only split polynomials are represented: a rational scalar times a multiset
of normalised integer forms. Unique factorisation makes equality of two
nonzero products a comparison of (scalar, factor multiset).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .errors import DomainSizeError, UndefinedLCMError
from .transform import Transformation

LATTICE_POINT_LIMIT = 10**7


@dataclass(frozen=True, order=True)
class LinearForm:
    """sum_j coefficients[j] * x_j + constant, integer entries."""

    coefficients: tuple
    constant: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        object.__setattr__(self, "constant", int(self.constant))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return self.constant == 0 and not any(self.coefficients)

    def is_constant(self) -> bool:
        return not any(self.coefficients)

    @classmethod
    def variable(cls, n: int, j: int) -> "LinearForm":
        return cls(tuple(int(k == j) for k in range(n)))

    @classmethod
    def difference(cls, n: int, j: int, i: int) -> "LinearForm":
        """x_j - x_i."""
        c = [0] * n
        c[j] += 1
        c[i] -= 1
        return cls(tuple(c))

    def __add__(self, other):
        return LinearForm(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
                          self.constant + other.constant)

    def __sub__(self, other):
        return LinearForm(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
                          self.constant - other.constant)

    def __neg__(self):
        return LinearForm(tuple(-a for a in self.coefficients), -self.constant)

    def normalized(self):
        """(unit, form) with unit * form == self; form primitive, leading coefficient > 0.

        Constant forms normalise to the constant 1.
        """
        if self.is_zero():
            raise ValueError("the zero form has no normalisation")
        if self.is_constant():
            return self.constant, LinearForm((0,) * self.n, 1)
        g = math.gcd(*self.coefficients, self.constant)
        lead = next(c for c in self.coefficients if c)
        if lead < 0:
            g = -g
        return g, LinearForm(tuple(c // g for c in self.coefficients), self.constant // g)

    def evaluate(self, x: Sequence):
        return sum(c * v for c, v in zip(self.coefficients, x)) + self.constant

    def substitute(self, sigma: Sequence[int]) -> "LinearForm":
        """Form in which x_k is replaced by x_{sigma(k)}."""
        c = [0] * self.n
        for k, a in enumerate(self.coefficients):
            c[sigma[k]] += a
        return LinearForm(tuple(c), self.constant)

    def dump(self) -> str:
        return "(" + ",".join(map(str, self.coefficients)) + " | " + str(self.constant) + ")"


@dataclass(frozen=True, eq=False)
class LinearFormProduct:
    """scalar * prod factor^exp, or a structurally zero product.

    ``zero_markers`` lists the unsplit factors that vanish identically (as
    descriptive strings); when non-empty the product is the zero polynomial,
    whatever the remaining factors are.
    """

    n: int
    scalar: Fraction
    factors: tuple  # ((LinearForm, exp), ...) sorted by form
    zero_markers: tuple = field(default=())

    @classmethod
    def from_forms(cls, n: int, forms: Iterable, scalar=1,
                   zero_markers: Sequence[str] = ()) -> "LinearFormProduct":
        """Normalise and merge ``forms`` (each a LinearForm or (LinearForm, exp))."""
        scalar = Fraction(scalar)
        markers = list(zero_markers)
        counts = {}
        for item in forms:
            form, exp = item if isinstance(item, tuple) else (item, 1)
            if form.n != n:
                raise DomainSizeError(f"form on {form.n} variables in product on {n}")
            if exp < 1:
                raise ValueError("exponents must be positive")
            if form.is_zero():
                markers.append(f"zero form x{exp}")
                continue
            unit, norm = form.normalized()
            scalar *= Fraction(unit) ** exp
            if norm.is_constant():
                continue
            counts[norm] = counts.get(norm, 0) + exp
        if scalar == 0:
            markers.append("zero scalar")
        return cls(n, scalar, tuple(sorted(counts.items())), tuple(markers))

    @classmethod
    def one(cls, n: int) -> "LinearFormProduct":
        return cls(n, Fraction(1), ())

    @property
    def is_zero(self) -> bool:
        return bool(self.zero_markers)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    def factor_map(self) -> dict:
        return dict(self.factors)

    def __eq__(self, other):
        if not isinstance(other, LinearFormProduct):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.scalar == other.scalar and self.factors == other.factors

    def __hash__(self):
        if self.is_zero:
            return hash((self.n, "zero"))
        return hash((self.n, self.scalar, self.factors))

    def __mul__(self, other: "LinearFormProduct") -> "LinearFormProduct":
        if self.n != other.n:
            raise DomainSizeError("products on different variable counts")
        return LinearFormProduct.from_forms(
            self.n, list(self.factors) + list(other.factors),
            self.scalar * other.scalar, self.zero_markers + other.zero_markers)

    def __pow__(self, k: int) -> "LinearFormProduct":
        return LinearFormProduct(self.n, self.scalar ** k,
                                 tuple((f, e * k) for f, e in self.factors),
                                 self.zero_markers)

    def evaluate(self, x: Sequence):
        """Exact value at x (ints or Fractions)."""
        if self.is_zero:
            return 0
        value = self.scalar
        for form, exp in self.factors:
            value *= Fraction(form.evaluate(x)) ** exp
        return value.numerator if value.denominator == 1 else value

    def vanishes_at(self, x: Sequence) -> bool:
        """Structural zero test: some factor is zero at x."""
        if self.is_zero:
            return True
        return any(form.evaluate(x) == 0 for form, _ in self.factors)

    def substitute(self, sigma: Sequence[int]) -> "LinearFormProduct":
        """P(x_sigma): every x_k replaced by x_{sigma(k)}."""
        return LinearFormProduct.from_forms(
            self.n, [(f.substitute(sigma), e) for f, e in self.factors],
            self.scalar, self.zero_markers)

    def contains_vertex_vandermonde(self) -> bool:
        fm = self.factor_map()
        return all(fm.get(LinearForm.difference(self.n, i, j).normalized()[1], 0) >= 1
                   for i, j in itertools.combinations(range(self.n), 2))

    def form_arrays(self):
        if not self.factors:
            return np.zeros((0, self.n), dtype=np.int64), np.zeros(0, dtype=np.int64)
        coeffs = np.array([f.coefficients for f, _ in self.factors], dtype=np.int64)
        consts = np.array([f.constant for f, _ in self.factors], dtype=np.int64)
        return coeffs, consts

    def dump(self) -> str:
        """Factored text form: header comments then ``exp * (c_0,...,c_{n-1} | const)`` lines."""
        lines = [f"# n = {self.n}", f"# scalar = {self.scalar}"]
        lines += [f"# zero: {m}" for m in self.zero_markers]
        lines += [f"{e} * {f.dump()}" for f, e in self.factors]
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> "LinearFormProduct":
        n = None
        scalar = Fraction(1)
        markers = []
        forms = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("zero:"):
                    markers.append(body[len("zero:"):].strip())
                elif body.startswith("n ="):
                    n = int(body[len("n ="):])
                elif body.startswith("scalar ="):
                    scalar = Fraction(body[len("scalar ="):].strip())
                continue
            exp, _, body = line.partition("*")
            inner = body.strip()[1:-1]
            coeff_txt, _, const_txt = inner.partition("|")
            coeffs = tuple(int(c) for c in coeff_txt.split(",")) if coeff_txt.strip() else ()
            forms.append((LinearForm(coeffs, int(const_txt)), int(exp)))
        if n is None:
            raise ValueError("missing '# n = ...' header")
        return cls(n, scalar, tuple(sorted(forms)), tuple(markers))


# -- constructions ----------------------------------------------------------

def build_vertex_vandermonde(n: int) -> LinearFormProduct:
    """prod_{0<=i<j<n} (x_j - x_i)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return LinearFormProduct.from_forms(
        n, [LinearForm.difference(n, j, i) for i, j in itertools.combinations(range(n), 2)])


def edge_form(f: Transformation, k: int) -> LinearForm:
    """d_k = x_{f(k)} - x_k (zero for a fixed point)."""
    return LinearForm.difference(f.n, f(k), k)


def _split_pair(f: Transformation, i: int, j: int):
    """Linear factors of (d_j^2 - d_i^2), or None when one of them is identically zero."""
    dj, di = edge_form(f, j), edge_form(f, i)
    minus, plus = dj - di, dj + di
    if minus.is_zero() or plus.is_zero():
        return None
    return minus, plus


def build_edge_polynomial(f: Transformation, exponent: int = 1,
                          subset: Optional[Sequence[int]] = None) -> LinearFormProduct:
    """prod_{i<j} ((x_{f(j)}-x_j)^2 - (x_{f(i)}-x_i)^2)^exponent, split into linear forms.

    Pairs whose split has an identically zero factor stay unsplit as zero
    markers. ``subset`` restricts the pairs to i<j inside it.
    """
    n = f.n
    idx = range(n) if subset is None else sorted(subset)
    forms, markers = [], []
    for i, j in itertools.combinations(idx, 2):
        split = _split_pair(f, i, j)
        if split is None:
            markers.append(f"(d_{j}^2 - d_{i}^2) with d_{j}={edge_form(f, j).dump()}, "
                           f"d_{i}={edge_form(f, i).dump()}")
            continue
        forms += [(split[0], exponent), (split[1], exponent)]
    return LinearFormProduct.from_forms(n, forms, zero_markers=markers)


def build_pair_polynomial(f: Transformation) -> LinearFormProduct:
    """P_f = prod over ordered pairs i != j of (x_j - x_i)((d_j)^2 - (d_i)^2)."""
    n = f.n
    forms, markers = [], []
    for i, j in itertools.permutations(range(n), 2):
        forms.append(LinearForm.difference(n, j, i))
        split = _split_pair(f, i, j)
        if split is None:
            markers.append(f"pair ({i},{j})")
        else:
            forms += list(split)
    return LinearFormProduct.from_forms(n, forms, zero_markers=markers)


def lcm(F: LinearFormProduct, G: LinearFormProduct) -> LinearFormProduct:
    """Factorwise max of exponents; scalar fixed to 1."""
    if F.n != G.n:
        raise DomainSizeError("LCM of products on different variable counts")
    if F.is_zero or G.is_zero:
        raise UndefinedLCMError("LCM is undefined for an identically zero product")
    exps = F.factor_map()
    for form, e in G.factors:
        exps[form] = max(exps.get(form, 0), e)
    return LinearFormProduct(F.n, Fraction(1), tuple(sorted(exps.items())))


# -- lattice evaluation ----------------------------------------------------

def lattice_points(n: int, permutations_only: bool = False) -> np.ndarray:
    if permutations_only:
        return _kernels.lex_permutations(n)
    if n ** n > LATTICE_POINT_LIMIT:
        raise ValueError(f"(Z_{n})^{n} has {n ** n} points, above LATTICE_POINT_LIMIT")
    grids = np.indices((n,) * n, dtype=np.int8).reshape(n, -1).T
    return np.ascontiguousarray(grids)


def canonical_rep_is_nonzero(P: LinearFormProduct, n: Optional[int] = None,
                             backend: Optional[str] = None):
    """Does P survive reduction mod the falling factorials (x_k)^(n)?

    The reduced polynomial is the interpolant of P's values on (Z_n)^n, so
    it is nonzero iff P is nonzero at some lattice point. With the vertex
    Vandermonde as a factor only permutation points can be non-roots. Returns
    (flag, first such point in lexicographic order or None).
    """
    n = P.n if n is None else n
    if n != P.n:
        raise DomainSizeError(f"product on {P.n} variables reduced over (Z_{n})^{n}")
    if P.is_zero:
        return False, None
    points = lattice_points(n, permutations_only=P.contains_vertex_vandermonde())
    coeffs, consts = P.form_arrays()
    k = _kernels.get_backend(backend)
    idx = k.first_nonvanishing(coeffs, consts, np.asarray(points, dtype=np.int64)) \
        if points.shape[0] <= 1 << 16 else _chunked(k, coeffs, consts, points)
    if idx < 0:
        return False, None
    return True, tuple(int(v) for v in points[idx])


def _chunked(k, coeffs, consts, points, chunk=1 << 16):
    for start in range(0, points.shape[0], chunk):
        block = np.asarray(points[start:start + chunk], dtype=np.int64)
        idx = k.first_nonvanishing(coeffs, consts, block)
        if idx >= 0:
            return start + int(idx)
    return -1
