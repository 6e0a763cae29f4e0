"""Polynomial certificates for gracefulness and the symmetry checks around them."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .config import check_size
from .errors import PremiseError, SizeCapError
from .poly import (
    LinearFormProduct,
    build_edge_polynomial,
    build_pair_polynomial,
    build_vertex_vandermonde,
    canonical_rep_is_nonzero,
    lcm,
)
from .ratmat import substitution_transform_check  # noqa: F401  (re-export)
from .transform import (
    Transformation,
    automorphism_group,
    conjugate,
    left_coset_representatives,
    perm_compose,
    square,
)

REP_DEPENDENCE_MAX_N = 4


def determinantal_certificate(f: Transformation, *, max_n: Optional[int] = None,
                              backend: Optional[str] = None):
    """Nonvanishing of LCM(vertex Vandermonde, edge product) mod falling factorials.

    Returns (flag, witness labeling or None). An identically zero edge
    product (two fixed points, or a 2-cycle) makes the certificate vanish.
    """
    check_size(f.n, max_n)
    vertex = build_vertex_vandermonde(f.n)
    edge = build_edge_polynomial(f)
    if edge.is_zero:
        return False, None
    return canonical_rep_is_nonzero(lcm(vertex, edge), f.n, backend=backend)


def subset_certificate(f: Transformation, m: int, *, max_n: Optional[int] = None,
                       backend: Optional[str] = None) -> bool:
    """Some m-subset S has LCM(V^2, E_S^2) nonvanishing on the lattice.

    E_S is the edge product over pairs inside S. Exponent parity does not
    affect vanishing; the squares are kept to match the construction.
    """
    n = f.n
    if not 2 <= m <= n:
        raise ValueError(f"m must satisfy 2 <= m <= n={n}, got {m}")
    check_size(n, max_n)
    vertex_sq = build_vertex_vandermonde(n) ** 2
    for subset in itertools.combinations(range(n), m):
        edge = build_edge_polynomial(f, exponent=2, subset=subset)
        if edge.is_zero:
            continue
        ok, _ = canonical_rep_is_nonzero(lcm(vertex_sq, edge), n, backend=backend)
        if ok:
            return True
    return False


def max_subset_certificate(f: Transformation, **kw) -> int:
    """Largest m with subset_certificate true (1 when none, since one label always exists)."""
    best = 1
    for m in range(2, f.n + 1):
        if not subset_certificate(f, m, **kw):
            break
        best = m
    return best


def power_sum_residuals(x: Sequence[int]) -> list:
    """[sum_i x_i^k - sum_i i^k for k = 1..n]."""
    n = len(x)
    return [sum(int(v) ** k for v in x) - sum(i ** k for i in range(n)) for k in range(1, n + 1)]


def stabilizer_check(f: Transformation, sigma: Sequence[int]) -> bool:
    """P_f(x_sigma) == P_f(x) as polynomials (exact, through factorisation)."""
    P = build_pair_polynomial(f)
    return P.substitute(tuple(sigma)) == P


def pair_polynomial_degree(n: int) -> int:
    return 3 * n * (n - 1)


def pair_polynomial_value(g: Transformation, x: Sequence) -> Fraction:
    """P_g(x) straight from the product formula, exact.

    Rational points are scaled to integers first; P_g is homogeneous so the
    value is P_g(D x) / D^deg.
    """
    n = g.n
    den = 1
    for v in x:
        den = math.lcm(den, Fraction(v).denominator)
    y = [int(Fraction(v) * den) for v in x]
    im = g.images
    d = [y[im[k]] - y[k] for k in range(n)]
    value = 1
    for i in range(n):
        for j in range(n):
            if i != j:
                value *= (y[j] - y[i]) * (d[j] * d[j] - d[i] * d[i])
                if value == 0:
                    return Fraction(0)
    return Fraction(value, den ** pair_polynomial_degree(n))


def orbit_sum_value(f: Transformation, reps: Sequence[Sequence[int]], x: Sequence) -> Fraction:
    """sum over sigma in reps of P_{sigma f sigma^-1}(x)."""
    total = Fraction(0)
    for sigma in reps:
        total += pair_polynomial_value(conjugate(sigma, f), x)
    return total


def graceful_constant(n: int) -> int:
    """prod_{0<=i!=j<n} (j-i)(j^2-i^2)."""
    value = 1
    for i, j in itertools.permutations(range(n), 2):
        value *= (j - i) * (j * j - i * i)
    return value


@dataclass(frozen=True)
class RepDependence:
    found: bool
    points_checked: int
    dependent_points: int
    witness: Optional[dict]


def rep_dependence_witness(f: Transformation) -> RepDependence:
    """Search permutation points for a coset-representative-dependent orbit sum.

    Sums run over one representative per left coset of Aut(G_{f^2}); a
    witness is a point and a coset whose members give different terms.
    """
    n = f.n
    if n > REP_DEPENDENCE_MAX_N:
        raise SizeCapError(f"rep_dependence_witness supports n <= {REP_DEPENDENCE_MAX_N}")
    aut_f = automorphism_group(f)
    aut_f2 = automorphism_group(square(f))
    if not (aut_f.issubset(aut_f2) and aut_f.order < aut_f2.order):
        raise PremiseError(f"Aut(G_f) is not a proper subgroup of Aut(G_f^2) for f={f}")
    reps = left_coset_representatives(aut_f2)
    cosets = [[perm_compose(r, g) for g in aut_f2.elements] for r in reps]
    witness = None
    dependent = 0
    checked = 0
    for x in itertools.permutations(range(n)):
        checked += 1
        hit = None
        for ci, coset in enumerate(cosets):
            values = [pair_polynomial_value(conjugate(s, f), x) for s in coset]
            base = pair_polynomial_value(conjugate(reps[ci], f), x)
            for s, v in zip(coset, values):
                if v != base:
                    hit = (ci, s, base, v)
                    break
            if hit:
                break
        if hit is None:
            continue
        dependent += 1
        if witness is None:
            ci, alt, base, v = hit
            total = orbit_sum_value(f, reps, x)
            witness = {
                "point": list(x),
                "coset_index": ci,
                "representative": list(reps[ci]),
                "alternative": list(alt),
                "sum_with_representative": str(total),
                "sum_with_alternative": str(total - base + v),
            }
    return RepDependence(witness is not None, checked, dependent, witness)


__all__ = [
    "LinearFormProduct",
    "determinantal_certificate",
    "subset_certificate",
    "max_subset_certificate",
    "power_sum_residuals",
    "stabilizer_check",
    "pair_polynomial_value",
    "orbit_sum_value",
    "graceful_constant",
    "rep_dependence_witness",
    "substitution_transform_check",
]
