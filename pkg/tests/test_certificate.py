import itertools
from fractions import Fraction

import pytest
import sympy

import oracles
from conftest import random_map
from gracelab.certificate import (
    determinantal_certificate,
    graceful_constant,
    max_subset_certificate,
    orbit_sum_value,
    pair_polynomial_value,
    power_sum_residuals,
    rep_dependence_witness,
    stabilizer_check,
    subset_certificate,
    substitution_transform_check,
)
from gracelab.errors import PremiseError, SizeCapError
from gracelab.labeling import beta, is_graceful
from gracelab.poly import build_pair_polynomial
from gracelab.transform import (
    Transformation,
    automorphism_group,
    conjugate,
    enumerate_all,
    left_coset_representatives,
    perm_compose,
    transposition,
)

T = Transformation.from_literal


def test_determinantal_certificate_examples():
    ok, wit = determinantal_certificate(T("0,0,1"))
    assert ok and len(set(oracles.labels((0, 0, 1), wit))) == 3
    assert determinantal_certificate(T("0,1")) == (False, None)


@pytest.mark.parametrize("n", range(1, 4))
def test_certificate_matches_beta_exhaustive(n):
    for f in enumerate_all(n):
        ok, wit = determinantal_certificate(f)
        assert ok == is_graceful(f)
        if ok:
            assert sorted(oracles.labels(f.images, wit)) == list(range(n))


def test_subset_certificate_examples():
    assert not subset_certificate(Transformation.identity(3), 2)
    assert subset_certificate(T("0,0,1"), 3)
    with pytest.raises(ValueError):
        subset_certificate(T("0,0,1"), 1)
    with pytest.raises(ValueError):
        subset_certificate(T("0,0,1"), 4)


def test_subset_certificate_beyond_beta_false(rng):
    for _ in range(20):
        f = random_map(rng, rng.randrange(2, 5))
        b = beta(f).beta
        if b < f.n:
            assert not subset_certificate(f, b + 1)


def test_subset_certificate_monotone(rng):
    for _ in range(20):
        f = random_map(rng, rng.randrange(2, 5))
        flags = [subset_certificate(f, m) for m in range(2, f.n + 1)]
        assert flags == sorted(flags, reverse=True)


def test_max_subset_certificate_z3():
    for f in enumerate_all(3):
        assert max_subset_certificate(f) == oracles.beta(f.images)


def test_power_sum_examples():
    assert power_sum_residuals((1, 0, 2)) == [0, 0, 0]
    assert power_sum_residuals((0, 0, 2))[0] == -1


@pytest.mark.parametrize("n", range(1, 5))
def test_power_sum_characterises_permutations(n):
    for x in itertools.product(range(n), repeat=n):
        assert (power_sum_residuals(x) == [0] * n) == (sorted(x) == list(range(n)))


def test_stabilizer_examples():
    assert stabilizer_check(T("0,0,0"), transposition(3, 1, 2))
    assert not stabilizer_check(T("0,0,1"), transposition(3, 1, 2))
    for f in enumerate_all(3):
        assert stabilizer_check(f, (0, 1, 2))


def _expanded_pair_poly(f, xs):
    n = f.n
    d = [xs[f(k)] - xs[k] for k in range(n)]
    P = sympy.Integer(1)
    for i, j in itertools.permutations(range(n), 2):
        P *= (xs[j] - xs[i]) * (d[j] ** 2 - d[i] ** 2)
    return sympy.Poly(sympy.expand(P), *xs)


def test_stabilizer_matches_expanded_polynomial():
    # exact polynomial identity via full sympy expansion, independent of the factor code
    xs = sympy.symbols("x0:3")
    for f in enumerate_all(3):
        P = _expanded_pair_poly(f, xs)
        for s in itertools.permutations(range(3)):
            Ps = sympy.Poly(P.as_expr().xreplace({xs[k]: xs[s[k]] for k in range(3)}), *xs)
            assert stabilizer_check(f, s) == (Ps == P), (f, s)


def test_aut_always_stabilises(rng):
    for _ in range(40):
        f = random_map(rng, rng.randrange(2, 6))
        for g in automorphism_group(f):
            assert stabilizer_check(f, g)


def test_pair_polynomial_value_agrees_with_product(rng):
    for _ in range(60):
        n = rng.randrange(2, 5)
        f = random_map(rng, n)
        x = [Fraction(rng.randrange(-7, 8), rng.randrange(1, 5)) for _ in range(n)]
        assert pair_polynomial_value(f, x) == build_pair_polynomial(f).evaluate(x)


@pytest.mark.parametrize("n", [3, 4])
def test_constant_value_at_graceful_points(n):
    c = graceful_constant(n)
    for f in enumerate_all(n):
        for x in itertools.permutations(range(n)):
            if sorted(oracles.labels(f.images, x)) == list(range(n)):
                v = pair_polynomial_value(f, x)
                assert abs(v) == abs(c)
                assert v == c  # ordered pairs square away every sign


def test_orbit_sum_examples():
    f = T("0,0")
    x = (Fraction(1, 3), Fraction(-2))
    assert orbit_sum_value(f, [(0, 1)], x) == pair_polynomial_value(f, x)


def test_orbit_sum_term_independent_of_aut_coset_member(rng):
    for _ in range(30):
        f = random_map(rng, rng.randrange(2, 5))
        aut = automorphism_group(f)
        x = [Fraction(rng.randrange(-9, 10), rng.randrange(1, 4)) for _ in range(f.n)]
        for r in left_coset_representatives(aut):
            vals = {pair_polynomial_value(conjugate(perm_compose(r, g), f), x) for g in aut}
            assert len(vals) == 1


def test_rep_dependence_found_for_path():
    r = rep_dependence_witness(T("0,0,1"))
    assert r.found and r.points_checked == 6
    assert r.witness["sum_with_representative"] != r.witness["sum_with_alternative"]
    assert rep_dependence_witness(T("0,0,1")) == r


def test_rep_dependence_guards():
    with pytest.raises(PremiseError):
        rep_dependence_witness(T("0,0,0"))
    with pytest.raises(SizeCapError):
        rep_dependence_witness(T("0,0,1,2,3"))


def test_substitution_check_examples():
    assert substitution_transform_check(T("0,0,1"))
    assert substitution_transform_check(T("0"))
