from fractions import Fraction

import pytest
import sympy

import oracles
from conftest import random_map
from gracelab.errors import PremiseError, SingularMatrixError
from gracelab.ratmat import (
    RationalMatrix,
    a_plus_i,
    bareiss_determinant,
    det_a_plus_i,
    inverse_a_plus_i,
    substitution_transform_check,
)
from gracelab.transform import Transformation, enumerate_semigroup

T = Transformation.from_literal


def test_bareiss_matches_sympy(rng):
    for _ in range(200):
        n = rng.randrange(1, 7)
        m = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(n)]
        assert bareiss_determinant(m) == sympy.Matrix(m).det()


def test_bareiss_pivoting_and_singular():
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([]) == 1


def test_rational_determinant_and_inverse(rng):
    for _ in range(100):
        n = rng.randrange(1, 6)
        rows = [[Fraction(rng.randrange(-5, 6), rng.randrange(1, 4)) for _ in range(n)] for _ in range(n)]
        m = RationalMatrix(rows)
        det = m.determinant()
        assert det == oracles.gaussian_det(rows)
        if det != 0:
            assert m @ m.inverse() == RationalMatrix.identity(n)
            assert m.inverse() @ m == RationalMatrix.identity(n)
        else:
            with pytest.raises(SingularMatrixError):
                m.inverse()


def test_inverse_example():
    f = T("0,0,1")
    m = a_plus_i(f)
    assert bareiss_determinant([[int(v) for v in r] for r in m.rows]) == 2
    inv = inverse_a_plus_i(f)
    assert m @ inv == RationalMatrix.identity(3)
    assert inv[0, 0] == Fraction(1, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_det_two_for_semigroup(n):
    for f in enumerate_semigroup(n):
        assert det_a_plus_i(f) == 2


def test_det_cycle_formula(rng):
    """det(A+I) = 0 with an even cycle, else 2^(number of odd cycles)."""
    for _ in range(300):
        f = random_map(rng, rng.randrange(1, 8))
        cycles, seen = [], set()
        for v in range(f.n):
            path, w = [], v
            while w not in seen and w not in path:
                path.append(w)
                w = f(w)
            if w in path:
                cycles.append(len(path) - path.index(w))
            seen.update(path)
        expected = 0 if any(c % 2 == 0 for c in cycles) else 2 ** len(cycles)
        assert det_a_plus_i(f) == expected


def test_singular_error_carries_determinant():
    with pytest.raises(SingularMatrixError) as info:
        inverse_a_plus_i(T("1,0"))
    assert info.value.determinant == 0


def test_nonsemigroup_invertible_case():
    f = T("1,2,0")  # 3-cycle, det = 2
    assert a_plus_i(f) @ inverse_a_plus_i(f) == RationalMatrix.identity(3)


def test_substitution_examples():
    assert substitution_transform_check(T("0,0,1"))
    assert substitution_transform_check(T("0"))
    for n in range(1, 7):
        assert all(substitution_transform_check(f) for f in enumerate_semigroup(n))
    with pytest.raises(PremiseError):
        substitution_transform_check(T("1,0"))


def test_apply():
    m = RationalMatrix(((1, 2), (0, Fraction(1, 2))))
    assert m.apply((2, 4)) == (Fraction(10), Fraction(2))
