from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pascal_rays.algebra import (
    RationalPolynomial as RP,
    binomial,
    count_real_roots,
    integer_sqrt_floor,
    poly_gcd,
    real_rooted,
    square_free_decomposition,
    sturm_chain,
)
from pascal_rays.errors import UsageError

from oracles import C, bisection_root_count, poly_from_roots, poly_mul

X = RP.x()


def test_binomial_examples():
    assert binomial(5, 2) == C(5, 2) == 10
    assert binomial(7, -1) == 0
    assert binomial(9, 0) == 1


@pytest.mark.parametrize("n,k", [(3, 4), (-2, 1), (-1, -1), (0, 1)])
def test_binomial_zero_convention(n, k):
    assert binomial(n, k) == 0


def test_binomial_recurrence_and_symmetry():
    for n in range(0, 61):
        for k in range(0, n + 1):
            assert binomial(n, k) == C(n, k)
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k) or n == 0
            assert binomial(n, k) == binomial(n, n - k)


def test_poly_arithmetic_examples():
    assert (X ** 2 + 3 * X).derivative() == 2 * X + 3
    assert ((1 + X) ** 4)(1) == 16
    assert (1 + X) * (1 - X) == 1 - X ** 2


def test_degree_bookkeeping():
    assert RP().degree == -1
    assert RP([0, 0, 0]).is_zero()
    assert RP([1, 2, 0, 0]).degree == 1
    assert (X ** 3 - X ** 3).is_zero()
    assert RP([5]).derivative().is_zero()


def test_divmod_reconstructs():
    p = RP([3, -1, 0, 2, 7])
    q = RP([1, 0, 2])
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


def test_gcd_examples():
    assert poly_gcd((1 + X) ** 2, 1 + X) == 1 + X
    assert poly_gcd(X ** 2 + 1, X) == RP([1])
    p = RP([2, 4, 6])
    assert poly_gcd(p, RP()) == p.monic()
    with pytest.raises(UsageError):
        poly_gcd(RP(), RP())


small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(small_fracs, min_size=1, max_size=9).map(RP)


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys)
def test_gcd_divides_both(p, q, common):
    # multiply in a shared factor so nontrivial gcds actually occur
    a, b = p * common, q * common
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    assert (a % g).is_zero()
    assert (b % g).is_zero()
    if not common.is_zero():
        assert (g % common.monic()).is_zero()


def test_gcd_matches_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.Symbol("x")
    pairs = [([1, 2, 1], [1, 1]), ([6, 11, 6, 1], [2, 3, 1]), ([1, 0, 1], [0, 1]),
             ([-2, 1, -2, 1], [4, 0, -5, 0, 1])]
    for a, b in pairs:
        ours = poly_gcd(RP(a), RP(b))
        theirs = sympy.Poly(sympy.gcd(sympy.Poly(a[::-1], x), sympy.Poly(b[::-1], x)), x).monic()
        assert [Fraction(str(c)) for c in reversed(theirs.all_coeffs())] == list(ours.coefficients)


@pytest.mark.parametrize("p,expected", [
    (X ** 2 - 1, 2),
    (X ** 2 + 1, 0),
    ((1 + X) ** 3, 1),
    (RP([7]), 0),
    (X, 1),
])
def test_count_real_roots_examples(p, expected):
    assert count_real_roots(p) == expected


def test_count_real_roots_zero_poly():
    with pytest.raises(UsageError):
        count_real_roots(RP())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-10, 10), min_size=1, max_size=6),
       st.lists(st.integers(1, 9), max_size=1))
def test_count_real_roots_against_bisection(roots, complex_pairs):
    coeffs = poly_from_roots(roots)
    for c in complex_pairs:
        coeffs = poly_mul(coeffs, [c, 0, 1])
    expected = bisection_root_count(coeffs, -11, 11)
    assert expected == len(set(roots))
    assert count_real_roots(RP(coeffs)) == expected


@pytest.mark.parametrize("p,expected", [
    ((1 + X) ** 4, True),
    (1 + X + X ** 2, False),
    (1 + 3 * X + X ** 2, True),
    ((X ** 2 + 1) ** 2, False),
    ((X - 1) ** 2 * (X ** 2 + 2), False),
    (RP([3]), True),
])
def test_real_rooted_examples(p, expected):
    assert real_rooted(p) is expected


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-12, 12), min_size=1, max_size=8), st.integers(1, 5))
def test_real_rooted_products_of_linear_factors(roots, scale):
    assert real_rooted(RP(poly_from_roots(roots)) * scale)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=5))
def test_square_free_decomposition_reassembles(roots):
    p = RP(poly_from_roots(roots)) * 3
    factors = square_free_decomposition(p)
    prod = RP([p.leading])
    for mult, f in enumerate(factors, start=1):
        assert poly_gcd(f, f.derivative()).degree == 0
        prod = prod * f ** mult
    assert prod == p


def test_sturm_chain_starts_with_p_and_derivative():
    p = X ** 3 - 2 * X
    chain = sturm_chain(p)
    assert chain[0] == p and chain[1] == p.derivative()
    assert chain[-1].degree == 0


def test_integer_sqrt_floor_examples():
    assert integer_sqrt_floor(609) == 24
    assert integer_sqrt_floor(0) == 0
    assert integer_sqrt_floor(144) == 12


@given(st.integers(1, 10 ** 6))
def test_integer_sqrt_floor_squares(m):
    assert integer_sqrt_floor(m * m) == m
    assert integer_sqrt_floor(m * m + 1) == m
    assert integer_sqrt_floor(m * m - 1) == m - 1


def test_integer_sqrt_floor_rejects_negative():
    with pytest.raises(UsageError):
        integer_sqrt_floor(-1)
