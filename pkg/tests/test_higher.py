from fractions import Fraction as F
from itertools import product
from math import comb, factorial, prod

import pytest
import sympy

from sylvester.errors import DomainError
from sylvester.exact import CycloElement, RatPoly, cyclo_root_power
from sylvester.higher import (
    bernoulli_higher_number,
    bernoulli_higher_poly,
    bernoulli_numbers,
    euler_zero_values,
    frobenius_numbers,
    gen_euler_numbers,
    gen_euler_poly_at,
)

t, x = sympy.symbols("t x")


def _series_coeffs(expr, n):
    """n! * [t^k] expr for k = 0..n, as sympy expressions in x."""
    ser = sympy.series(expr, t, 0, n + 1).removeO()
    return [sympy.expand(ser.coeff(t, k) * factorial(k)) for k in range(n + 1)]


def _to_ratpoly(expr):
    poly = sympy.Poly(expr, x)
    return RatPoly([F(int(c.p), int(c.q)) for c in poly.all_coeffs()[::-1]])


def _sympy_to_fraction(c):
    c = sympy.nsimplify(c)
    return F(int(c.p), int(c.q))


# -- Bernoulli numbers -----------------------------------------------------------

def test_bernoulli_examples():
    assert bernoulli_numbers(0).values == (1,)
    B = bernoulli_numbers(2)
    assert B[1] == F(-1, 2)
    assert B[2] == F(1, 6)


def test_bernoulli_against_sympy():
    B = bernoulli_numbers(30)
    for n in range(31):
        if n == 1:
            continue  # sympy uses B_1 = +1/2
        ref = sympy.bernoulli(n)
        assert B[n] == F(int(ref.p), int(ref.q))


def test_bernoulli_table_invariants():
    B = bernoulli_numbers(40)
    assert B[0] == 1 and B[1] == F(-1, 2)
    assert all(B[k] == 0 for k in range(3, 41, 2))
    for n in range(2, 41):
        assert sum(comb(n, k) * B[k] for k in range(n)) == 0


# -- higher-order Bernoulli polynomials ----------------------------------------

def test_higher_bernoulli_examples():
    assert bernoulli_higher_poly(0, [3, 7]) == RatPoly([1])
    assert bernoulli_higher_poly(1, [1, 2]) == RatPoly([F(-3, 2), 1])
    for d in (1, 4, 9):
        assert bernoulli_higher_poly(1, [d]) == RatPoly([F(-d, 2), 1])


@pytest.mark.parametrize("parts, n", [([1], 5), ([3], 4), ([1, 2], 4), ([2, 3], 3), ([1, 2, 3], 3), ([2, 2, 5], 3)])
def test_higher_bernoulli_against_generating_function(parts, n):
    gf = sympy.exp(x * t) * t ** len(parts) * prod(parts)
    for d in parts:
        gf /= sympy.exp(d * t) - 1
    ref = _series_coeffs(gf, n)
    for k in range(n + 1):
        assert bernoulli_higher_poly(k, parts) == _to_ratpoly(ref[k])


def _umbral_symmetric(n, parts):
    """(x + sum d_i B)^n with B^k -> B_k, expanded by brute force."""
    B = bernoulli_numbers(n).values
    m = len(parts)
    coeffs = [F(0)] * (n + 1)
    for ks in product(range(n + 1), repeat=m):
        total = sum(ks)
        if total > n:
            continue
        multinom = factorial(n) // (prod(factorial(k) for k in ks) * factorial(n - total))
        term = F(multinom)
        for d, k in zip(parts, ks):
            term *= d**k * B[k]
        coeffs[n - total] += term
    return RatPoly(coeffs)


@pytest.mark.parametrize("parts", [[1], [2, 3], [1, 1, 4], [2, 5, 6], [1, 2, 3, 4]])
def test_higher_bernoulli_matches_umbral_form(parts):
    for n in range(6):
        assert bernoulli_higher_poly(n, parts) == _umbral_symmetric(n, parts)


def test_higher_bernoulli_degree_and_leading():
    for parts in ([1], [3, 5], [2, 2, 7]):
        for n in range(7):
            p = bernoulli_higher_poly(n, parts)
            assert p.degree == n and p.leading == 1


_PART_GRID = [[1], [2], [1, 2], [3, 3], [2, 3, 5], [1, 4, 6], [2, 2, 3, 7], [1, 2, 3, 4, 5], [3, 5, 6, 10, 12]]


@pytest.mark.parametrize("parts", [p for p in _PART_GRID if len(p) >= 1])
def test_noerlund_recursion(parts):
    # B_n(x + d_m | d^m) - B_n(x | d^m) = n d_m B_{n-1}(x | d^(m-1))
    d_m = parts[-1]
    for n in range(1, 7):
        lhs = bernoulli_higher_poly(n, parts).shift(d_m) - bernoulli_higher_poly(n, parts)
        rhs = bernoulli_higher_poly(n - 1, parts[:-1]) * (n * d_m)
        assert lhs == rhs


@pytest.mark.parametrize("parts", [[1], [2, 3], [1, 4, 4], [2, 3, 5, 7]])
def test_negated_parts_transformation(parts):
    for n in range(6):
        neg = bernoulli_higher_poly(n, [-d for d in parts])
        assert neg == bernoulli_higher_poly(n, parts).shift(sum(parts))


def test_higher_bernoulli_number_is_value_at_zero():
    assert bernoulli_higher_number(2, [1, 2]) == bernoulli_higher_poly(2, [1, 2])(0)


# -- Frobenius numbers ------------------------------------------------------------

def test_frobenius_examples():
    rho = cyclo_root_power(5, 2)
    H = frobenius_numbers(3, rho)
    assert H[0] == 1
    assert H[1] == (rho - 1).inverse()
    assert frobenius_numbers(1, CycloElement(2, [-1]))[1] == F(-1, 2)


def test_frobenius_rejects_one():
    with pytest.raises(DomainError):
        frobenius_numbers(3, CycloElement(4, [1]))


@pytest.mark.parametrize("rho", [F(-1), F(2), F(1, 3), F(-5, 2)])
def test_frobenius_against_generating_function(rho):
    N = 7
    srho = sympy.Rational(rho.numerator, rho.denominator)
    ref = _series_coeffs((1 - srho) / (sympy.exp(t) - srho), N)
    H = frobenius_numbers(N, CycloElement(1, [rho]))
    for n in range(N + 1):
        assert H[n] == _sympy_to_fraction(ref[n])


@pytest.mark.parametrize("j, a", [(3, 1), (4, 3), (5, 2), (8, 3), (12, 5)])
def test_frobenius_recursion_invariant(j, a):
    rho = cyclo_root_power(j, a)
    H = frobenius_numbers(8, rho)
    for n in range(1, 9):
        assert (rho - 1) * H[n] == sum((H[k] * comb(n, k) for k in range(n)), CycloElement(j, [0]))


def test_frobenius_at_minus_one_gives_euler_values():
    H = frobenius_numbers(12, CycloElement(2, [-1]))
    assert tuple(h.coords[0] for h in H.values) == euler_zero_values(12)


def test_euler_zero_values_against_sympy():
    E = euler_zero_values(12)
    for n in range(13):
        ref = sympy.euler(n, 0)
        assert E[n] == F(int(ref.p), int(ref.q))


# -- generalized Euler numbers and polynomials ---------------------------------

def test_gen_euler_empty_tail_conventions():
    rho = cyclo_root_power(7, 3)
    H = gen_euler_numbers(4, rho, [])
    assert H[0] == 1
    assert all(H[n] == 0 for n in range(1, 5))


def test_gen_euler_single_part():
    rho = cyclo_root_power(5, 1)
    for d in (1, 2, 3, 4):
        H = gen_euler_numbers(1, rho, [d])
        assert H[1] == d * (rho**d - 1).inverse()


def test_gen_euler_domain_error():
    with pytest.raises(DomainError):
        gen_euler_numbers(2, cyclo_root_power(3, 1), [1, 6])


def test_gen_euler_poly_examples():
    rho = cyclo_root_power(5, 1)
    s = F(7, 3)
    assert gen_euler_poly_at(0, s, rho, [1, 2]) == 1
    assert gen_euler_poly_at(1, s, rho, []) == s
    for d in (1, 3):
        assert gen_euler_poly_at(1, s, rho, [d]) == s + d * (rho**d - 1).inverse()


@pytest.mark.parametrize(
    "j, a, parts",
    [(2, 1, [1, 3]), (3, 1, [1, 2, 4]), (4, 1, [1, 2, 3]), (5, 2, [1, 2, 3, 4]), (6, 1, [1, 5, 7]), (12, 7, [5, 8, 9])],
)
def test_gen_euler_shift_recursion(j, a, parts):
    # H(s + d_m | d^m) - rho^d_m H(s | d^m) = (1 - rho^d_m) H(s | d^(m-1))
    rho = cyclo_root_power(j, a)
    d_m = parts[-1]
    sigma = rho**d_m
    for n in range(6):
        for s in (F(0), F(1), F(-2), F(5, 3)):
            lhs = gen_euler_poly_at(n, s + d_m, rho, parts) - sigma * gen_euler_poly_at(n, s, rho, parts)
            rhs = (1 - sigma) * gen_euler_poly_at(n, s, rho, parts[:-1])
            assert lhs == rhs


@pytest.mark.parametrize("parts", [[1], [3], [1, 3], [1, 1, 5], [3, 5, 7]])
def test_gen_euler_minus_one_is_higher_euler(parts):
    # odd parts at rho = -1: the generating function is 2^m e^{st} / prod(e^{d t} + 1)
    N = 5
    gf = 2 ** len(parts) * sympy.exp(x * t)
    for d in parts:
        gf /= sympy.exp(d * t) + 1
    ref = _series_coeffs(gf, N)
    rho = CycloElement(2, [-1])
    for n in range(N + 1):
        for s in (0, 2, F(1, 2)):
            got = gen_euler_poly_at(n, s, rho, parts)
            want = ref[n].subs(x, sympy.Rational(s.numerator, s.denominator) if isinstance(s, F) else s)
            assert got == _sympy_to_fraction(want)
