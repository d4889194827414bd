import pytest
from hypothesis import given
from hypothesis import strategies as st

from kstates.polynomial import (
    ONE,
    X,
    ZERO,
    ZERO_DEGREE,
    IntPolynomial,
    NotDivisibleError,
    add,
    coeff,
    degree,
    eval_int,
    exact_div_by_x,
    leading,
    mul,
)

P = IntPolynomial
polys = st.lists(st.integers(-50, 50), max_size=7).map(IntPolynomial)


def test_add_examples():
    assert add(X, X) == P([0, 2])
    assert add(P([0, 1, 1]), ZERO) == P([0, 1, 1])
    fig8 = P([0, 5, 8, 3])
    assert add(fig8, P([0, -5, -8, -3])) == ZERO
    assert add(fig8, -fig8).coeffs == ()


def test_mul_examples():
    assert mul(P([1, 1]), P([1, 1])) == P([1, 2, 1])
    assert mul(P([3, 0, -2]), ONE) == P([3, 0, -2])
    assert mul(X, P([1, 1]) ** 2).coeffs == (0, 1, 2, 1)


def test_exact_div_by_x():
    assert exact_div_by_x(P([0, 5, 8, 3])) == P([5, 8, 3])
    assert exact_div_by_x(X) == ONE
    assert exact_div_by_x(P([1, 1]) ** 3 - 1) == P([3, 3, 1])
    with pytest.raises(NotDivisibleError):
        exact_div_by_x(P([1, 1]))


def test_eval_int():
    assert eval_int(P([0, 5, 8, 3]), 1) == 16
    assert eval_int(ZERO, 7) == 0
    assert eval_int(P([0, 2, 2]), 1) == 4
    assert eval_int(P([1, 1]) ** 3, -1) == 0


def test_degree_coeff_leading():
    fig8 = P([0, 5, 8, 3])
    assert degree(fig8) == 3 and leading(fig8) == 3
    assert coeff(X, 5) == 0
    assert coeff(X, -1) == 0
    assert degree(ZERO) == ZERO_DEGREE < 0
    assert leading(ZERO) == 0


def test_normalized_storage():
    assert P([0, 1, 0, 0]).coeffs == (0, 1)
    assert P([0, 0]).coeffs == ()
    assert P([0, 0]) == 0


def test_big_integers_do_not_wrap():
    p = P([1, 1]) ** 80
    assert p.coeff(40) == 107507208733336176461620
    assert p(1) == 2 ** 80


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        P([1.5])


@pytest.mark.parametrize(
    "poly, text",
    [
        (P([0, 5, 8, 3]), "5x + 8x^2 + 3x^3"),
        (P([-1, 0, 1]), "-1 + x^2"),
        (P([0, 1]), "x"),
        (ZERO, "0"),
        (P([2, -1]), "2 - x"),
    ],
)
def test_human_format(poly, text):
    assert poly.human() == text


def test_coeff_string_round_trip():
    for p in (ZERO, X, P([0, 5, 8, 3]), P([-4, 0, 2])):
        s = p.coeff_string()
        assert P.parse(s).coeff_string() == s


@given(polys, polys, polys)
def test_ring_laws(p, q, s):
    assert p + q == q + p
    assert (p + q) + s == p + (q + s)
    assert p * q == q * p
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s


@given(polys)
def test_div_x_inverts_mul_x(p):
    shifted = p * X
    assert exact_div_by_x(shifted) == p
    if p.coeff(0) == 0:
        assert exact_div_by_x(p) * X == p


@given(polys, polys)
def test_operations_keep_normal_form(p, q):
    for r in (p + q, p - q, p * q, -p):
        assert not r.coeffs or r.coeffs[-1] != 0
        assert IntPolynomial(r.coeffs) == r


@given(polys, st.integers(-5, 5))
def test_eval_is_ring_homomorphism(p, t):
    q = p * p + X
    assert q(t) == p(t) * p(t) + t
