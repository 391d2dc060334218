import pytest
from hypothesis import given, settings, strategies as st

from twobridge import laurent as lr
from twobridge.laurent import A, ONE, X, ZERO, LaurentPoly2, NotInvertibleError

a_inv = A.unit_inverse()
x_inv = X.unit_inverse()

polys = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
    st.integers(-5, 5),
    max_size=4,
).map(LaurentPoly2)


def test_additive_inverse_is_empty():
    p = A * X + (-(A * X))
    assert p == ZERO
    assert p.terms == {}


def test_distributivity_example():
    assert (A + a_inv) * X == A * X + a_inv * X


def test_difference_of_squares():
    assert (X - A) * (X + A) == X * X - A * A


def test_zero_coefficients_dropped():
    p = LaurentPoly2({(1, 0): 0, (0, 2): 3})
    assert p.terms == {(0, 2): 3}


def test_min_deg_examples():
    assert (A * A * X + a_inv).min_deg_a() == -1
    assert ONE.min_deg_a() == 0
    assert (a_inv * (X ** 3 - X.scale(2))).min_deg_a() == -1
    assert (A * A * X + a_inv).max_deg_a() == 2


def test_min_deg_of_zero_raises():
    with pytest.raises(ValueError):
        ZERO.min_deg_a()


def test_substitute_a_inverse_examples():
    p = A * A + X
    assert p.substitute_a_inverse() == a_inv * a_inv + X
    assert p.substitute_a_inverse().substitute_a_inverse() == p


def test_big_coefficients_stay_exact():
    p = (ONE + ONE) ** 200
    assert p.terms == {(0, 0): 2 ** 200}


@settings(max_examples=200)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys, polys)
def test_substitution_is_homomorphism(p, q):
    f = LaurentPoly2.substitute_a_inverse
    assert f(p * q) == f(p) * f(q)
    assert f(p + q) == f(p) + f(q)
    assert f(f(p)) == p
    if p:
        assert f(p).min_deg_a() == -p.max_deg_a()


@given(polys)
def test_format_parse_round_trip(p):
    assert LaurentPoly2.parse(str(p)) == p


def test_format_examples():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(-X) == "-x"
    assert str(a_inv * X ** 3 - a_inv * X.scale(2)) == "-2*a^-1*x + a^-1*x^3"
    assert str(A * A * x_inv + x_inv - A) == "x^-1 - a + a^2*x^-1"


def M():
    return lr.make_mat([[X, -1, X], [1, 0, 0], [0, 0, a_inv]])


def S():
    return lr.make_mat([[0, 1, 0], [0, 0, 1], [a_inv, 0, 0]])


def test_det_M_and_S():
    assert lr.mat_det(M()) == a_inv
    assert lr.mat_det(S()) == a_inv
    lr.mat_inverse(S())


def test_mat_pow_laws():
    I = lr.identity()
    assert lr.mat_pow(M(), 0) == I
    assert lr.mat_mul(lr.mat_pow(M(), -1), M()) == I
    assert lr.mat_mul(M(), lr.mat_inverse(M())) == I
    assert lr.mat_pow(M(), -3) == lr.mat_pow(lr.mat_pow(M(), -1), 3)
    assert lr.mat_pow(M(), 5) == lr.mat_mul(lr.mat_pow(M(), 2), lr.mat_pow(M(), 3))


def test_non_unit_determinant_rejected():
    m = lr.make_mat([[X + 1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(NotInvertibleError) as err:
        lr.mat_inverse(m)
    assert err.value.det == X + 1
    with pytest.raises(NotInvertibleError):
        lr.mat_pow(m, -1)


unit_entries = st.sampled_from([ONE, -ONE, A, a_inv, X, x_inv, A * X])
small_entries = st.sampled_from([ZERO, ONE, X, A, X + A, a_inv - X])


@given(unit_entries, unit_entries, unit_entries, st.lists(small_entries, min_size=3, max_size=3))
def test_triangular_inverse(d0, d1, d2, upper):
    # upper triangular with unit diagonal is invertible
    m = lr.make_mat([[d0, upper[0], upper[1]], [0, d1, upper[2]], [0, 0, d2]])
    inv = lr.mat_inverse(m)
    assert lr.mat_mul(m, inv) == lr.identity()
    assert lr.mat_mul(inv, m) == lr.identity()


@given(st.lists(small_entries, min_size=9, max_size=9), st.lists(small_entries, min_size=9, max_size=9))
def test_mat_mul_identity_and_associativity(e1, e2):
    m = lr.make_mat([e1[0:3], e1[3:6], e1[6:9]])
    n = lr.make_mat([e2[0:3], e2[3:6], e2[6:9]])
    I = lr.identity()
    assert lr.mat_mul(m, I) == m == lr.mat_mul(I, m)
    assert lr.mat_mul(lr.mat_mul(m, n), S()) == lr.mat_mul(m, lr.mat_mul(n, S()))
