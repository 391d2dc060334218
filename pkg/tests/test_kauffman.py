import pytest

from twobridge import laurent as lr
from twobridge.kauffman import (
    F_of,
    L_matrix,
    LemmaHypothesisError,
    constants,
    delta,
    f_k,
    f_k_recursion,
    f_lemma,
    f_lemma_direct,
    f_lemma_product,
    kauffman_bound,
)
from twobridge.laurent import A, ONE, X, ZERO, LaurentPoly2
from twobridge.rational import eval_cf
from twobridge.verify import lemma_words, words_up_to

x_inv = X.unit_inverse()


def test_constants_shape():
    c = constants()
    assert c.A == lr.make_mat([[0, 1, 0], [-1, X, 0], [0, 0, 0]])
    assert c.B == lr.make_mat([[1, 0, 0], [X, 0, 0], [0, 0, 0]])
    assert c.M_inv == lr.make_mat([[0, 1, 0], [-1, X, A * X], [0, 0, A]])
    assert c.w[2] == A * A * x_inv + x_inv - A


def test_no_negative_powers_of_a():
    c = constants()
    for m in (c.M_inv, c.M_inv_S):
        for e in lr.mat_entries(m):
            assert e.is_zero() or e.min_deg_a() >= 0
    assert all(e.min_deg_a() >= 0 for e in c.w)


def test_auxiliary_identities():
    c = constants()
    ASw = lr.mat_vec(lr.mat_mul(c.A, c.S), c.w)
    ASw0 = tuple(e.at_a_zero() for e in ASw)
    assert ASw0 == tuple(x_inv * e for e in lr.mat_vec(c.A, c.u))
    Au = lr.mat_vec(c.A, c.u)
    outer = lr.make_mat([[Au[i] * c.v[j] for j in range(3)] for i in range(3)])
    assert c.B == outer


def test_L_of_kink():
    assert L_matrix((1,)) == A.unit_inverse()
    assert F_of((1,)) == ONE


def test_trefoil():
    F = F_of((3,))
    assert kauffman_bound(F) == 1
    assert kauffman_bound(F.substitute_a_inverse()) == -F.max_deg_a() - 1


def test_kauffman_bound_of_unknot():
    assert kauffman_bound(ONE) == -1
    with pytest.raises(ValueError):
        kauffman_bound(ZERO)


def test_figure_eight_is_symmetric():
    F = F_of((3, 2))
    assert F == F.substitute_a_inverse()


def test_five_two_bound():
    assert kauffman_bound(F_of((2, 2, 3))) == 1


def test_unlink_value():
    # T(2,1,2) has fraction 0/1: a split two-component unlink
    assert eval_cf((2, 1, 2)).p == 0
    assert F_of((2, 1, 2)) == delta()


def test_F_invariant_on_isotopic_words():
    classes = {}
    for word in words_up_to(8):
        f = eval_cf(word)
        if f.is_infinite or f.p % 2 == 0:
            continue
        classes.setdefault((f.p, f.q % f.p), set()).add(F_of(word))
    assert len(classes) > 10
    assert all(len(v) == 1 for v in classes.values())


def test_f_k_values():
    assert f_k(1) == ONE
    assert f_k(2) == X
    assert f_k(3) == X * X - 1
    assert f_k(4) == X ** 3 - X.scale(2)
    for k in range(1, 13):
        assert f_k(k) == f_k_recursion(k)
        assert f_k(k).max_deg_x() == k - 1


@pytest.mark.parametrize("word", [(1,), (3,), (1, 1), (2, 2, 3), (1, 2, 1), (4, 3, 2, 5)])
def test_f_lemma_forms_agree(word):
    f = f_lemma(word)
    assert f == f_lemma_direct(word) == f_lemma_product(word)
    assert f == L_matrix(word).coefficient_of_a(-1)


def test_f_lemma_single_box():
    assert f_lemma((3,)) == X * X - 2
    assert f_lemma_product((1,)) == ONE


def test_lemma_hypothesis():
    with pytest.raises(LemmaHypothesisError):
        f_lemma((2, 1, 2))


def test_lemma_small_family():
    for word in lemma_words(12):
        L = L_matrix(word)
        assert L.min_deg_a() == -1, word
        assert f_lemma(word) == L.coefficient_of_a(-1) != ZERO


def test_coefficient_is_polynomial_in_x():
    f = f_lemma((2, 2, 3))
    assert isinstance(f, LaurentPoly2)
    assert all(i == 0 for (i, _j) in f.terms)
