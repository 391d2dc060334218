"""Matrix formula for the L-polynomial of T(a1, ..., an), the Kauffman
polynomial F = a^w L, the Kauffman bound, and the min-degree lemma check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from . import laurent as lr
from .diagram import build_diagram, orient, writhe
from .laurent import A as a_, X as x_, LaurentPoly2, ONE, ZERO
from .rational import check_word

__all__ = [
    "FormulaConstants",
    "TranscriptionError",
    "LemmaHypothesisError",
    "constants",
    "L_matrix",
    "F_of",
    "kauffman_bound",
    "f_lemma",
    "f_lemma_direct",
    "f_lemma_product",
    "f_k",
    "f_k_recursion",
    "delta",
]

_a_inv = a_.unit_inverse()
_x_inv = x_.unit_inverse()


class TranscriptionError(AssertionError):
    """Computed auxiliary matrices disagree with their published values."""


class LemmaHypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class FormulaConstants:
    M: tuple
    S: tuple
    v: tuple
    w: tuple
    A: tuple
    B: tuple
    u: tuple
    M_inv: tuple
    M_inv_S: tuple


# values as displayed alongside the formula, used only to check the computed ones
_PUBLISHED_A = ((0, 1, 0), (-1, "x", 0), (0, 0, 0))
_PUBLISHED_B = ((1, 0, 0), ("x", 0, 0), (0, 0, 0))


def _entry(e) -> LaurentPoly2:
    return x_ if e == "x" else LaurentPoly2.constant(e)


def _at_a_zero(m):
    return lr.mat_map(m, LaurentPoly2.at_a_zero)


@lru_cache(maxsize=1)
def constants() -> FormulaConstants:
    """Build M, S, v, w, derive A, B, u and check them against the published values."""
    M = lr.make_mat([[x_, -1, x_], [1, 0, 0], [0, 0, _a_inv]])
    S = lr.make_mat([[0, 1, 0], [0, 0, 1], [_a_inv, 0, 0]])
    v = lr.make_vec([1, 0, 0])
    # (a^2 + 1)/x - a, kept as a Laurent polynomial
    w = lr.make_vec([a_, a_ * a_, (a_ * a_ + 1) * _x_inv - a_])
    u = lr.make_vec([0, 1, 0])

    M_inv = lr.mat_inverse(M)
    M_inv_S = lr.mat_mul(M_inv, S)
    A = _at_a_zero(M_inv)
    B = _at_a_zero(lr.mat_mul(lr.mat_pow(M, -2), lr.mat_mul(S, M_inv)))

    for name, computed, published in (("A", A, _PUBLISHED_A), ("B", B, _PUBLISHED_B)):
        expected = lr.make_mat([[_entry(e) for e in row] for row in published])
        if computed != expected:
            raise TranscriptionError(f"{name} computed as {computed}, expected {expected}")
    return FormulaConstants(M, S, v, w, A, B, u, M_inv, M_inv_S)


def L_matrix(word: Sequence[int]) -> LaurentPoly2:
    """L-polynomial of T(a1, ..., an) as ``(1/a) v^t M^(-a1-1) S ... M^(-an-1) S w``."""
    word = tuple(word)
    check_word(word)
    c = constants()
    row = c.v
    for a in word:
        row = lr.vec_mat(row, lr.mat_mul(lr.mat_pow(c.M_inv, a + 1), c.S))
    return lr.vec_dot(row, c.w).shift(dega=-1)


def F_of(word: Sequence[int], flip_second: bool = False) -> LaurentPoly2:
    """Kauffman polynomial ``a^w(T) L_T`` of the oriented diagram T(word)."""
    w = writhe(orient(build_diagram(word), flip_second=flip_second))
    return L_matrix(word).shift(dega=w)


def kauffman_bound(F: LaurentPoly2) -> int:
    """Upper bound ``min-deg_a F - 1`` on the maximal Thurston-Bennequin number."""
    if F.is_zero():
        raise ValueError("Kauffman bound of the zero polynomial is undefined")
    return F.min_deg_a() - 1


def delta() -> LaurentPoly2:
    """Value of a split unknot: ``(a + 1/a)/x - 1``."""
    return (a_ + _a_inv) * _x_inv - ONE


def _check_lemma_hypothesis(word: tuple) -> None:
    check_word(word)
    interior = word[1:-1]
    if any(a < 2 for a in interior):
        raise LemmaHypothesisError(
            f"{word}: interior entries must be >= 2 (a1, an >= 1, ai >= 2 otherwise)"
        )


def f_lemma_direct(word: Sequence[int]) -> LaurentPoly2:
    """``(v^t M^-a1 (M^-1 S) ... M^-an (M^-1 S) w)`` evaluated at a = 0."""
    word = tuple(word)
    _check_lemma_hypothesis(word)
    c = constants()
    for m in (c.M_inv, c.M_inv_S):
        for e in lr.mat_entries(m):
            assert e.is_zero() or e.min_deg_a() >= 0
    row = c.v
    for a in word:
        row = lr.vec_mat(row, lr.mat_mul(lr.mat_pow(c.M_inv, a), c.M_inv_S))
    return lr.vec_dot(row, c.w).at_a_zero()


def f_k(k: int) -> LaurentPoly2:
    """``v^t A^k u`` computed from the matrix product."""
    c = constants()
    return lr.vec_dot(c.v, lr.mat_vec(lr.mat_pow(c.A, k), c.u))


def f_k_recursion(k: int) -> LaurentPoly2:
    """``f_1 = 1, f_2 = x, f_(j+2) = x f_(j+1) - f_j``; ``f_0 = 0`` extends it."""
    prev, cur = ZERO, ONE
    for _ in range(k - 1):
        prev, cur = cur, x_ * cur - prev
    return cur if k >= 1 else ZERO


def f_lemma_product(word: Sequence[int]) -> LaurentPoly2:
    """``(1/x) f_a1 f_(a2-1) ... f_(a(n-1)-1) f_an``.

    With a single box there is no ``B`` factor to absorb an ``M^-1``, and the
    product collapses to ``(1/x) f_(a1+1)``.
    """
    word = tuple(word)
    _check_lemma_hypothesis(word)
    n = len(word)
    if n == 1:
        # v^t A^a1 (ASw)|a=0 = (1/x) v^t A^(a1+1) u
        exps = [word[0] + 1]
    else:
        exps = [word[0]] + [a - 1 for a in word[1:-1]] + [word[-1]]
    out = _x_inv
    for k in exps:
        out = out * f_k(k)
    return out


def f_lemma(word: Sequence[int]) -> LaurentPoly2:
    """Compute f both directly and in product form; they must agree."""
    direct = f_lemma_direct(word)
    product = f_lemma_product(word)
    if direct != product:
        raise AssertionError(f"f for {tuple(word)}: direct {direct} != product {product}")
    return direct
