"""Batch evaluation of the matrix formula over whole families of twist words.

Polynomials with nonnegative exponents are packed into a single integer by
the substitution ``x -> 2**bits``, ``a -> 2**(bits*width)``.  This is a ring
homomorphism, so sums and products of packed values are exact; unpacking is
unambiguous as long as every x-degree is below ``width`` and every
coefficient is smaller than ``2**(bits-1)`` in absolute value.  Both are
guaranteed from a-priori bounds (x-degree counts factors, coefficients are
bounded by products of l1 norms) before anything is unpacked.

Words are visited depth first so that a shared prefix is multiplied once.
When only the low a-degrees matter, values are further reduced modulo
``a**K`` (a power of two after packing); reduction is again a ring
homomorphism, so the kept blocks are exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from . import laurent as lr
from .kauffman import constants, f_k
from .laurent import LaurentPoly2

try:  # GMP multiplication is several times faster on these sizes
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover
    _big = int


class PackingOverflow(ArithmeticError):
    pass


@dataclass(frozen=True)
class Packing:
    bits: int
    width: int

    @property
    def block_bits(self) -> int:
        return self.bits * self.width

    def pack(self, p: LaurentPoly2) -> int:
        out = 0
        limit = 1 << (self.bits - 1)
        for (i, j), c in p.terms.items():
            if i < 0 or j < 0 or j >= self.width or abs(c) >= limit:
                raise PackingOverflow(f"term {c}*a^{i}*x^{j} does not fit {self}")
            out += c << (self.bits * (i * self.width + j))
        return out

    def _digits(self, n: int) -> Iterator[tuple[int, int]]:
        base = 1 << self.bits
        half = base >> 1
        mask = base - 1
        k = 0
        while n:
            d = n & mask
            if d >= half:
                d -= base
            n = (n - d) >> self.bits
            if d:
                yield k, d
            k += 1

    def unpack(self, n: int) -> LaurentPoly2:
        return LaurentPoly2({divmod(k, self.width): d for k, d in self._digits(n)})

    def unpack_x(self, n: int) -> LaurentPoly2:
        """Unpack a value holding a polynomial in x only."""
        return LaurentPoly2({(0, k): d for k, d in self._digits(n)})

    def split_low(self, n: int, k: int) -> tuple[int, int]:
        """``(low, high)`` with ``n = low + high * a**k`` and ``low`` of a-degree < k."""
        size = self.block_bits * k
        low = n & ((1 << size) - 1)
        if low >> (size - 1) if size else 0:
            low -= 1 << size
        return low, (n - low) >> size

    def block(self, n: int, k: int) -> int:
        """Packed x-polynomial multiplying ``a**k`` in ``n``."""
        _, high = self.split_low(n, k)
        low, _ = self.split_low(high, 1)
        return low


def _l1(p: LaurentPoly2) -> int:
    return sum(abs(c) for c in p.terms.values())


@dataclass
class WordRecord:
    """Packed data of ``a**(n+1) * x * L`` for one word, with lemma side values."""

    word: tuple
    packed_L: int  # a^(n+1) x L
    packed_f_direct: int  # x f, direct evaluation at a = 0
    packed_f_product: int  # x f, product of f_k


class LemmaSweep:
    """Depth-first evaluation of L over words with sum <= max_sum, length <= max_len.

    ``interior_min`` is the smallest entry allowed away from both ends
    (2 for the lemma family, 1 for every word).
    """

    def __init__(self, max_sum: int, max_len: int, interior_min: int = 2, truncate: bool = False):
        if max_sum < 1 or max_len < 1:
            raise ValueError("max_sum and max_len must be positive")
        self.max_sum = max_sum
        self.max_len = max_len
        self.interior_min = interior_min
        # x-degree of a^(n+1) x L is at most sum(ai + 1) + 1
        width = max_sum + max_len + 2
        c = constants()
        aS = lr.mat_map(c.S, lambda e: e.shift(dega=1))
        xw = tuple(e.shift(degx=1) for e in c.w)
        self._P = {}
        self._Pn = {}
        self._cw = {}
        self._cwn = {}
        self._A0 = {}
        for k in range(1, max_sum + 1):
            P = lr.mat_mul(lr.mat_pow(c.M_inv, k + 1), aS)
            self._P[k] = P
            self._cw[k] = lr.mat_vec(P, xw)
        self._Pn = {k: tuple(tuple(_l1(e) for e in row) for row in P) for k, P in self._P.items()}
        self._cwn = {k: tuple(_l1(e) for e in v) for k, v in self._cw.items()}
        # coefficient bound from the worst case, checked again per word
        row_max = max(sum(r) for P in self._Pn.values() for r in P) if self._Pn else 1
        bound = 3 ** (max_sum + max_len + 2) * max(1, row_max)
        bits = max(8, math.ceil(math.log2(bound)) + 2)
        self.packing = Packing(bits, width)
        pk = self.packing
        self._Pp = {k: tuple(tuple(pk.pack(e) for e in row) for row in P) for k, P in self._P.items()}
        self._cwp = {k: tuple(pk.pack(e) for e in v) for k, v in self._cw.items()}
        # a = 0 parts for the direct lemma evaluation: A^k (M^-1 S)|0 and x w|0
        M_inv_S0 = lr.mat_map(c.M_inv_S, LaurentPoly2.at_a_zero)
        xw0 = tuple(e.at_a_zero() for e in xw)
        xpk = self.packing
        for k in range(1, max_sum + 1):
            Q = lr.mat_mul(lr.mat_pow(c.A, k), M_inv_S0)
            self._A0[k] = tuple(tuple(xpk.pack(e) for e in row) for row in Q)
        self._xw0 = tuple(xpk.pack(e) for e in xw0)
        self._A0_xw0 = {k: tuple(self._dot(r, self._xw0) for r in Q) for k, Q in self._A0.items()}
        self._fk = {k: xpk.pack(f_k(k)) for k in range(0, max_sum + 2)}
        self._limit = 1 << (bits - 1)
        # keep blocks a^0 .. a^max_len, enough to read min-deg_a and the a^-1 coefficient
        self.truncate = truncate
        self._mask = (1 << (self.packing.block_bits * (max_len + 1))) - 1 if truncate else -1
        if truncate:
            self._Pp = {k: tuple(tuple(e & self._mask for e in row) for row in P) for k, P in self._Pp.items()}
        # a word of length n needs blocks a^0 .. a^n of its final product only
        self._cwp_n = {
            (k, n): tuple(_big(e & ((1 << (self.packing.block_bits * (n + 1))) - 1)) for e in v)
            for k, v in self._cwp.items() for n in range(0, max_len + 1)
        }
        self._Pp = {k: tuple(tuple(_big(e) for e in row) for row in P) for k, P in self._Pp.items()}

    @staticmethod
    def _vm(row, M):
        r0, r1, r2 = row
        return (
            r0 * M[0][0] + r1 * M[1][0] + r2 * M[2][0],
            r0 * M[0][1] + r1 * M[1][1] + r2 * M[2][1],
            r0 * M[0][2] + r1 * M[1][2] + r2 * M[2][2],
        )

    @staticmethod
    def _dot(u, v):
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]

    def _product_form(self, word: tuple) -> int:
        n = len(word)
        if n == 1:
            exps = (word[0] + 1,)
        else:
            exps = (word[0],) + tuple(a - 1 for a in word[1:-1]) + (word[-1],)
        out = 1
        for k in exps:
            out *= self._fk[k]
        return out

    def _strip(self, row, s):
        """Divide the row by ``a`` while its a^0 blocks all vanish.

        Row vectors at depth d are in practice divisible by a^d; dividing it
        out keeps the operands short.  Nothing is assumed: the blocks are
        checked before each exact division.
        """
        bb = self.packing.block_bits
        low_mask = (1 << bb) - 1
        cap = self.max_len + 1 if self.truncate else None  # no known blocks beyond the truncation
        while any(row) and not any(e & low_mask for e in row) and (cap is None or s < cap):
            row = tuple(e >> bb for e in row)
            s += 1
        return row, s

    def records(self) -> Iterator[WordRecord]:
        """Every word of the family with its packed values, in depth-first order."""
        bb = self.packing.block_bits
        start = (_big(1), _big(0), _big(0))
        # (prefix, row / a^s, l1 bound of row, a = 0 row, s)
        stack = [((), start, (1, 0, 0), (1, 0, 0), 0)]
        while stack:
            prefix, row, rown, row0, s = stack.pop()
            used = sum(prefix)
            depth = len(prefix)
            lo = 1 if depth == 0 else self.interior_min
            if self.truncate:
                need = depth + 1 - s  # blocks a^0 .. a^(n - s) of the stripped row for n = depth + 1
                wm = (1 << (bb * (need + 1))) - 1 if need >= 0 else 0
                row_n = tuple(e & wm for e in row)
            for k in range(self.max_sum - used, 0, -1):
                word = prefix + (k,)
                bound = sum(r * c for r, c in zip(rown, self._cwn[k]))
                if bound >= self._limit:
                    raise PackingOverflow(f"coefficients of {word} may exceed the packing")
                if self.truncate:
                    # with need < 0 every block the caller reads is zero
                    value = self._dot(row_n, self._cwp_n[k, need]) & wm if need >= 0 else 0
                else:
                    value = self._dot(row, self._cwp[k])
                yield WordRecord(
                    word,
                    int(value) << (bb * s),
                    self._dot(row0, self._A0_xw0[k]),
                    self._product_form(word),
                )
                if depth + 1 < self.max_len and k >= lo and used + k < self.max_sum:
                    nrown = tuple(
                        sum(rown[i] * self._Pn[k][i][j] for i in range(3)) for j in range(3)
                    )
                    nrow, ns = self._strip(self._vm(row, self._Pp[k]), s)
                    if self.truncate:
                        keep = (1 << (bb * max(0, self.max_len + 1 - ns))) - 1
                        nrow = tuple(e & keep for e in nrow)
                    stack.append((word, nrow, nrown, self._vm(row0, self._A0[k]), ns))


@dataclass
class LemmaOutcome:
    checked: int
    failures: list


def check_lemma_family(max_sum: int, max_len: int = 8) -> LemmaOutcome:
    """min-deg_a L = -1, f nonzero, and f equal to the a^-1 coefficient of L,
    with f computed both directly at a = 0 and in product form."""
    sweep = LemmaSweep(max_sum, max_len, interior_min=2, truncate=True)
    pk = sweep.packing
    failures = []
    checked = 0
    for rec in sweep.records():
        if any(a < 2 for a in rec.word[1:-1]):
            continue
        checked += 1
        n = len(rec.word)
        low, _ = pk.split_low(rec.packed_L, n)
        coeff = pk.block(rec.packed_L, n)  # x times the a^-1 coefficient of L
        if low != 0 or coeff == 0 or coeff != rec.packed_f_direct or coeff != rec.packed_f_product:
            failures.append(rec.word)
    return LemmaOutcome(checked, failures)


def L_from_record(sweep: LemmaSweep, rec: WordRecord) -> LaurentPoly2:
    """Unpack ``L`` itself from a record of an untruncated sweep."""
    if sweep.truncate:
        raise ValueError("a truncated sweep keeps only the low a-degrees of L")
    n = len(rec.word)
    return sweep.packing.unpack(rec.packed_L).shift(dega=-(n + 1), degx=-1)


def low_min_deg_a(sweep: LemmaSweep, rec: WordRecord) -> int | None:
    """Exact ``min-deg_a L`` when it is at most -1, else None."""
    n = len(rec.word)
    for b in range(n + 1):
        if sweep.packing.block(rec.packed_L, b):
            return b - n - 1
    return None
