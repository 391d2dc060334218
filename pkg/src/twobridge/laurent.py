"""Exact two-variable Laurent polynomials in ``a`` and ``x`` and 3x3 matrices over them.

Polynomials are immutable and kept in canonical form: a mapping from exponent
pairs ``(dega, degx)`` to nonzero Python integers.  Exponents may be negative in
either variable.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

__all__ = [
    "LaurentPoly2",
    "Mat3",
    "Vec3",
    "ZERO",
    "ONE",
    "A",
    "X",
    "NotInvertibleError",
    "mat_mul",
    "mat_vec",
    "mat_pow",
    "mat_det",
    "mat_inverse",
    "identity",
    "vec_dot",
    "make_mat",
    "make_vec",
]


class LaurentPoly2:
    """Laurent polynomial in ``a`` and ``x`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[(int(key[0]), int(key[1]))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly2":
        # trusted constructor: caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, c: int, dega: int = 0, degx: int = 0) -> "LaurentPoly2":
        return cls._raw({(dega, degx): c} if c else {})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _coerce(other) -> "LaurentPoly2":
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, int):
            return LaurentPoly2.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly2._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError(f"cannot invert non-unit {self}")
            return self.unit_inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, dega: int = 0, degx: int = 0) -> "LaurentPoly2":
        """Multiply by the monomial ``a**dega * x**degx``."""
        return LaurentPoly2._raw({(i + dega, j + degx): c for (i, j), c in self._terms.items()})

    def scale(self, c: int) -> "LaurentPoly2":
        if not c:
            return ZERO
        return LaurentPoly2._raw({k: v * c for k, v in self._terms.items()})

    def is_unit(self) -> bool:
        """True for ``±a^i x^j``, the units of the Laurent ring over the integers."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def unit_inverse(self) -> "LaurentPoly2":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit")
        (i, j), c = next(iter(self._terms.items()))
        return LaurentPoly2._raw({(-i, -j): c})

    def min_deg_a(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return min(i for i, _ in self._terms)

    def max_deg_a(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(i for i, _ in self._terms)

    def min_deg_x(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return min(j for _, j in self._terms)

    def max_deg_x(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(j for _, j in self._terms)

    def coefficient_of_a(self, dega: int) -> "LaurentPoly2":
        """The coefficient of ``a**dega``, as a polynomial in ``x`` alone."""
        return LaurentPoly2._raw({(0, j): c for (i, j), c in self._terms.items() if i == dega})

    def at_a_zero(self) -> "LaurentPoly2":
        """Substitute ``a = 0``; only defined when no negative power of ``a`` occurs."""
        if self._terms and self.min_deg_a() < 0:
            raise ValueError(f"cannot set a = 0 in {self}: negative powers of a present")
        return self.coefficient_of_a(0)

    def substitute_a_inverse(self) -> "LaurentPoly2":
        return LaurentPoly2._raw({(-i, j): c for (i, j), c in self._terms.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly2({str(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        return parse_poly(text)


def _format_term(c: int, i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("a" if i == 1 else f"a^{i}")
    if j:
        parts.append("x" if j == 1 else f"x^{j}")
    mag = abs(c)
    if not parts:
        return str(mag)
    if mag != 1:
        parts.insert(0, str(mag))
    return "*".join(parts)


def format_poly(p: LaurentPoly2) -> str:
    """Render terms in (dega, degx) order, e.g. ``-a^-1*x + 2*x^3``."""
    if p.is_zero():
        return "0"
    out = []
    for n, ((i, j), c) in enumerate(p.items()):
        body = _format_term(c, i, j)
        if n == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+)?
        (?:\*?a(?:\^(?P<ea>-?\d+))?(?P<hasa>))?
        (?:\*?x(?:\^(?P<ex>-?\d+))?(?P<hasx>))?$""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly2:
    """Inverse of :func:`format_poly`."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    # negative exponents would otherwise split terms
    tokens = re.findall(r"[+-]?[^+-]+", s.replace("^-", "^~"))
    terms: dict = {}
    for tok in tokens:
        tok = tok.replace("~", "-")
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        m = _TERM_RE.match(tok)
        if not m or not tok:
            raise ValueError(f"malformed polynomial term {tok!r} in {text!r}")
        coef = int(m.group("coef")) if m.group("coef") else 1
        ea = 0
        if m.group("hasa") is not None:
            ea = int(m.group("ea")) if m.group("ea") else 1
        ex = 0
        if m.group("hasx") is not None:
            ex = int(m.group("ex")) if m.group("ex") else 1
        key = (ea, ex)
        terms[key] = terms.get(key, 0) + sign * coef
    return LaurentPoly2(terms)


ZERO = LaurentPoly2._raw({})
ONE = LaurentPoly2._raw({(0, 0): 1})
A = LaurentPoly2._raw({(1, 0): 1})
X = LaurentPoly2._raw({(0, 1): 1})


Mat3 = tuple  # tuple[tuple[LaurentPoly2, ...], ...], 3x3
Vec3 = tuple  # tuple[LaurentPoly2, ...], length 3


class NotInvertibleError(ValueError):
    """Raised when a matrix determinant is not a unit of the Laurent ring."""

    def __init__(self, det: LaurentPoly2):
        super().__init__(f"matrix is not invertible over the Laurent ring: det = {det}")
        self.det = det


def _p(e) -> LaurentPoly2:
    return e if isinstance(e, LaurentPoly2) else LaurentPoly2.constant(int(e))


def make_mat(rows: Iterable[Iterable]) -> Mat3:
    m = tuple(tuple(_p(e) for e in row) for row in rows)
    if len(m) != 3 or any(len(r) != 3 for r in m):
        raise ValueError("expected a 3x3 matrix")
    return m


def make_vec(entries: Iterable) -> Vec3:
    v = tuple(_p(e) for e in entries)
    if len(v) != 3:
        raise ValueError("expected a length-3 vector")
    return v


def identity() -> Mat3:
    return tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3))


def mat_mul(m: Mat3, n: Mat3) -> Mat3:
    return tuple(
        tuple(m[i][0] * n[0][j] + m[i][1] * n[1][j] + m[i][2] * n[2][j] for j in range(3))
        for i in range(3)
    )


def mat_vec(m: Mat3, v: Vec3) -> Vec3:
    return tuple(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3))


def vec_mat(v: Vec3, m: Mat3) -> Vec3:
    """Row vector times matrix."""
    return tuple(v[0] * m[0][j] + v[1] * m[1][j] + v[2] * m[2][j] for j in range(3))


def vec_dot(v: Vec3, w: Vec3) -> LaurentPoly2:
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2]


def mat_det(m: Mat3) -> LaurentPoly2:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _adjugate(m: Mat3) -> Mat3:
    def cof(i, j):
        r = [k for k in range(3) if k != i]
        c = [k for k in range(3) if k != j]
        minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
        return minor if (i + j) % 2 == 0 else -minor

    # adjugate is the transposed cofactor matrix
    return tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))


def mat_inverse(m: Mat3) -> Mat3:
    det = mat_det(m)
    if not det.is_unit():
        raise NotInvertibleError(det)
    inv_det = det.unit_inverse()
    return tuple(tuple(e * inv_det for e in row) for row in _adjugate(m))


def mat_pow(m: Mat3, k: int) -> Mat3:
    """``m**k`` by repeated squaring; negative ``k`` goes through :func:`mat_inverse`."""
    if k < 0:
        m = mat_inverse(m)
        k = -k
    result = identity()
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def mat_map(m: Mat3, fn) -> Mat3:
    return tuple(tuple(fn(e) for e in row) for row in m)


def mat_entries(m: Sequence[Sequence[LaurentPoly2]]):
    for row in m:
        yield from row
