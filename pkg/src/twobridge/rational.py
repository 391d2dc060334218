"""Fractions naming two-bridge links, the alternating continued fraction, and
conversion to Legendrian rational form.

All arithmetic is on integers; nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as _Q
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "Frac",
    "TwistWord",
    "TrivialKnotError",
    "parse_fraction",
    "parse_word",
    "format_word",
    "eval_cf",
    "legendrian_form",
    "mirror_fraction",
    "isotopic_sufficient",
    "is_legendrian_form",
]

TwistWord = tuple  # tuple[int, ...], every entry >= 1


class TrivialKnotError(ValueError):
    """The fraction describes the unknot, which is not two-bridge."""


@dataclass(frozen=True, order=True)
class Frac:
    """Reduced ``p/q`` with the sign carried by ``q``.

    ``p >= 0`` always; ``1/0`` stands for infinity and ``0/1`` for zero.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a fraction")
        if p < 0:
            p, q = -p, -q
        g = gcd(p, q)
        if p == 0:
            q = 1
        elif q == 0:
            p = 1
        else:
            p, q = p // g, q // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def value(self) -> _Q:
        """The rational number ``p/q`` (finite fractions only)."""
        if self.q == 0:
            raise ZeroDivisionError("infinite fraction has no rational value")
        return _Q(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def parse_fraction(text: str) -> Frac:
    """Parse ``p/q`` (``q`` may be negative) or a bare integer ``p``."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Frac(int(num), int(den))
        return Frac(int(s), 1)
    except ValueError as exc:
        raise ValueError(f"malformed fraction {text!r}: expected p/q") from exc


def parse_word(text: str) -> TwistWord:
    """Parse a comma-separated twist word such as ``2,2,3``."""
    try:
        word = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ValueError(f"malformed twist word {text!r}") from exc
    check_word(word)
    return word


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(a) for a in word)


def check_word(word: Sequence[int]) -> None:
    if len(word) == 0:
        raise ValueError("twist word must be nonempty")
    if any(int(a) < 1 for a in word):
        raise ValueError(f"twist word entries must be >= 1, got {tuple(word)}")


def is_legendrian_form(word: Sequence[int]) -> bool:
    return len(word) > 0 and all(a >= 2 for a in word)


def eval_cf(word: Iterable[int]) -> Frac:
    """Evaluate ``a1 + 1/(-a2 + 1/(a3 + ...))`` with signs alternating from ``+a1``.

    Runs right to left on projective pairs, so a vanishing tail yields the
    infinite fraction ``1/0`` instead of raising.
    """
    word = tuple(word)
    check_word(word)
    n = len(word)
    signed = [a if k % 2 == 0 else -a for k, a in enumerate(word)]
    num, den = signed[n - 1], 1
    for c in reversed(signed[: n - 1]):
        num, den = c * num + den, num
    return Frac(num, den)


def _ceil_div(n: int, d: int) -> int:
    return -((-n) // d)


def legendrian_form(f: Frac) -> TwistWord:
    """Twist word with every entry >= 2 whose continued fraction is ``p/(q mod p)``.

    Raises :class:`TrivialKnotError` when ``q/p`` is an integer.
    """
    if f.is_infinite or f.p == 0:
        raise ValueError(f"{f} does not describe a two-bridge link")
    p = f.p
    q = f.q % p
    if q == 0:
        raise TrivialKnotError(f"{f}: q/p is an integer, so this is the trivial knot, not two-bridge")
    # x_i = num/den; x_{i+1} = 1/(ceil(x_i) - x_i) = den/(b*den - num)
    num, den = p, q
    word = []
    while True:
        b = _ceil_div(num, den)
        word.append(b)
        rem = b * den - num
        if rem == 0:
            break
        assert rem < den, "denominators must strictly decrease"
        num, den = den, rem
    assert all(b >= 2 for b in word)
    return tuple(word)


def mirror_fraction(f: Frac) -> Frac:
    """Fraction of the mirror image: ``p/(p - (q mod p))``."""
    if f.is_infinite or f.p < 2:
        raise ValueError(f"{f} does not describe a two-bridge link")
    return Frac(f.p, f.p - f.q % f.p)


def isotopic_sufficient(f: Frac, g: Frac) -> bool:
    """True when ``q/p - q'/p'`` is an integer.

    That forces the two rational-form diagrams to be isotopic; ``False`` settles
    nothing.
    """
    for h in (f, g):
        if h.is_infinite or h.p == 0:
            raise ValueError(f"{h} must be finite and nonzero")
    return (_Q(f.q, f.p) - _Q(g.q, g.p)).denominator == 1
