"""Exhaustive consistency checks over families of twist words."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import laurent as lr
from .diagram import build_diagram, orient, writhe
from .kauffman import F_of, L_matrix, constants, f_lemma
from .rational import is_legendrian_form
from .skein import MAX_CROSSINGS, skein_kauffman_L
from .sweep import LemmaSweep, check_lemma_family, low_min_deg_a


def compositions(total: int, max_parts: int | None = None, min_part: int = 1) -> Iterator[tuple]:
    """Ordered tuples of integers >= ``min_part`` summing to ``total``."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min_part, total + 1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in compositions(total - first, rest_parts, min_part):
            yield (first,) + rest


def words_up_to(max_sum: int, max_len: int | None = None) -> Iterator[tuple]:
    for s in range(1, max_sum + 1):
        yield from compositions(s, max_len)


def lemma_words(max_sum: int, max_len: int = 8) -> Iterator[tuple]:
    """Words with a1, an >= 1, interior entries >= 2, length <= max_len."""
    for w in words_up_to(max_sum, max_len):
        if all(a >= 2 for a in w[1:-1]):
            yield w


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_constants() -> CheckResult:
    res = CheckResult("constants")
    c = constants()  # raises on a transcription mismatch
    for label, m in (("M^-1", c.M_inv), ("M^-1 S", c.M_inv_S)):
        for e in lr.mat_entries(m):
            res.checked += 1
            if not e.is_zero() and e.min_deg_a() < 0:
                res.failures.append((label, str(e)))
    for e in c.w:
        res.checked += 1
        if e.min_deg_a() < 0:
            res.failures.append(("w", str(e)))
    return res


def check_lemma(max_sum: int, max_len: int = 8) -> CheckResult:
    """Lemma over the whole family, through the packed batch evaluator."""
    out = check_lemma_family(max_sum, max_len)
    return CheckResult("lemma", out.checked, out.failures)


def check_lemma_reference(max_sum: int, max_len: int = 8) -> CheckResult:
    """Same check word by word with the plain polynomial code (slow)."""
    res = CheckResult("lemma")
    for w in lemma_words(max_sum, max_len):
        res.checked += 1
        L = L_matrix(w)
        f = f_lemma(w)
        if L.min_deg_a() != -1 or f.is_zero() or f != L.coefficient_of_a(-1):
            res.failures.append(w)
    return res


def check_oracle(max_sum: int) -> CheckResult:
    if max_sum > MAX_CROSSINGS:
        raise ValueError(f"oracle check limited to {MAX_CROSSINGS} crossings")
    res = CheckResult("oracle")
    for w in words_up_to(max_sum):
        res.checked += 1
        if skein_kauffman_L(build_diagram(w)) != L_matrix(w):
            res.failures.append(w)
    return res


def check_theorem(max_sum: int, max_len: int = 8) -> CheckResult:
    """``writhe - 2 = min-deg_a F - 1`` on Legendrian-form words, with
    ``min-deg_a F = writhe + min-deg_a L``."""
    res = CheckResult("theorem")
    sweep = LemmaSweep(max_sum, max_len, interior_min=2, truncate=True)
    for rec in sweep.records():
        if not is_legendrian_form(rec.word):
            continue
        res.checked += 1
        wr = writhe(orient(build_diagram(rec.word)))
        m = low_min_deg_a(sweep, rec)
        if m is None or wr - 2 != wr + m - 1:
            res.failures.append(rec.word)
    return res


def check_theorem_reference(max_sum: int, max_len: int = 8) -> CheckResult:
    res = CheckResult("theorem")
    for w in lemma_words(max_sum, max_len):
        if not is_legendrian_form(w):
            continue
        res.checked += 1
        wr = writhe(orient(build_diagram(w)))
        if wr - 2 != F_of(w).min_deg_a() - 1:
            res.failures.append(w)
    return res
