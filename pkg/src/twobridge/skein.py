"""Brute-force L-polynomial of a small unoriented diagram by skein recursion.

This evaluator shares nothing with the matrix formula and serves as its
independent check.  Relations, in the variables used throughout the package::

    L(positive kink) = a^-1 L,   L(negative kink) = a L,
    L(X) + L(X switched) = x (L(smoothing 1) + L(smoothing 2)),
    L(unknot) = 1,   L(D + split unknot) = delta L(D),  delta = (a + 1/a)/x - 1.

Each step switches the first crossing met from below while walking the
diagram, until the diagram is descending; a descending diagram is a split
unlink whose value is ``delta^(c-1) a^(-writhe)``.
"""
from __future__ import annotations

import random
from typing import Sequence

from .diagram import PlanarDiagram
from .laurent import A, LaurentPoly2, ONE, X

__all__ = ["skein_kauffman_L", "skein_L_pd", "CrossingLimitError", "MAX_CROSSINGS"]

MAX_CROSSINGS = 14

_A_INV = A.unit_inverse()
_DELTA = (A + _A_INV) * X.unit_inverse() - ONE


class CrossingLimitError(ValueError):
    pass


def _delta_pow(k: int) -> LaurentPoly2:
    out = ONE
    for _ in range(k):
        out = out * _DELTA
    return out


def _merge(crossings: tuple, idx: int, pairs) -> tuple[tuple, int]:
    """Delete crossing ``idx`` joining its slots as ``pairs``.

    Returns the new crossing list and the number of closed loops created.
    """
    c = crossings[idx]
    parent = {e: e for e in c}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for s, t in pairs:
        ra, rb = find(c[s]), find(c[t])
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    rest = crossings[:idx] + crossings[idx + 1:]
    outside = {}
    for cr in rest:
        for e in cr:
            if e in parent:
                outside[e] = outside.get(e, 0) + 1
    classes: dict = {}
    for e in parent:
        classes.setdefault(find(e), []).append(e)
    loops = sum(1 for members in classes.values() if not any(m in outside for m in members))
    if not any(e in parent for cr in rest for e in cr):
        return rest, loops
    new = tuple(tuple(find(e) if e in parent else e for e in cr) for cr in rest)
    return new, loops


_STRAIGHT = ((0, 2), (1, 3))
_SMOOTH_1 = ((0, 1), (2, 3))
_SMOOTH_2 = ((0, 3), (1, 2))


def _kink(c: tuple) -> int:
    """+1 positive kink, -1 negative kink, 0 when adjacent slots share no edge."""
    if c[0] == c[1] or c[2] == c[3]:
        return 1
    if c[1] == c[2] or c[3] == c[0]:
        return -1
    return 0


def _canonical(crossings: tuple) -> tuple:
    rotated = [min(c, (c[2], c[3], c[0], c[1])) for c in crossings]
    rotated.sort()
    mapping: dict = {}
    for c in rotated:
        for e in c:
            if e not in mapping:
                mapping[e] = len(mapping)
    return tuple(sorted(
        min(t, (t[2], t[3], t[0], t[1]))
        for t in (tuple(mapping[e] for e in c) for c in rotated)
    ))


class _Evaluator:
    def __init__(self, rng: random.Random | None):
        self.memo: dict = {}
        self.rng = rng

    def value(self, crossings: tuple) -> LaurentPoly2:
        """L of the diagram, not counting split crossingless circles."""
        factor = ONE
        loops = 0
        # strip kinks eagerly
        changed = True
        while changed and crossings:
            changed = False
            for i, c in enumerate(crossings):
                k = _kink(c)
                if k:
                    crossings, made = _merge(crossings, i, _STRAIGHT)
                    loops += made
                    factor = factor * (_A_INV if k == 1 else A)
                    changed = True
                    break
        if not crossings:
            # every circle beyond the first is a split unknot
            return factor * _delta_pow(max(loops - 1, 0))
        factor = factor * _delta_pow(loops)

        key = _canonical(crossings)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._split(key)
            self.memo[key] = hit
        return factor * hit

    def _split(self, crossings: tuple) -> LaurentPoly2:
        # switching never changes the walk, so one walk serves the whole chain
        # D_0 -> D_1 -> ... -> descending, with
        # L(D_k) = -L(D_(k+1)) + x (L(smoothing 1) + L(smoothing 2))
        bad, comps, signs = _walk(crossings, self.rng)
        total = LaurentPoly2()
        sign = 1
        current = list(crossings)
        for ci in bad:
            for pairs in (_SMOOTH_1, _SMOOTH_2):
                smoothed, loops = _merge(tuple(current), ci, pairs)
                if smoothed:
                    term = _delta_pow(loops) * self.value(smoothed)
                else:
                    term = _delta_pow(max(loops - 1, 0))
                total = total + (X * term).scale(sign)
            c = current[ci]
            current[ci] = (c[1], c[2], c[3], c[0])
            signs[ci] = -signs[ci]
            sign = -sign
        w = sum(signs)
        return total + (_delta_pow(comps - 1) * (A ** (-w))).scale(sign)


def _walk(crossings: tuple, rng: random.Random | None):
    """Walk every component once.

    Returns the crossings first met on their under strand (in walk order), the
    number of components, and the crossing signs for the walk's orientation.
    """
    occ: dict = {}
    for ci, c in enumerate(crossings):
        for s, e in enumerate(c):
            occ.setdefault(e, []).append((ci, s))
    edges = sorted(occ)
    if rng is not None:
        rng.shuffle(edges)
    used: set = set()
    under_in = [0] * len(crossings)
    over_in = [0] * len(crossings)
    visited: set = set()
    bad = []
    comps = 0
    for e0 in edges:
        if e0 in used:
            continue
        comps += 1
        ci, s = occ[e0][rng.randrange(2) if rng is not None else 1]
        while crossings[ci][s] not in used:
            used.add(crossings[ci][s])
            if s % 2 == 0:
                under_in[ci] = s
            else:
                over_in[ci] = s
            if ci not in visited:
                visited.add(ci)
                if s % 2 == 0:
                    bad.append(ci)
            out = (s + 2) % 4
            a, b = occ[crossings[ci][out]]
            ci, s = b if a == (ci, out) else a
    signs = [1 if (o - u) % 4 == 3 else -1 for u, o in zip(under_in, over_in)]
    return bad, comps, signs


def skein_L_pd(crossings: Sequence[Sequence[int]], *, seed: int | None = None,
               max_crossings: int = MAX_CROSSINGS) -> LaurentPoly2:
    """L-polynomial of a diagram given as counterclockwise 4-tuples (slots 0/2 under).

    ``seed`` randomizes the walk order, which changes which crossing is split
    first but never the result.
    """
    crossings = tuple(tuple(int(e) for e in c) for c in crossings)
    if len(crossings) > max_crossings:
        raise CrossingLimitError(
            f"skein oracle limited to {max_crossings} crossings, diagram has {len(crossings)}"
        )
    if not crossings:
        return ONE
    rng = random.Random(seed) if seed is not None else None
    return _Evaluator(rng).value(crossings)


def skein_kauffman_L(d: PlanarDiagram, *, seed: int | None = None,
                     max_crossings: int = MAX_CROSSINGS) -> LaurentPoly2:
    return skein_L_pd(d.crossings, seed=seed, max_crossings=max_crossings)
