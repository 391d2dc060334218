"""Maximal Thurston-Bennequin numbers of two-bridge links and their fronts.

A diagram T(b1, ..., bm) with every bi >= 2 becomes a Legendrian front once its
four vertical tangencies are replaced by cusps; at each crossing the strand of
more negative slope is then on top, as in the diagram.  The front's
Thurston-Bennequin number is ``writhe - 2`` and equals ``min-deg_a F - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .diagram import build_diagram, crossing_signs, orient
from .kauffman import F_of
from .rational import (
    Frac,
    format_word,
    is_legendrian_form,
    legendrian_form,
    mirror_fraction,
)

__all__ = [
    "ORIENTATIONS",
    "TbResult",
    "TbMismatchError",
    "NotLegendrianFormError",
    "Cusp",
    "FrontCrossing",
    "Front",
    "FrontLayout",
    "max_tb",
    "front_of",
    "tb_from_front",
    "render_front",
]

ORIENTATIONS = ("template-left-to-right", "flipped")


class TbMismatchError(AssertionError):
    """writhe - 2 and min-deg_a F - 1 disagree: a sign convention is broken."""


class NotLegendrianFormError(ValueError):
    pass


@dataclass(frozen=True)
class TbResult:
    fraction: Frac
    word: tuple
    writhe: int
    tb: int
    kauffman_min_deg: int
    tb_mirror: int
    orientation: str | None = None

    def __post_init__(self):
        if self.tb != self.writhe - 2 or self.tb != self.kauffman_min_deg - 1:
            raise TbMismatchError(
                f"{self.fraction}: writhe - 2 = {self.writhe - 2}, "
                f"min-deg_a F - 1 = {self.kauffman_min_deg - 1}, tb = {self.tb}"
            )


def _flip(orientation: str | None) -> bool:
    if orientation is None:
        return False
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    return orientation == "flipped"


def _tb_one(f: Frac, orientation: str | None) -> tuple[tuple, int, int]:
    word = legendrian_form(f)
    flip = _flip(orientation)
    w = sum(crossing_signs(orient(build_diagram(word), flip_second=flip)))
    min_deg = F_of(word, flip_second=flip).min_deg_a()
    if w - 2 != min_deg - 1:
        raise TbMismatchError(f"{f} via {word}: writhe - 2 = {w - 2}, min-deg_a F - 1 = {min_deg - 1}")
    return word, w, min_deg


def max_tb(f: Frac, orientation: str | None = None) -> TbResult:
    """Maximal tb of the two-bridge link ``f`` and of its mirror.

    Links with two components (even ``p``) need an ``orientation``; the value
    reported is for that orientation only.
    """
    if f.p % 2 == 0 and orientation is None:
        raise ValueError(f"{f} is a two-component link; choose an orientation from {ORIENTATIONS}")
    word, w, min_deg = _tb_one(f, orientation)
    _, w_m, _ = _tb_one(mirror_fraction(f), orientation)
    return TbResult(
        fraction=f,
        word=word,
        writhe=w,
        tb=w - 2,
        kauffman_min_deg=min_deg,
        tb_mirror=w_m - 2,
        orientation=orientation if f.p % 2 == 0 else None,
    )


# ---------------------------------------------------------------------------
# fronts


@dataclass(frozen=True)
class Cusp:
    x: float
    z: float
    side: str  # "L" or "R"
    upper: int  # heights of the two strands meeting here
    lower: int


@dataclass(frozen=True)
class FrontCrossing:
    x: float
    z: float
    over_slope: float
    under_slope: float
    sign: int


@dataclass(frozen=True)
class Front:
    word: tuple
    cusps: tuple
    crossings: tuple
    width: float  # x of the rightmost cusp
    segments: tuple = field(default=())  # straight pieces ((x0, z0), (x1, z1))

    def check(self) -> None:
        for c in self.crossings:
            if not c.over_slope < c.under_slope:
                raise ValueError(f"crossing at x={c.x}: over strand must have the more negative slope")


def _require_form(word: Sequence[int]) -> tuple:
    word = tuple(word)
    if not is_legendrian_form(word):
        raise NotLegendrianFormError(
            f"T({format_word(word)}) is not in Legendrian rational form: every entry must be >= 2; "
            "an entry equal to 1 gives a front that does not maximize the Thurston-Bennequin number"
        )
    return word


def front_of(word: Sequence[int], orientation: str | None = None) -> Front:
    """Front of T(word): crossing ``k`` sits at x = k + 1, strands at heights 0..3."""
    word = _require_form(word)
    d = build_diagram(word)
    signs = crossing_signs(orient(d, flip_second=_flip(orientation)))
    crossings = []
    segments = []
    for info, sign in zip(d.info, signs):
        x = info.column + 1.0
        hi, lo = info.upper, info.upper - 1
        crossings.append(FrontCrossing(x, (hi + lo) / 2, over_slope=-1.0, under_slope=1.0, sign=sign))
        segments.append(((x - 0.5, float(hi)), (x + 0.5, float(lo))))
        segments.append(((x - 0.5, float(lo)), (x + 0.5, float(hi))))
    n_cross = len(crossings)
    # horizontal runs: every height is busy only where a crossing uses it
    busy = {h: sorted(c.column + 1.0 for c in d.info if h in (c.upper, c.upper - 1)) for h in range(4)}
    right_x = n_cross + 1.0
    cusps = [Cusp(0.0, 2.5, "L", 3, 2), Cusp(0.0, 0.5, "L", 1, 0)]
    if len(word) % 2 == 1:
        cusps += [Cusp(right_x, 2.5, "R", 3, 2), Cusp(right_x, 0.5, "R", 1, 0)]
        ends = {h: right_x for h in range(4)}
    else:
        cusps += [Cusp(right_x, 1.5, "R", 2, 1), Cusp(right_x + 1.0, 1.5, "R", 3, 0)]
        ends = {0: right_x + 1.0, 1: right_x, 2: right_x, 3: right_x + 1.0}
    for h in range(4):
        stops = [0.0] + [v for x in busy[h] for v in (x - 0.5, x + 0.5)] + [ends[h]]
        for x0, x1 in zip(stops[::2], stops[1::2]):
            if x1 > x0:
                segments.append(((x0, float(h)), (x1, float(h))))
    fr = Front(word, tuple(cusps), tuple(crossings), max(c.x for c in cusps), tuple(segments))
    fr.check()
    return fr


def tb_from_front(fr: Front) -> int:
    """Writhe of the front minus half its number of cusps."""
    if len(fr.cusps) % 2:
        raise ValueError(f"malformed front: {len(fr.cusps)} cusps")
    return sum(c.sign for c in fr.crossings) - len(fr.cusps) // 2


# ---------------------------------------------------------------------------
# rendering


@dataclass(frozen=True)
class FrontLayout:
    """Fixed geometry for SVG output."""

    unit: float = 40.0
    margin: float = 20.0
    gap: float = 0.16  # half-length of the under-strand gap, in units
    cusp_reach: float = 0.5  # horizontal extent of a cusp branch, in units
    stroke: str = "black"
    stroke_width: float = 2.0


def render_front(word: Sequence[int], fmt: str = "ascii", layout: FrontLayout | None = None) -> str:
    fr = front_of(word)
    if fmt == "ascii":
        return _ascii(fr)
    if fmt == "svg":
        return _svg(fr, layout or FrontLayout())
    raise ValueError(f"unknown front format {fmt!r}")


def _ascii(fr: Front) -> str:
    cell = 4
    left = 3
    n = len(fr.crossings)
    width = left + n * cell + 8
    rows = [[" "] * width for _ in range(7)]

    def row_of(h):
        return 2 * (3 - h)

    def put(r, c, ch):
        rows[r][c] = ch

    busy = {}
    for k, c in enumerate(fr.crossings):
        hi = int(c.z + 0.5)
        busy.setdefault(hi, set()).add(k)
        busy.setdefault(hi - 1, set()).add(k)
    end_col = {h: left + n * cell for h in range(4)}
    if len(fr.word) % 2 == 0:
        end_col[3] = end_col[0] = left + n * cell + 2
    for h in range(4):
        r = row_of(h)
        for col in range(left - 1, end_col[h]):
            k, off = divmod(col - left, cell)
            if k < n and k in busy.get(h, ()) and off < 3:
                continue
            put(r, col, "-")
    for k, c in enumerate(fr.crossings):
        x0 = left + k * cell
        r = row_of(int(c.z + 0.5))
        put(r, x0, "\\")
        put(r, x0 + 2, "/")
        put(r + 1, x0 + 1, "\\")  # over strand has the negative slope
        put(r + 2, x0, "/")
        put(r + 2, x0 + 2, "\\")
    for cusp in fr.cusps:
        r_up, r_lo = row_of(cusp.upper), row_of(cusp.lower)
        mid = (r_up + r_lo) // 2
        if cusp.side == "L":
            put(mid, 0, "<")
            for r in range(r_up, mid):
                put(r, 1 + (mid - r) - 1, "/")
            for r in range(mid + 1, r_lo + 1):
                put(r, 1 + (r - mid) - 1, "\\")
        else:
            base = end_col[cusp.upper]
            span = mid - r_up
            put(mid, base + span, ">")
            for r in range(r_up, mid):
                put(r, base + (r - r_up), "\\")
            for r in range(mid + 1, r_lo + 1):
                put(r, base + (r_lo - r), "/")
    return "\n".join("".join(r).rstrip() for r in rows) + "\n"


def _svg(fr: Front, lay: FrontLayout) -> str:
    u, m = lay.unit, lay.margin
    zmax = 3.0

    def pt(x, z):
        return f"{m + u * (x + lay.cusp_reach):.2f},{m + u * (zmax - z):.2f}"

    paths = []
    for (x0, z0), (x1, z1) in fr.segments:
        if z0 != z1 and (z1 - z0) / (x1 - x0) > 0:
            # under strand: leave a gap around the crossing point
            xm, zm = (x0 + x1) / 2, (z0 + z1) / 2
            g = lay.gap
            paths.append(f"M {pt(x0, z0)} L {pt(xm - g, zm - g)}")
            paths.append(f"M {pt(xm + g, zm + g)} L {pt(x1, z1)}")
        else:
            paths.append(f"M {pt(x0, z0)} L {pt(x1, z1)}")
    r = lay.cusp_reach
    for c in fr.cusps:
        s = -1 if c.side == "L" else 1
        for h in (c.upper, c.lower):
            # cubic tangent to the horizontal strand and horizontal at the cusp
            paths.append(
                f"M {pt(c.x, float(h))} C {pt(c.x + s * r * 0.6, float(h))} "
                f"{pt(c.x + s * r * 0.6, c.z)} {pt(c.x + s * r, c.z)}"
            )
    w = 2 * m + u * (fr.width + 2 * r)
    h = 2 * m + u * zmax
    body = "\n".join(f'  <path d="{p}"/>' for p in paths)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0f}" height="{h:.0f}" '
        f'viewBox="0 0 {w:.2f} {h:.2f}">\n'
        f'<g fill="none" stroke="{lay.stroke}" stroke-width="{lay.stroke_width}">\n'
        f"{body}\n</g>\n</svg>\n"
    )
