"""Crossing-level model of the rational-form diagram T(a1, ..., an).

Layout: four horizontal strands at heights 3 (top) down to 0.  Box ``k``
(1-based) twists heights 2/1 when ``k`` is odd and heights 1/0 when ``k`` is
even.  Both ends are capped: on the left, 3-2 and 1-0; on the right, 3-2 and
1-0 when ``n`` is odd, 2-1 and 3-0 (nested) when ``n`` is even.

Crossings are 4-tuples of edge labels listed counterclockwise with slots 0 and
2 on the under strand.  In every box the strand running down to the right
is over, so a front drawn from the template puts the more negative slope on
top at each crossing, as a front must.  Whether a box's crossings are
positive or negative then depends on the orientation only; the writhe
reproduces the tabulated Thurston-Bennequin numbers through tb = w - 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .rational import TwistWord, check_word

__all__ = [
    "PlanarDiagram",
    "OrientedDiagram",
    "CrossingInfo",
    "build_diagram",
    "orient",
    "writhe",
    "crossing_signs",
    "mirror_diagram",
    "pd_code",
    "format_pd",
    "trace_components",
]

# arms of a crossing in counterclockwise order from the south-west
_DESCENDING_OVER = ("SW", "SE", "NE", "NW")  # under SW-NE, over SE-NW
_ASCENDING_OVER = ("NW", "SW", "SE", "NE")  # under NW-SE, over SW-NE


@dataclass(frozen=True)
class CrossingInfo:
    """Where a crossing sits in the template."""

    box: int  # 1-based box index
    column: int  # 0-based position along the template, left to right
    upper: int  # height of the upper strand of the twisted pair
    twist: int  # +1 odd box, -1 even box; a label, crossings are all descending-over


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple  # tuple of 4-tuples of edge labels, ccw, slots 0/2 under
    info: tuple = ()  # CrossingInfo per crossing, empty for hand-made diagrams
    word: tuple = ()
    # incoming (crossing, slot) where the top strand's component enters after
    # running left to right along height 3, and the same for height 1 leaving
    # the lower left cap
    start_top: tuple | None = None
    start_lower: tuple | None = None

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def edges(self) -> list[int]:
        return sorted({e for c in self.crossings for e in c})

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        occ: dict[int, list[tuple[int, int]]] = {}
        for ci, c in enumerate(self.crossings):
            for s, e in enumerate(c):
                occ.setdefault(e, []).append((ci, s))
        return occ

    def validate(self) -> None:
        for e, places in self.occurrences().items():
            if len(places) != 2:
                raise ValueError(f"edge {e} appears {len(places)} times, expected 2")


@dataclass(frozen=True)
class OrientedDiagram:
    diagram: PlanarDiagram
    # incoming slot of each crossing on the under and over strands
    under_in: tuple
    over_in: tuple
    # component index per edge label, and the slot each edge enters
    edge_component: dict = field(hash=False, compare=False)
    edge_head: dict = field(hash=False, compare=False)
    # edge labels of each component in traversal order
    components: tuple = ()

    @property
    def n_components(self) -> int:
        return len(self.components)

    def degrees(self) -> list[tuple[int, int]]:
        """(in-degree, out-degree) at every crossing."""
        n = self.diagram.n_crossings
        ins, outs = [0] * n, [0] * n
        occ = self.diagram.occurrences()
        for e, head in self.edge_head.items():
            ins[head[0]] += 1
            a, b = occ[e]
            tail = b if a == head else a
            outs[tail[0]] += 1
        return list(zip(ins, outs))


def build_diagram(word: Sequence[int]) -> PlanarDiagram:
    """Planar diagram of T(a1, ..., an) with ``sum(word)`` crossings."""
    word = tuple(int(a) for a in word)
    check_word(word)
    n = len(word)

    # connection graph: ports are (crossing, arm), caps are named nodes
    links: dict = {}

    def connect(u, v):
        links.setdefault(u, []).append(v)
        links.setdefault(v, []).append(u)

    open_end = {3: "Lcap32", 2: "Lcap32", 1: "Lcap10", 0: "Lcap10"}
    first_port: dict[int, tuple] = {}
    info = []
    arms_of = []
    column = 0
    for k, a in enumerate(word, start=1):
        hi, lo = (2, 1) if k % 2 == 1 else (1, 0)
        twist = 1 if k % 2 == 1 else -1
        for _ in range(a):
            ci = len(info)
            info.append(CrossingInfo(box=k, column=column, upper=hi, twist=twist))
            arms_of.append(_DESCENDING_OVER)
            for level, arm in ((hi, "NW"), (lo, "SW")):
                first_port.setdefault(level, (ci, arm))
                connect(open_end[level], (ci, arm))
            open_end[hi] = (ci, "NE")
            open_end[lo] = (ci, "SE")
            column += 1

    right = ((3, 2), (1, 0)) if n % 2 == 1 else ((2, 1), (3, 0))
    partner = {}
    for u, v in right:
        cap = f"Rcap{u}{v}"
        connect(open_end[u], cap)
        connect(open_end[v], cap)
        partner[u], partner[v] = v, u

    # collapse cap chains into edges between ports
    ports = [(ci, arm) for ci in range(len(info)) for arm in arms_of[ci]]
    edge_of: dict = {}
    edge_ends = []
    for port in ports:
        if port in edge_of:
            continue
        prev, cur = port, links[port][0]
        while isinstance(cur, str):
            nxt = [y for y in links[cur] if y != prev]
            prev, cur = cur, (nxt[0] if nxt else prev)
        label = len(edge_ends)
        edge_of[port] = label
        edge_of[cur] = label
        edge_ends.append((port, cur))

    raw = tuple(tuple(edge_of[(ci, arm)] for arm in arms_of[ci]) for ci in range(len(info)))
    arm_slot = [{arm: s for s, arm in enumerate(arms_of[ci])} for ci in range(len(info))]

    top_port = open_end[partner[3]]
    start_top = (top_port[0], arm_slot[top_port[0]][top_port[1]])
    low = first_port[1]
    start_lower = (low[0], arm_slot[low[0]][low[1]])

    d = PlanarDiagram(raw, tuple(info), word, start_top, start_lower)
    return _relabel_along_orientation(d)


def _relabel_along_orientation(d: PlanarDiagram) -> PlanarDiagram:
    """Renumber edges 1..2N consecutively along the default orientation."""
    od = orient(d)
    order = [e for comp in od.components for e in comp]
    mapping = {e: i + 1 for i, e in enumerate(order)}
    crossings = tuple(tuple(mapping[e] for e in c) for c in d.crossings)
    return PlanarDiagram(crossings, d.info, d.word, d.start_top, d.start_lower)


def trace_components(crossings: Sequence[Sequence[int]], starts: Sequence[tuple[int, int]] = ()):
    """Follow strands through crossings.

    ``starts`` lists preferred incoming (crossing, slot) pairs, one per
    component, in the order components should be numbered; components not
    reached from them start at the smallest untouched edge.  Returns a list of
    components, each a list of ``(edge, crossing, incoming_slot)`` steps.
    """
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, c in enumerate(crossings):
        for s, e in enumerate(c):
            occ.setdefault(e, []).append((ci, s))

    def other_end(e, ci, s):
        a, b = occ[e]
        return b if a == (ci, s) else a

    used: set[int] = set()
    comps = []

    def walk(ci, s):
        steps = []
        while True:
            e_in = crossings[ci][s]
            if e_in in used:
                break
            used.add(e_in)
            steps.append((e_in, ci, s))
            out_slot = (s + 2) % 4
            e_out = crossings[ci][out_slot]
            ci, s = other_end(e_out, ci, out_slot)
        return steps

    for ci, s in starts:
        if crossings[ci][s] not in used:
            comps.append(walk(ci, s))
    for e in sorted(occ):
        if e not in used:
            ci, s = occ[e][1]
            comps.append(walk(ci, s))
    return comps


def orient(d: PlanarDiagram, flip_second: bool = False) -> OrientedDiagram:
    """Orient every component of ``d``.

    The first component runs left to right along the top strand.  A second
    component runs left to right on height 1 as it leaves the lower left cap;
    ``flip_second`` reverses it.
    """
    starts = []
    if d.start_top is not None:
        starts.append(d.start_top)
    if d.start_lower is not None:
        starts.append(d.start_lower)
    comps = trace_components(d.crossings, starts)

    if flip_second and len(comps) > 1:
        comps[1] = _reverse_component(d.crossings, comps[1])

    n = d.n_crossings
    under_in = [None] * n
    over_in = [None] * n
    edge_component = {}
    edge_head = {}
    for idx, steps in enumerate(comps):
        for e, ci, s in steps:
            edge_component[e] = idx
            edge_head[e] = (ci, s)
            if s % 2 == 0:
                under_in[ci] = s
            else:
                over_in[ci] = s
    if any(v is None for v in under_in + over_in):
        raise ValueError("inconsistent orientation: some crossing lacks an incoming strand")
    components = tuple(tuple(e for e, _, _ in steps) for steps in comps)
    return OrientedDiagram(d, tuple(under_in), tuple(over_in), edge_component, edge_head, components)


def _reverse_component(crossings, steps):
    # entering through slot s going forward means leaving through s+2 going back
    return [(crossings[ci][(s + 2) % 4], ci, (s + 2) % 4) for e, ci, s in reversed(steps)]


def crossing_signs(od: OrientedDiagram) -> tuple[int, ...]:
    """Right-hand-rule sign per crossing.

    With the incoming under strand at slot 0, the crossing is positive when the
    over strand enters at slot 3 and leaves at slot 1.
    """
    return tuple(1 if (o - u) % 4 == 3 else -1 for u, o in zip(od.under_in, od.over_in))


def writhe(od: OrientedDiagram) -> int:
    return sum(crossing_signs(od))


def mirror_diagram(d: PlanarDiagram) -> PlanarDiagram:
    """Switch every crossing; the layout is unchanged."""
    crossings = tuple((c[1], c[2], c[3], c[0]) for c in d.crossings)
    # slots shift down by one, so stored start slots shift with them
    def shift(st):
        return None if st is None else (st[0], (st[1] - 1) % 4)

    info = tuple(
        CrossingInfo(i.box, i.column, i.upper, -i.twist) for i in d.info
    )
    return PlanarDiagram(crossings, info, d.word, shift(d.start_top), shift(d.start_lower))


def pd_code(od: OrientedDiagram) -> list[tuple[int, int, int, int]]:
    """PD code: each crossing listed counterclockwise from the incoming under strand."""
    out = []
    for c, u in zip(od.diagram.crossings, od.under_in):
        out.append(tuple(c[(u + k) % 4] for k in range(4)))
    return out


def format_pd(od: OrientedDiagram) -> str:
    return "\n".join(f"X({i},{j},{k},{l})" for i, j, k, l in pd_code(od))
