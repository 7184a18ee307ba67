"""Planar-diagram (PD) codes for knots.

A crossing ``X(a,b,c,d)`` lists its four edge labels counterclockwise,
starting at the incoming under-edge, so the under-strand runs ``a -> c``.
The over-strand runs either ``d -> b`` (a positive crossing) or ``b -> d``
(a negative crossing); which one is fixed by walking the knot.

The A-resolution of ``X(a,b,c,d)`` joins the arcs ``(a,b)`` and
``(c,d)``; the B-resolution joins ``(a,d)`` and ``(b,c)``.  At a positive
crossing the A-resolution is the oriented (Seifert) smoothing.

Besides parsing, this module generates pretzel and torus diagrams, takes
mirrors and connected sums, performs flat band moves, and exposes the
face structure (checkerboard coloring) that the other modules build on.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from crossgeo._graph import SlotGraph, from_pd_tuples, slot_labels, to_pd_tuples
from crossgeo.errors import (
    BadParameter,
    DisconnectedDiagram,
    LabelCountError,
    MalformedToken,
    MultiComponent,
    NonPlanarDiagram,
    NotCoprime,
    OrientationError,
)

PDTuple = tuple[int, int, int, int]

BLACK = "black"
WHITE = "white"


@dataclass(frozen=True)
class Crossing:
    """One crossing: four edge labels and the derived sign."""

    edges: PDTuple
    sign: int

    def __str__(self) -> str:
        return "X({},{},{},{})".format(*self.edges)


@dataclass(frozen=True)
class KnotDiagram:
    """A validated single-component knot diagram.

    Instances are built with :meth:`from_tuples` or :func:`parse_pd`, which
    check the label, connectivity, orientation and planarity invariants.
    The zero-crossing diagram is the round unknot.
    """

    crossings: tuple[Crossing, ...]
    label: str | None = field(default=None, compare=False)

    # construction ---------------------------------------------------------

    @classmethod
    def from_tuples(
        cls, tuples: Iterable[Sequence[int]], label: str | None = None
    ) -> KnotDiagram:
        pd = [tuple(int(v) for v in t) for t in tuples]
        for t in pd:
            if len(t) != 4:
                raise MalformedToken(f"crossing {t} does not have four labels")
        c = len(pd)
        if c == 0:
            return cls((), label)
        _check_labels(pd)
        g = from_pd_tuples(pd)
        if g.graph_components() != 1:
            raise DisconnectedDiagram("diagram is not connected")
        if len(g.strands()) != 1:
            raise MultiComponent("PD code describes a link, not a knot")
        signs = _orient(g)
        if not g.is_planar():
            raise NonPlanarDiagram(
                f"{g.n_faces()} faces, but a planar diagram with {c} crossings has {c + 2}"
            )
        return cls(tuple(Crossing(t, s) for t, s in zip(pd, signs)), label)  # type: ignore[arg-type]

    # basic accessors ----------------------------------------------------------

    @property
    def c(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return 2 * self.c

    @property
    def pd(self) -> tuple[PDTuple, ...]:
        return tuple(x.edges for x in self.crossings)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    def to_pd(self) -> str:
        return " ".join(str(x) for x in self.crossings)

    def to_json(self) -> str:
        return json.dumps({"name": self.label, "pd": [list(t) for t in self.pd]})

    @classmethod
    def from_json(cls, text: str) -> KnotDiagram:
        obj = json.loads(text)
        return cls.from_tuples(obj["pd"], obj.get("name"))

    def with_label(self, label: str | None) -> KnotDiagram:
        return KnotDiagram(self.crossings, label)

    def __str__(self) -> str:
        return self.to_pd() or "unknot (0 crossings)"

    # derived planar structure --------------------------------------------------

    @cached_property
    def graph(self) -> SlotGraph:
        return from_pd_tuples(self.pd)

    @cached_property
    def _faces(self) -> dict[tuple[int, int], int]:
        return self.graph.faces()

    @property
    def n_faces(self) -> int:
        return len(set(self._faces.values())) if self.c else 2

    def corner_face(self, x: int, i: int) -> int:
        """Face in the corner between slots ``i`` and ``i+1`` of crossing ``x``."""
        return self._faces[(x, (i + 1) % 4)]

    def edge_slots(self, label: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two ``(crossing, slot)`` ends of an edge."""
        ends = [(x, i) for x, t in enumerate(self.pd) for i, v in enumerate(t) if v == label]
        return ends[0], ends[1]

    def edge_faces(self, label: int) -> tuple[int, int]:
        """The faces on the two sides of an edge."""
        a, b = self.edge_slots(label)
        return self._faces[a], self._faces[b]

    @cached_property
    def face_colors(self) -> tuple[str, ...]:
        """Checkerboard color of every face; white contains corner 0 of crossing 0."""
        if not self.c:
            return (WHITE, BLACK)
        nf = self.n_faces
        parity: list[int | None] = [None] * nf
        parity[self.corner_face(0, 0)] = 0
        adj: list[list[int]] = [[] for _ in range(nf)]
        for x in range(self.c):
            for i in range(4):
                f, h = self.corner_face(x, i), self.corner_face(x, i + 1)
                adj[f].append(h)
                adj[h].append(f)
        stack = [self.corner_face(0, 0)]
        while stack:
            f = stack.pop()
            for h in adj[f]:
                if parity[h] is None:
                    parity[h] = 1 - parity[f]  # type: ignore[operator]
                    stack.append(h)
                elif parity[h] == parity[f]:
                    raise NonPlanarDiagram("faces are not 2-colorable")
        return tuple(WHITE if p == 0 else BLACK for p in parity)

    def mirror(self) -> KnotDiagram:
        """Mirror image: ``X(a,b,c,d) -> X(a,d,c,b)``."""
        lab = f"mirror({self.label})" if self.label else None
        return KnotDiagram.from_tuples(((a, d, c, b) for a, b, c, d in self.pd), lab)


@dataclass(frozen=True)
class CheckerboardColoring:
    """Faces of a diagram with a proper black/white coloring.

    ``incidences[x]`` holds ``(white, white, black, black)`` face ids at
    crossing ``x``; the white pair sits in the corners that the all-A
    resolution keeps apart when the diagram is alternating.
    """

    regions: tuple[int, ...]
    color: tuple[str, ...]
    incidences: tuple[tuple[int, int, int, int], ...]

    def of_color(self, col: str) -> list[int]:
        return [r for r in self.regions if self.color[r] == col]


# parsing -----------------------------------------------------------------------

_TOKEN = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_SEP = re.compile(r"[\s;]*")


def parse_pd(text: str, label: str | None = None) -> KnotDiagram:
    """Parse ``X(a,b,c,d)`` tuples separated by whitespace or semicolons.

    An empty string is the zero-crossing unknot.

    Raises:
        MalformedToken: on any text that is not a crossing tuple.
        LabelCountError: if a label is not used exactly twice or the labels
            are not ``1..2c``.
        DisconnectedDiagram: if the diagram graph is disconnected.
        MultiComponent: if the code describes a link.
    """
    tuples: list[PDTuple] = []
    pos = _SEP.match(text).end()  # type: ignore[union-attr]
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            snippet = text[pos : pos + 20]
            raise MalformedToken(f"unexpected text at offset {pos}: {snippet!r}")
        tuples.append(tuple(int(v) for v in m.groups()))  # type: ignore[arg-type]
        pos = _SEP.match(text, m.end()).end()  # type: ignore[union-attr]
    return KnotDiagram.from_tuples(tuples, label)


def _check_labels(pd: Sequence[Sequence[int]]) -> None:
    counts: dict[int, int] = {}
    for t in pd:
        for v in t:
            counts[v] = counts.get(v, 0) + 1
    bad = sorted(v for v, k in counts.items() if k != 2)
    if bad:
        raise LabelCountError(f"labels not used exactly twice: {bad}")
    if set(counts) != set(range(1, 2 * len(pd) + 1)):
        raise LabelCountError(f"labels must be 1..{2 * len(pd)}")


def _orient(g: SlotGraph) -> list[int]:
    """Crossing signs from the walk that follows every under-strand 0 -> 2."""
    signs = [0] * g.n
    cur = (0, 2)
    for _ in range(2 * g.n):
        y, j = g.partner(cur)
        if j == 2:
            raise OrientationError(
                f"crossing {y + 1}: walk enters the under-strand at its third label"
            )
        if j in (1, 3):
            signs[y] = 1 if j == 3 else -1
        cur = (y, (j + 2) % 4)
    return signs


# elementary quantities -------------------------------------------------------------


def writhe(d: KnotDiagram) -> int:
    return sum(d.signs)


def crossing_counts(d: KnotDiagram) -> tuple[int, int]:
    """``(positive, negative)`` crossing counts."""
    pos = sum(1 for s in d.signs if s > 0)
    return pos, d.c - pos


def is_alternating(d: KnotDiagram) -> bool:
    """Over and under alternate: every edge joins an under slot to an over slot."""
    return all((i + j) % 2 == 1 for (_, i), (_, j) in d.graph.edges())


def nugatory_crossings(d: KnotDiagram) -> list[int]:
    """Crossings that touch the same face in two opposite corners."""
    return [
        x
        for x in range(d.c)
        if d.corner_face(x, 0) == d.corner_face(x, 2) or d.corner_face(x, 1) == d.corner_face(x, 3)
    ]


def is_reduced(d: KnotDiagram) -> bool:
    return not nugatory_crossings(d)


def checkerboard(d: KnotDiagram) -> CheckerboardColoring:
    colors = d.face_colors
    inc = []
    for x in range(d.c):
        corners = [d.corner_face(x, i) for i in range(4)]
        if colors[corners[0]] == WHITE:
            inc.append((corners[0], corners[2], corners[1], corners[3]))
        else:
            inc.append((corners[1], corners[3], corners[0], corners[2]))
    return CheckerboardColoring(tuple(range(len(colors))), colors, tuple(inc))


# generators ------------------------------------------------------------------------


def _freeze(g: SlotGraph, label: str | None) -> KnotDiagram:
    if g.n == 0:
        return KnotDiagram((), label)
    comps = len(g.strands())
    if comps != 1:
        raise MultiComponent(f"construction yields a {comps}-component link")
    return KnotDiagram.from_tuples(to_pd_tuples(g), label)


_TWIST_SLOTS = {True: ("NW", "SW", "SE", "NE"), False: ("NE", "NW", "SW", "SE")}


def _twist_crossing(g: SlotGraph, q: int) -> dict[str, tuple[int, int]]:
    """Add one crossing of a vertical twist region; returns compass slots.

    For ``q > 0`` the ``NW``-``SE`` strand passes under, otherwise the
    ``NE``-``SW`` strand does.  Slots are counterclockwise in both cases.
    """
    x = g.add_crossing()
    return {name: (x, i) for i, name in enumerate(_TWIST_SLOTS[q > 0])}


def pretzel_graph(params: Sequence[int]) -> SlotGraph:
    if not params or any(q == 0 for q in params):
        raise ValueError("pretzel parameters must be nonzero")
    g = SlotGraph()
    tops: list[tuple[tuple[int, int], tuple[int, int]]] = []
    bottoms: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for q in params:
        column = [_twist_crossing(g, q) for _ in range(abs(q))]
        for upper, lower in zip(column, column[1:]):
            g.connect(upper["SW"], lower["NW"])
            g.connect(upper["SE"], lower["NE"])
        tops.append((column[0]["NW"], column[0]["NE"]))
        bottoms.append((column[-1]["SW"], column[-1]["SE"]))
    n = len(params)
    for i in range(n):
        j = (i + 1) % n
        g.connect(tops[i][1], tops[j][0])
        g.connect(bottoms[i][1], bottoms[j][0])
    return g


def pretzel_diagram(params: Sequence[int]) -> KnotDiagram:
    """Standard diagram of ``P(q_1, ..., q_N)``: ``N`` vertical twist regions.

    A positive parameter has the twist handedness for which ``P(-3,3,3)``
    has six negative crossings, ``P(1,1,3)`` is the 5_2 diagram of writhe
    -5, and ``P(-1,-1,-1)`` is the positive trefoil.

    Raises:
        MultiComponent: when the parameters describe a link.
    """
    name = "P(" + ",".join(str(q) for q in params) + ")"
    return _freeze(pretzel_graph(params), name)


def pretzel_bottom_connector(params: Sequence[int], i: int) -> int:
    """Edge label, in :func:`pretzel_diagram`, of the bottom arc leaving column ``i``.

    Columns are numbered from 0; the arc leaving the last column wraps
    around to column 0.
    """
    i %= len(params)
    x = sum(abs(q) for q in params[: i + 1]) - 1  # bottom crossing of column i
    order = _TWIST_SLOTS[params[i] > 0]
    return slot_labels(pretzel_graph(params))[(x, order.index("SE"))]


def torus_graph(p: int, q: int) -> SlotGraph:
    """Closure of the positive braid ``(s_1 ... s_{q-1})^p`` on ``q`` strands."""
    g = SlotGraph()
    ends: list[tuple[int, int] | None] = [None] * q
    firsts: list[tuple[int, int] | None] = [None] * q

    def attach(pos: int, slot: tuple[int, int]) -> None:
        if ends[pos] is None:
            firsts[pos] = slot
        else:
            g.connect(ends[pos], slot)  # type: ignore[arg-type]

    for _ in range(p):
        for i in range(q - 1):
            x = g.add_crossing()
            # counterclockwise from SE; the SE-NW strand is under, so the
            # SW-NE strand crosses over left to right: a positive crossing
            se, ne, nw, sw = (x, 0), (x, 1), (x, 2), (x, 3)
            attach(i, sw)
            attach(i + 1, se)
            ends[i], ends[i + 1] = nw, ne
    for pos in range(q):
        g.connect(ends[pos], firsts[pos])  # type: ignore[arg-type]
    return g


def torus_diagram(p: int, q: int) -> KnotDiagram:
    """Positive braid-closure diagram of ``T(p, q)`` with ``p(q-1)`` crossings.

    Raises:
        NotCoprime: if ``gcd(p, q) != 1``.
        BadParameter: unless ``p > q >= 2``.
    """
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p},{q}) = {gcd(p, q)}")
    if not p > q >= 2:
        raise BadParameter("torus_diagram needs p > q >= 2")
    return _freeze(torus_graph(p, q), f"T({p},{q})")


def connected_sum(d1: KnotDiagram, d2: KnotDiagram) -> KnotDiagram:
    """Splice edge 1 of ``d1`` with edge 1 of ``d2``.

    Of the two ways to reconnect the four loose ends, the one giving a
    planar diagram is used.
    """
    lab = f"{d1.label}#{d2.label}" if d1.label and d2.label else None
    if d1.c == 0:
        return d2.with_label(lab or d2.label)
    if d2.c == 0:
        return d1.with_label(lab or d1.label)
    g = SlotGraph.disjoint_union(d1.graph, d2.graph)
    a1, b1 = d1.edge_slots(1)
    a2, b2 = d2.edge_slots(1)
    a2 = (a2[0] + d1.c, a2[1])
    b2 = (b2[0] + d1.c, b2[1])
    g.disconnect(a1)
    g.disconnect(a2)
    for pairing in (((a1, a2), (b1, b2)), ((a1, b2), (b1, a2))):
        h = g.copy()
        for u, v in pairing:
            h.connect(u, v)
        if h.is_planar():
            return _freeze(h, lab)
    raise NonPlanarDiagram("no planar splice found")  # pragma: no cover


# band moves ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BandResult:
    """Outcome of a flat band move on a diagram.

    ``orientable`` is True when the band respects the knot orientation.
    ``diagram`` is set when the result is again a knot; ``components``
    counts link components either way.

    ``writhe`` is the writhe of the result: for an orientable band every
    strand keeps its direction and no crossing changes, so it equals the
    writhe of the original; for a non-orientable band it is only defined
    when the result is a knot.
    """

    edges: tuple[int, int]
    orientable: bool
    components: int
    diagram: KnotDiagram | None
    graph: SlotGraph = field(compare=False, repr=False)
    writhe: int | None = None

    def euler(self, original: KnotDiagram) -> int:
        """Normal Euler number of the band cobordism, ``wri(result) - wri(original)``.

        Raises:
            OrientationError: if the result is a link that inherits no orientation.
        """
        if self.writhe is None:
            raise OrientationError("result of a non-orientable band onto a link has no writhe")
        return self.writhe - writhe(original)


def band_moves(d: KnotDiagram, e1: int, e2: int) -> list[BandResult]:
    """All planar flat band moves joining edges ``e1`` and ``e2``.

    Each edge is cut and the four loose ends are reconnected in pairs.
    Edges are oriented by their labels (edge ``k`` runs from the crossing
    where it is the outgoing edge); reconnecting tail-of-one to head-of-
    the-other keeps the orientation and is the orientable band.
    """
    if e1 == e2:
        raise ValueError("a band joins two distinct edges")
    t1, h1 = _tail_head(d, e1)
    t2, h2 = _tail_head(d, e2)
    out = []
    for pairing, orientable in ((((t1, h2), (t2, h1)), True), (((t1, t2), (h1, h2)), False)):
        g = d.graph.copy()
        g.disconnect(t1)
        g.disconnect(t2)
        for u, v in pairing:
            g.connect(u, v)
        if not g.is_planar():
            continue
        comps = len(g.strands())
        diag = _freeze(g, None) if comps == 1 else None
        if orientable:
            w: int | None = writhe(d)
        else:
            w = writhe(diag) if diag is not None else None
        out.append(BandResult((e1, e2), orientable, comps, diag, g, w))
    return out


def _tail_head(d: KnotDiagram, label: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Slot where edge ``label`` departs and slot where it arrives."""
    a, b = d.edge_slots(label)
    for x, i in (a, b):
        # edge ``label`` leaves crossing x through an outgoing slot
        if i == 2 or (i == 1 and d.signs[x] > 0) or (i == 3 and d.signs[x] < 0):
            other = b if (x, i) == a else a
            return (x, i), other
    raise OrientationError(f"edge {label} has no outgoing end")  # pragma: no cover


def faces_of_edges(d: KnotDiagram) -> dict[int, list[int]]:
    """Face id -> edge labels on its boundary."""
    out: dict[int, list[int]] = {}
    for lab in range(1, d.n_edges + 1):
        for f in set(d.edge_faces(lab)):
            out.setdefault(f, []).append(lab)
    return out
