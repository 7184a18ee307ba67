"""Mutable planar slot graph used to build and rewrite diagrams.

A slot graph is a 4-valent graph whose vertices are crossings.  Each
crossing has four slots numbered counterclockwise; slots 0 and 2 always
carry the under-strand, slots 1 and 3 the over-strand.  Which way the
strands run is not stored: orientation is recovered by walking the graph
when the graph is frozen into a :class:`~crossgeo.diagram.KnotDiagram`.

The builders in :mod:`crossgeo.diagram` (pretzel and torus diagrams,
connected sums, band moves) all work on this representation because it
lets them wire crossings together by geometric position instead of
bookkeeping edge labels by hand.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

Slot = tuple[int, int]


class SlotGraph:
    """A rotation system of 4-valent crossings with under-slots ``(0, 2)``."""

    def __init__(self, n: int = 0) -> None:
        self.conn: list[list[Slot | None]] = [[None] * 4 for _ in range(n)]

    # construction -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.conn)

    def add_crossing(self) -> int:
        self.conn.append([None] * 4)
        return len(self.conn) - 1

    def connect(self, a: Slot, b: Slot) -> None:
        for s in (a, b):
            if self.conn[s[0]][s[1]] is not None:
                raise ValueError(f"slot {s} already connected")
        self.conn[a[0]][a[1]] = b
        self.conn[b[0]][b[1]] = a

    def disconnect(self, a: Slot) -> Slot:
        b = self.partner(a)
        self.conn[a[0]][a[1]] = None
        self.conn[b[0]][b[1]] = None
        return b

    def partner(self, s: Slot) -> Slot:
        p = self.conn[s[0]][s[1]]
        if p is None:
            raise ValueError(f"slot {s} is dangling")
        return p

    def copy(self) -> SlotGraph:
        g = SlotGraph()
        g.conn = [list(row) for row in self.conn]
        return g

    @classmethod
    def disjoint_union(cls, a: SlotGraph, b: SlotGraph) -> SlotGraph:
        g = a.copy()
        off = a.n
        for row in b.conn:
            g.conn.append([None if s is None else (s[0] + off, s[1]) for s in row])
        return g

    def is_complete(self) -> bool:
        return all(s is not None for row in self.conn for s in row)

    # structure ----------------------------------------------------------

    def edges(self) -> Iterator[tuple[Slot, Slot]]:
        """Each edge once, as an ordered pair of slots."""
        for x in range(self.n):
            for i in range(4):
                a = (x, i)
                b = self.partner(a)
                if a < b or a == b:
                    yield a, b

    def faces(self) -> dict[Slot, int]:
        """Face id of every departing dart.

        A face is traced by arriving at slot ``j`` and departing again at
        slot ``j + 1`` of the same crossing.
        """
        face: dict[Slot, int] = {}
        count = 0
        for x in range(self.n):
            for i in range(4):
                if (x, i) in face:
                    continue
                cur = (x, i)
                while cur not in face:
                    face[cur] = count
                    y, j = self.partner(cur)
                    cur = (y, (j + 1) % 4)
                count += 1
        return face

    def n_faces(self) -> int:
        return len(set(self.faces().values())) if self.n else 1

    def graph_components(self) -> int:
        if self.n == 0:
            return 0
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for i in range(4):
                y = self.partner((x, i))[0]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps = 1
        for start in range(self.n):
            if start in seen:
                continue
            comps += 1
            seen.add(start)
            stack = [start]
            while stack:
                x = stack.pop()
                for i in range(4):
                    y = self.partner((x, i))[0]
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return comps

    def is_planar(self) -> bool:
        """Euler's formula for a 4-valent map on a disjoint union of spheres."""
        if self.n == 0:
            return True
        return self.n_faces() == self.n + 1 + self.graph_components()

    def strands(self) -> list[list[Slot]]:
        """Link components as cyclic lists of departing slots.

        Each component is walked straight through crossings, starting from
        the lowest unvisited departing slot.
        """
        seen: set[Slot] = set()
        comps: list[list[Slot]] = []
        for x in range(self.n):
            for i in range(4):
                if (x, i) in seen:
                    continue
                walk: list[Slot] = []
                cur = (x, i)
                while cur not in seen:
                    seen.add(cur)
                    arr = self.partner(cur)
                    seen.add(arr)
                    walk.append(cur)
                    cur = (arr[0], (arr[1] + 2) % 4)
                comps.append(walk)
        return comps

    # rewrites -------------------------------------------------------------

    def mirrored(self) -> SlotGraph:
        """Reflect the plane: slot ``i`` becomes slot ``-i mod 4``."""
        g = SlotGraph(self.n)
        for x in range(self.n):
            for i in range(4):
                y, j = self.partner((x, i))
                g.conn[x][(-i) % 4] = (y, (-j) % 4)
        return g


def oriented_walk(g: SlotGraph, start: Slot = (0, 2)) -> list[Slot]:
    """Departing slots of the component through ``start``, in walk order."""
    walk: list[Slot] = []
    cur = start
    while True:
        walk.append(cur)
        y, j = g.partner(cur)
        cur = (y, (j + 2) % 4)
        if cur == start:
            return walk


def slot_labels(g: SlotGraph, start: Slot = (0, 2)) -> dict[Slot, int]:
    """Edge label of every slot, numbering edges ``1..2c`` in walk order.

    Raises:
        ValueError: if the graph has more than one component.
    """
    walk = oriented_walk(g, start)
    if len(walk) != 2 * g.n:
        raise ValueError("slot graph has more than one component")
    label: dict[Slot, int] = {}
    for k, dep in enumerate(walk, start=1):
        label[dep] = k
        label[g.partner(dep)] = k
    return label


def to_pd_tuples(g: SlotGraph, start: Slot = (0, 2)) -> list[tuple[int, int, int, int]]:
    """Freeze a single-component slot graph into PD tuples.

    Edges are labelled ``1..2c`` in walk order starting with the edge that
    departs ``start``.  Each tuple is rotated so that it begins with the
    incoming under-edge.
    """
    label = slot_labels(g, start)
    under_in: dict[int, int] = {}
    for dep in oriented_walk(g, start):
        arr = g.partner(dep)
        if arr[1] in (0, 2):
            under_in[arr[0]] = arr[1]
    out = []
    for x in range(g.n):
        r = under_in[x]
        out.append(tuple(label[(x, (r + i) % 4)] for i in range(4)))
    return out  # type: ignore[return-value]


def from_pd_tuples(tuples: Sequence[Sequence[int]]) -> SlotGraph:
    """Slot graph of PD tuples (labels must already occur exactly twice)."""
    g = SlotGraph(len(tuples))
    where: dict[int, Slot] = {}
    for x, t in enumerate(tuples):
        for i, lab in enumerate(t):
            if lab in where:
                g.connect(where.pop(lab), (x, i))
            else:
                where[lab] = (x, i)
    if where:
        raise ValueError(f"unpaired labels {sorted(where)}")
    return g
