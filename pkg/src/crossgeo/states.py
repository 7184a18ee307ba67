"""Kauffman states and their state surfaces.

A state picks the A- or B-resolution at every crossing.  States are stored
as bitmasks over the crossing order, with bit ``x`` clear for A and set
for B, so the all-A state is ``0``.

The state surface has one disk per state circle and one half-twisted band
per crossing.  Its first Betti number is ``1 + c - |s|`` and its normal
Euler number is ``A(s) - B(s) - wri(D)``.

Orientability is decided by propagating a disk orientation across the
bands.  Circles are nested in the plane; a band between circles at nesting
depths of different parity joins a disk seen from above to one seen from
below, which cancels the reversal the half twist would otherwise cause.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from crossgeo.diagram import KnotDiagram, writhe
from crossgeo.errors import TooManyCrossings

DEFAULT_STATE_CAP = 24
STATE_CAP_ENV = "CROSSGEO_STATE_CAP"


def state_cap() -> int:
    """Crossing cap for exhaustive enumeration (env override allowed)."""
    raw = os.environ.get(STATE_CAP_ENV)
    return int(raw) if raw else DEFAULT_STATE_CAP


class Provenance(str, Enum):
    STATE = "state-surface"
    TWISTED = "twisted"
    PINCH = "pinch"
    EDGEPATH = "edgepath"
    BAND = "band-move"
    EXTERNAL = "external"


class _DSU:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


# slot pairs joined by each resolution
_ARCS = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}
# corner faces merged by each resolution (corner i lies between slots i, i+1)
_MERGED_CORNERS = {0: (1, 3), 1: (0, 2)}


def seifert_mask(d: KnotDiagram) -> int:
    """The oriented resolution: A at positive crossings, B at negative ones."""
    return sum(1 << x for x, s in enumerate(d.signs) if s < 0)


@dataclass(frozen=True)
class State:
    """A resolution choice at every crossing of ``diagram``."""

    diagram: KnotDiagram
    mask: int

    @property
    def choices(self) -> str:
        return "".join("B" if self.is_b(x) else "A" for x in range(self.diagram.c))

    def is_b(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    @property
    def n_a(self) -> int:
        return self.diagram.c - self.n_b

    @property
    def n_b(self) -> int:
        return bin(self.mask).count("1")

    # circles ----------------------------------------------------------------

    @cached_property
    def circle_of_edge(self) -> dict[int, int]:
        """Edge label -> state circle index (circles numbered by first edge)."""
        d = self.diagram
        if d.c == 0:
            return {}
        dsu = _DSU(d.n_edges + 1)
        for x, t in enumerate(d.pd):
            for i, j in _ARCS[self.mask >> x & 1]:
                dsu.union(t[i], t[j])
        ids: dict[int, int] = {}
        out = {}
        for lab in range(1, d.n_edges + 1):
            r = dsu.find(lab)
            out[lab] = ids.setdefault(r, len(ids))
        return out

    @property
    def n_circles(self) -> int:
        return len(set(self.circle_of_edge.values())) if self.diagram.c else 1

    def band_ends(self, x: int) -> tuple[int, int]:
        """The two circles joined by the band at crossing ``x``."""
        t = self.diagram.pd[x]
        (i, _), (k, _) = _ARCS[self.mask >> x & 1]
        return self.circle_of_edge[t[i]], self.circle_of_edge[t[k]]

    # planar nesting -------------------------------------------------------

    @cached_property
    def region_of_face(self) -> dict[int, int]:
        """Face id -> complementary region of the state circles."""
        d = self.diagram
        dsu = _DSU(d.n_faces)
        for x in range(d.c):
            i, j = _MERGED_CORNERS[self.mask >> x & 1]
            dsu.union(d.corner_face(x, i), d.corner_face(x, j))
        ids: dict[int, int] = {}
        return {f: ids.setdefault(dsu.find(f), len(ids)) for f in range(d.n_faces)}

    def circle_sides(self) -> dict[int, tuple[int, int]]:
        """Circle -> the two complementary regions it separates."""
        d = self.diagram
        out = {}
        for lab, circ in self.circle_of_edge.items():
            if circ in out:
                continue
            f1, f2 = d.edge_faces(lab)
            out[circ] = (self.region_of_face[f1], self.region_of_face[f2])
        return out

    def nesting_depth(self, outer_face: int = 0) -> dict[int, int]:
        """Circle -> nesting depth, with ``outer_face`` containing infinity.

        Regions and circles form a tree (regions are nodes, each circle an
        edge).  A circle's depth is the depth of the region on its outer side.
        """
        if self.diagram.c == 0:
            return {0: 0}
        sides = self.circle_sides()
        adj: dict[int, list[int]] = {}
        for r1, r2 in sides.values():
            adj.setdefault(r1, []).append(r2)
            adj.setdefault(r2, []).append(r1)
        root = self.region_of_face[outer_face]
        depth = {root: 0}
        queue = deque([root])
        while queue:
            r = queue.popleft()
            for s in adj.get(r, []):
                if s not in depth:
                    depth[s] = depth[r] + 1
                    queue.append(s)
        return {c: min(depth[r1], depth[r2]) for c, (r1, r2) in sides.items()}

    # derived surface data ---------------------------------------------------------

    def is_basic(self) -> bool:
        """No band joins a state circle to itself."""
        return all(a != b for a, b in (self.band_ends(x) for x in range(self.diagram.c)))

    def to_dict(self) -> dict:
        surf = state_surface(self)
        return {
            "choices": self.choices,
            "circles": self.n_circles,
            "b1": surf.b1,
            "e": surf.e,
            "orientable": surf.orientable,
            "basic": self.is_basic(),
        }


@dataclass(frozen=True)
class SurfacePoint:
    """A point ``(e, b1)`` of the geography plane with its origin."""

    e: int
    b1: int
    orientable: bool = False
    provenance: str = Provenance.STATE.value

    @property
    def pair(self) -> tuple[int, int]:
        return (self.e, self.b1)

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "b1": self.b1,
            "orientable": self.orientable,
            "provenance": self.provenance,
        }


@dataclass(frozen=True)
class StateSurface:
    state: State
    b1: int
    e: int
    orientable: bool

    @property
    def point(self) -> SurfacePoint:
        return SurfacePoint(self.e, self.b1, self.orientable, Provenance.STATE.value)


# operations ----------------------------------------------------------------------------


def _mask_from_choices(d: KnotDiagram, choices: str | int) -> int:
    if isinstance(choices, int):
        if not 0 <= choices < 1 << d.c:
            raise ValueError(f"mask {choices} out of range for {d.c} crossings")
        return choices
    text = choices.upper()
    if len(text) != d.c or set(text) - {"A", "B"}:
        raise ValueError(f"need one A/B choice per crossing ({d.c}), got {choices!r}")
    return sum(1 << x for x, ch in enumerate(text) if ch == "B")


def resolve(d: KnotDiagram, choices: str | int) -> State:
    """State of ``d`` from an ``"ABBA..."`` string or a bitmask (bit set = B)."""
    return State(d, _mask_from_choices(d, choices))


def all_a(d: KnotDiagram) -> State:
    return State(d, 0)


def all_b(d: KnotDiagram) -> State:
    return State(d, (1 << d.c) - 1)


def orientability(s: State, outer_face: int = 0) -> bool:
    """Whether the state surface is orientable (union-find with parity).

    A band flips the propagated disk orientation once for its half twist
    and once more when it joins circles at different nesting depths.  The
    answer does not depend on which face is taken to contain infinity.
    """
    d = s.diagram
    if d.c == 0:
        return True
    depth = s.nesting_depth(outer_face)
    n = s.n_circles
    parent = list(range(n))
    par = [0] * n  # parity relative to parent

    def find(a: int) -> tuple[int, int]:
        p = 0
        while parent[a] != a:
            p ^= par[a]
            a = parent[a]
        return a, p

    for x in range(d.c):
        u, v = s.band_ends(x)
        flip = 1 ^ ((depth[u] - depth[v]) & 1)
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            if pu ^ pv != flip:
                return False
        else:
            parent[ru] = rv
            par[ru] = pu ^ pv ^ flip
    return True


def state_surface(s: State) -> StateSurface:
    d = s.diagram
    b1 = 1 + d.c - s.n_circles
    e = s.n_a - s.n_b - writhe(d)
    return StateSurface(s, b1, e, orientability(s))


def enumerate_states(d: KnotDiagram, basic_only: bool = False) -> list[State]:
    """All ``2^c`` states, or only the basic ones, ordered by bitmask.

    Raises:
        TooManyCrossings: if ``c`` exceeds :func:`state_cap`.
    """
    cap = state_cap()
    if d.c > cap:
        raise TooManyCrossings(f"{d.c} crossings exceeds the enumeration cap of {cap}")
    if not basic_only:
        return [State(d, m) for m in range(1 << d.c)]
    return [State(d, m) for m in sorted(_basic_masks(d))]


def _basic_masks(d: KnotDiagram) -> list[int]:
    """Depth-first search over partial states.

    Once the two arcs at an already-resolved crossing lie on one partial
    circle they stay on one circle, so that branch is abandoned.
    """
    c = d.c
    if c == 0:
        return [0]
    pd = d.pd
    out: list[int] = []
    n = d.n_edges + 1

    def find(parent: list[int], a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    def rec(x: int, mask: int, parent: list[int]) -> None:
        for done in range(x):
            t = pd[done]
            (i, _), (k, _) = _ARCS[mask >> done & 1]
            if find(parent, t[i]) == find(parent, t[k]):
                return
        if x == c:
            out.append(mask)
            return
        t = pd[x]
        for bit in (0, 1):
            p = parent.copy()
            for i, j in _ARCS[bit]:
                ri, rj = find(p, t[i]), find(p, t[j])
                if ri != rj:
                    p[ri] = rj
            rec(x + 1, mask | bit << x, p)

    rec(0, 0, list(range(n)))
    return out


def add_twisted_band(p: SurfacePoint, sign: int | str, k: int = 1) -> SurfacePoint:
    """Add ``k`` half-twisted bands of the given sign: ``(e +- 2k, b1 + k)``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    sg = _sign(sign)
    return SurfacePoint(p.e + 2 * sg * k, p.b1 + k, False, Provenance.TWISTED.value)


def _sign(sign: int | str) -> int:
    if sign in (1, "+", "plus"):
        return 1
    if sign in (-1, "-", "minus"):
        return -1
    raise ValueError(f"sign must be + or -, got {sign!r}")


def state_report(states: list[State]) -> str:
    return json.dumps([s.to_dict() for s in states])
