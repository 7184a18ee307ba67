"""Hatcher–Oertel edgepath systems for pretzel knots with odd parameters.

The edgepath diagram lives in the ``(u, v)`` plane.  Its vertices are
``<p/q> = (1 - 1/q, p/q)``, ``<p/q>° = (1, p/q)`` and ``<1/0> = (-1, 0)``.
Two interior vertices ``<p/q>``, ``<r/s>`` are joined exactly when
``|ps - qr| = 1``.

For a pretzel tangle with ``p`` half twists a basic edgepath is either
``sigma_p = <0> - <1/p>`` or ``rho_p = <±1> - <±1/2> - ... - <±1/|p|>``.
Paths are traversed from right to left.  Each basic system, one basic path
per tangle, is completed in three ways:

* **Type I** – paths are extended by the horizontal edge to ``<1/p>°``
  and truncated at a common ``u0`` where their heights sum to zero.
* **Type II** – vertical edges at ``u = 0`` are added until the endpoint
  heights sum to zero.
* **Type III** – every path is closed off at ``<1/0>``.

All arithmetic uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from math import ceil, lcm

from crossgeo.errors import BadParameter, EmptyInput
from crossgeo.geography import GammaPair, gamma

ZERO = Fraction(0)
ONE = Fraction(1)


class VertexKind(str, Enum):
    INTERIOR = "interior"
    HORIZONTAL = "horizontal"
    INFINITY = "infinity"


@dataclass(frozen=True)
class DiagramVertex:
    kind: VertexKind
    p: int = 1
    q: int = 0

    @classmethod
    def interior(cls, p: int, q: int = 1) -> DiagramVertex:
        f = Fraction(p, q)
        return cls(VertexKind.INTERIOR, f.numerator, f.denominator)

    @classmethod
    def horizontal(cls, p: int, q: int) -> DiagramVertex:
        f = Fraction(p, q)
        return cls(VertexKind.HORIZONTAL, f.numerator, f.denominator)

    @classmethod
    def infinity(cls) -> DiagramVertex:
        return cls(VertexKind.INFINITY, 1, 0)

    @property
    def u(self) -> Fraction:
        if self.kind is VertexKind.INFINITY:
            return Fraction(-1)
        if self.kind is VertexKind.HORIZONTAL:
            return ONE
        return 1 - Fraction(1, self.q)

    @property
    def v(self) -> Fraction:
        return ZERO if self.kind is VertexKind.INFINITY else Fraction(self.p, self.q)

    def adjacent(self, other: DiagramVertex) -> bool:
        """Joined by a (non-horizontal) edge of the diagram."""
        if VertexKind.HORIZONTAL in (self.kind, other.kind):
            return False
        return abs(self.p * other.q - self.q * other.p) == 1

    def __str__(self) -> str:
        if self.kind is VertexKind.INFINITY:
            return "<1/0>"
        body = str(self.p) if self.q == 1 else f"{self.p}/{self.q}"
        return f"<{body}>" + ("°" if self.kind is VertexKind.HORIZONTAL else "")


class EdgeKind(str, Enum):
    COMPLETE = "complete"
    PARTIAL = "partial"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    INFINITY = "infinity"


@dataclass(frozen=True)
class Edge:
    """An edge traversed from ``start`` (right) to ``end`` (left).

    A partial edge runs from ``start`` along the segment towards ``end``
    for the fraction ``fraction`` of the way, in the projective sense used
    for sheet counts; it stops in the interior.
    """

    kind: EdgeKind
    start: DiagramVertex
    end: DiagramVertex
    fraction: Fraction = ONE

    @property
    def length(self) -> Fraction:
        if self.kind in (EdgeKind.HORIZONTAL, EdgeKind.INFINITY):
            return ZERO
        return self.fraction

    @property
    def sign(self) -> int:
        """``ps - qr`` for left vertex ``p/q`` and right vertex ``r/s``; direction for verticals."""
        if self.kind is EdgeKind.VERTICAL:
            return 1 if self.end.v > self.start.v else -1
        if self.kind in (EdgeKind.HORIZONTAL, EdgeKind.INFINITY):
            return 0
        left, right = self.end, self.start
        return left.p * right.q - left.q * right.p

    @property
    def twist(self) -> Fraction:
        return -2 * self.sign * self.length

    def __str__(self) -> str:
        if self.kind is EdgeKind.PARTIAL:
            t = self.fraction
            return f"({t}{self.end} + {1 - t}{self.start}) - {self.start}"
        return f"{self.end} - {self.start}"


@dataclass(frozen=True)
class Edgepath:
    """A path of edges in traversal order (right to left)."""

    edges: tuple[Edge, ...]
    name: str = ""

    @property
    def start(self) -> DiagramVertex:
        return self.edges[0].start

    @property
    def end(self) -> DiagramVertex:
        return self.edges[-1].end

    @property
    def length(self) -> Fraction:
        return sum((e.length for e in self.edges), ZERO)

    @property
    def twist(self) -> Fraction:
        return sum((e.twist for e in self.edges), ZERO)

    def vertices(self) -> list[DiagramVertex]:
        return [self.edges[0].start] + [e.end for e in self.edges]

    def height_at(self, u: Fraction) -> Fraction | None:
        """``v`` where the (complete-edge) path crosses ``u``; None if it does not."""
        for e in self.edges:
            if e.kind in (EdgeKind.VERTICAL, EdgeKind.INFINITY, EdgeKind.PARTIAL):
                continue
            a, b = e.end, e.start
            lo, hi = min(a.u, b.u), max(a.u, b.u)
            if lo <= u <= hi:
                if a.u == b.u:
                    return a.v
                return a.v + (b.v - a.v) * (u - a.u) / (b.u - a.u)
        return None

    def with_edges(self, extra: Sequence[Edge], suffix: str = "") -> Edgepath:
        return Edgepath(self.edges + tuple(extra), self.name + suffix)

    def __str__(self) -> str:
        verts = list(reversed(self.vertices()))
        if any(e.kind is EdgeKind.PARTIAL for e in self.edges):
            return " ; ".join(str(e) for e in reversed(self.edges))
        return " - ".join(str(v) for v in verts)


def check_path(path: Edgepath) -> None:
    """Structural validity.

    Raises:
        ValueError: if the path moves rightwards, uses a non-edge,
            retraces itself or follows two sides of a triangle in a row.
    """
    for e in path.edges:
        if e.end.u > e.start.u:
            raise ValueError(f"{path.name}: edge {e} moves rightwards")
        if e.kind is EdgeKind.COMPLETE and not e.start.adjacent(e.end):
            raise ValueError(f"{path.name}: {e} is not an edge of the diagram")
        if e.kind is EdgeKind.VERTICAL and abs(e.start.v - e.end.v) != 1:
            raise ValueError(f"{path.name}: vertical edge {e} is not unit length")
        if e.kind is EdgeKind.PARTIAL and not 0 < e.fraction <= 1:
            raise ValueError(f"{path.name}: bad partial fraction {e.fraction}")
    for e1, e2 in zip(path.edges, path.edges[1:]):
        if EdgeKind.PARTIAL in (e1.kind, e2.kind) or EdgeKind.HORIZONTAL in (e1.kind, e2.kind):
            continue
        a, c = e1.start, e2.end
        if a == c:
            raise ValueError(f"{path.name}: retraces {e1}")
        if a.adjacent(c):
            raise ValueError(f"{path.name}: {e1} and {e2} are two sides of a triangle")


# basic edgepaths --------------------------------------------------------------------------


def basic_edgepath(p: int, shape: str) -> Edgepath:
    """``sigma_p = <0> - <1/p>`` or ``rho_p = <±1> - <±1/2> - ... - <±1/|p|>``.

    Raises:
        BadParameter: if ``|p| < 2`` or the shape is unknown.
    """
    if abs(p) < 2:
        raise BadParameter(f"|p| must be at least 2, got {p}")
    sg = 1 if p > 0 else -1
    m = abs(p)
    if shape == "sigma":
        edges = (Edge(EdgeKind.COMPLETE, DiagramVertex.interior(sg, m), DiagramVertex.interior(0)),)
        return Edgepath(edges, f"sigma_{p}")
    if shape == "rho":
        edges = tuple(
            Edge(EdgeKind.COMPLETE, DiagramVertex.interior(sg, k + 1), DiagramVertex.interior(sg, k))
            for k in range(m - 1, 0, -1)
        )
        return Edgepath(edges, f"rho_{p}")
    raise BadParameter(f"shape must be 'sigma' or 'rho', got {shape!r}")


class SystemType(str, Enum):
    BASIC = "basic"
    I = "I"  # noqa: E741
    II = "II"
    III = "III"


@dataclass(frozen=True)
class EdgepathSystem:
    """One edgepath per tangle, plus completion data.

    ``basic_index`` encodes the sigma/rho choice per tangle as a binary
    number whose most significant bit is the first tangle (bit set = rho).
    """

    paths: tuple[Edgepath, ...]
    type: SystemType
    basic_index: int
    sheets: int = 1
    u0: Fraction | None = None

    @property
    def label(self) -> str:
        if self.type is SystemType.BASIC:
            return f"basic_{self.basic_index}"
        return f"{self.type.value}_{self.basic_index}"

    def __str__(self) -> str:
        return "{" + ", ".join(p.name for p in self.paths) + "}"


def _check_params(params: Sequence[int]) -> None:
    if any(abs(p) < 2 or p % 2 == 0 for p in params):
        raise BadParameter(f"parameters must be odd with |p| >= 3, got {list(params)}")


def enumerate_basic_systems(params: Sequence[int]) -> list[EdgepathSystem]:
    """All ``2^N`` sigma/rho assignments, ordered by :attr:`EdgepathSystem.basic_index`."""
    for p in params:
        if abs(p) < 2:
            raise BadParameter(f"|p| must be at least 2, got {p}")
    n = len(params)
    out = []
    for bits in product((0, 1), repeat=n):
        idx = int("".join(map(str, bits)), 2) if n else 0
        paths = tuple(basic_edgepath(p, "rho" if b else "sigma") for p, b in zip(params, bits))
        out.append(EdgepathSystem(paths, SystemType.BASIC, idx))
    return out


# Type I -------------------------------------------------------------------------------------


def _extended(path: Edgepath) -> Edgepath:
    s = path.start
    h = DiagramVertex.horizontal(s.p, s.q)
    return Edgepath((Edge(EdgeKind.HORIZONTAL, h, s),) + path.edges, path.name)


def _sum_height(paths: Sequence[Edgepath], u: Fraction) -> Fraction:
    total = ZERO
    for p in paths:
        h = p.height_at(u)
        if h is None:  # pragma: no cover - u in [0, 1] always meets an extended path
            raise ValueError(f"{p.name} does not reach u={u}")
        total += h
    return total


def type_i_roots(system: EdgepathSystem) -> list[Fraction]:
    """Roots ``u0`` in ``(0, 1)`` of the summed height of the extended paths."""
    ext = [_extended(p) for p in system.paths]
    breaks = sorted({v.u for p in ext for v in p.vertices()} | {ZERO, ONE})
    roots: set[Fraction] = set()
    for a, b in zip(breaks, breaks[1:]):
        fa, fb = _sum_height(ext, a), _sum_height(ext, b)
        if fa == 0 and fb == 0:
            raise ValueError(f"{system}: summed height vanishes on [{a}, {b}]")
        if fa == 0:
            roots.add(a)
        if fb == 0:
            roots.add(b)
        if (fa < 0 < fb) or (fb < 0 < fa):
            roots.add(a + (b - a) * fa / (fa - fb))
    return sorted(r for r in roots if 0 < r < 1)


def _truncate(path: Edgepath, u0: Fraction) -> tuple[Edgepath, Fraction | None]:
    """Part of the extended path with ``u >= u0``; the partial fraction if any."""
    s = path.start
    h = DiagramVertex.horizontal(s.p, s.q)
    edges: list[Edge] = [Edge(EdgeKind.HORIZONTAL, h, s)]
    if u0 > s.u:
        return Edgepath((), path.name + "(const)"), None
    for e in path.edges:
        if e.end.u >= u0:
            edges.append(e)
            if e.end.u == u0:
                return Edgepath(tuple(edges), path.name), None
            continue
        # cut inside e: left vertex q-value, right vertex s-value
        q_left, s_right = e.end.q, e.start.q
        t = (1 / (1 - u0) - s_right) / (q_left - s_right)
        edges.append(Edge(EdgeKind.PARTIAL, e.start, e.end, t))
        return Edgepath(tuple(edges), path.name), t
    raise ValueError(f"{path.name} ends before u={u0}")  # pragma: no cover


def complete_type_i(systems: Sequence[EdgepathSystem]) -> list[EdgepathSystem]:
    """Type I systems of every basic system, one per root."""
    out = []
    for sys_ in systems:
        for u0 in type_i_roots(sys_):
            paths = []
            dens = [1]
            for p in sys_.paths:
                tp, t = _truncate(p, u0)
                paths.append(tp)
                if t is not None:
                    dens.append(t.denominator)
            out.append(
                EdgepathSystem(tuple(paths), SystemType.I, sys_.basic_index, lcm(*dens), u0)
            )
    return out


# Type II ------------------------------------------------------------------------------------


def _vertical(v: DiagramVertex, direction: int) -> Edge:
    return Edge(EdgeKind.VERTICAL, v, DiagramVertex.interior(v.p + direction), ONE)


def _with_verticals(path: Edgepath, direction: int, k: int) -> Edgepath:
    extra = []
    v = path.end
    for _ in range(k):
        e = _vertical(v, direction)
        extra.append(e)
        v = e.end
    return path.with_edges(extra, ("+" if direction > 0 else "-") * k)


def _accepts(path: Edgepath, direction: int) -> bool:
    try:
        check_path(_with_verticals(path, direction, 1))
    except ValueError:
        return False
    return True


def type_ii_placements(system: EdgepathSystem) -> Iterator[EdgepathSystem]:
    """Every way to add the minimal number of vertical edges."""
    need = -sum(p.end.v for p in system.paths)
    if need.denominator != 1:  # pragma: no cover - integer endpoints
        return
    k = abs(int(need))
    direction = 1 if need > 0 else -1
    ok = [i for i, p in enumerate(system.paths) if k == 0 or _accepts(p, direction)]
    for counts in _compositions(k, len(ok)):
        paths = list(system.paths)
        for i, c in zip(ok, counts):
            if c:
                paths[i] = _with_verticals(paths[i], direction, c)
        yield EdgepathSystem(tuple(paths), SystemType.II, system.basic_index)


def _compositions(k: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, parts - 1):
            yield (first,) + rest


def complete_type_ii(systems: Sequence[EdgepathSystem]) -> list[EdgepathSystem]:
    """Canonical Type II completion: verticals go on the first path that accepts them.

    Every alternative placement is built too, and the canonical one is
    returned only after checking that ``e`` and ``b1`` do not depend on
    the placement.  Basic systems that admit no placement are skipped.
    """
    out = []
    for sys_ in systems:
        options = list(type_ii_placements(sys_))
        if not options:
            continue
        vals = {(twist(s), euler_characteristic(s)) for s in options}
        if len(vals) != 1:  # pragma: no cover - would contradict the theory
            raise AssertionError(f"{sys_}: placements disagree: {vals}")
        out.append(options[0])
    return out


# Type III -----------------------------------------------------------------------------------


def complete_type_iii(systems: Sequence[EdgepathSystem]) -> list[EdgepathSystem]:
    inf = DiagramVertex.infinity()
    out = []
    for sys_ in systems:
        paths = tuple(p.with_edges([Edge(EdgeKind.INFINITY, p.end, inf, ONE)]) for p in sys_.paths)
        out.append(EdgepathSystem(paths, SystemType.III, sys_.basic_index))
    return out


# quantities ---------------------------------------------------------------------------------


def edge_sign(e: Edge) -> int:
    return e.sign


def length(system: EdgepathSystem) -> Fraction:
    return sum((p.length for p in system.paths), ZERO)


def twist(system: EdgepathSystem) -> Fraction:
    return sum((p.twist for p in system.paths), ZERO)


def euler_characteristic(system: EdgepathSystem) -> Fraction:
    lam = length(system)
    if system.type is SystemType.I:
        n = len(system.paths)
        assert system.u0 is not None
        per_sheet = -lam + n - Fraction(n - 2) / (1 - system.u0)
        return per_sheet * system.sheets
    if system.type is SystemType.II:
        return 2 - lam
    if system.type is SystemType.III:
        return -lam
    raise ValueError("basic systems have no Euler characteristic")


def betti(system: EdgepathSystem) -> Fraction:
    return 1 - euler_characteristic(system)


def seifert_system(params: Sequence[int]) -> EdgepathSystem:
    """The all-sigma Type II system, which carries the Seifert surface."""
    basic = enumerate_basic_systems(params)[0]
    return complete_type_ii([basic])[0]


def normal_euler(system: EdgepathSystem, reference: EdgepathSystem) -> Fraction:
    """``tau(Lambda_S) - tau(Lambda)``."""
    return twist(reference) - twist(system)


# candidate table ----------------------------------------------------------------------------


@dataclass(frozen=True)
class CandidateSurface:
    system: EdgepathSystem
    chi: Fraction
    b1: Fraction
    e: Fraction
    gamma_plus: Fraction
    gamma_minus: Fraction
    note: str = field(default="", compare=False)
    gamma_minus_reported: Fraction | None = None

    @property
    def label(self) -> str:
        return self.system.label if self.system.type is not SystemType.I else "I"

    @property
    def gamma_minus_conservative(self) -> Fraction:
        """The smaller of the computed and reported ``Gamma-``."""
        if self.gamma_minus_reported is None:
            return self.gamma_minus
        return min(self.gamma_minus, self.gamma_minus_reported)


def _is_slice_family(params: Sequence[int]) -> int | None:
    if len(params) == 3 and params[0] == -3 and params[1] == 3 and params[2] >= 3:
        return params[2]
    return None


def candidate_table(params: Sequence[int], sigma: int = 0) -> list[CandidateSurface]:
    """Type I, II and III candidates in the order I, II_0.., III_0..

    For ``P(-3, 3, n)`` the Type I row also carries the closed form
    ``(n+2)/2 - 4/(n+1)`` for ``Gamma-`` that the literature states; it
    differs by 1/2 from ``b1 - sigma + e/2`` and is kept alongside.

    Raises:
        BadParameter: unless every parameter is odd with ``|p| >= 3`` and
            there are at least three tangles.
    """
    _check_params(params)
    if len(params) < 3:
        raise BadParameter("need at least three tangles")
    basic = enumerate_basic_systems(params)
    ref = seifert_system(params)
    systems = complete_type_i(basic) + complete_type_ii(basic) + complete_type_iii(basic)
    n = _is_slice_family(params)
    rows = []
    for s in systems:
        for p in s.paths:
            if p.edges:
                check_path(p)
        chi = euler_characteristic(s)
        e = normal_euler(s, ref)
        g = gamma((e, 1 - chi), sigma)
        reported = None
        note = ""
        if s.type is SystemType.I and n is not None:
            reported = Fraction(n + 2, 2) - Fraction(4, n + 1)
            note = "reported Gamma- differs from b1 - sigma + e/2 by 1/2"
        rows.append(CandidateSurface(s, chi, 1 - chi, e, g.gamma_plus, g.gamma_minus, note, reported))
    return rows


def candidate_lower_bounds(rows: Sequence[CandidateSurface]) -> GammaPair:
    """Lower bounds on ``gamma_hat+-`` from a complete candidate list.

    Every spanning surface lies in the rational wedge of some candidate, so
    its ``Gamma+-`` is at least the candidate minimum; ``Gamma+-`` of an
    actual surface is an integer, so the minimum is rounded up.  For
    ``Gamma-`` the conservative (smaller) value of each row is used.

    Raises:
        EmptyInput: if ``rows`` is empty.
    """
    if not rows:
        raise EmptyInput("no candidate surfaces")
    lo_plus = min(r.gamma_plus for r in rows)
    lo_minus = min(r.gamma_minus_conservative for r in rows)
    return GammaPair(Fraction(ceil(lo_plus)), Fraction(ceil(lo_minus)))


def _fmt(x: Fraction | None) -> int | str | None:
    if x is None:
        return None
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def table_rows(rows: Sequence[CandidateSurface]) -> list[dict]:
    out = []
    for r in rows:
        d = {
            "system": r.label,
            "paths": str(r.system),
            "e": _fmt(r.e),
            "b1": _fmt(r.b1),
            "gamma_plus": _fmt(r.gamma_plus),
            "gamma_minus": _fmt(r.gamma_minus),
        }
        if r.system.type is SystemType.I:
            d["u0"] = _fmt(r.system.u0)
            d["sheets"] = r.system.sheets
        if r.gamma_minus_reported is not None:
            d["gamma_minus_reported"] = _fmt(r.gamma_minus_reported)
            d["note"] = r.note
        out.append(d)
    return out


def table_json(rows: Sequence[CandidateSurface]) -> str:
    return json.dumps(table_rows(rows))


def table_csv(rows: Sequence[CandidateSurface]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["system", "e", "b1", "gamma_plus", "gamma_minus"])
    for d in table_rows(rows):
        w.writerow([d["system"], d["e"], d["b1"], d["gamma_plus"], d["gamma_minus"]])
    return buf.getvalue()
