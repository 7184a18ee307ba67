"""Geography of surfaces in the ``(e, b)`` plane.

A surface with normal Euler number ``e`` and first Betti number ``b``
generates the wedge ``W_(e,b)``: every lattice point ``(e', b')`` with
``|e' - e| / 2 <= b' - b`` and ``e' = 2b' (mod 4)``.  Adding ``k`` twisted
bands of one sign moves a surface along a boundary ray of its wedge, so a
geography is a union of wedges and is stored by its apexes.

The Euler-normalized Betti numbers ``Gamma+-(F) = b1 +- (sigma - e/2)``
are constant along those rays.  Their minima over all surfaces are the
invariants ``gamma_hat+-`` of the knot; this module computes minima over
whatever surfaces it is given and labels the result as exact, an upper
bound, or a lower bound.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from crossgeo.diagram import (
    KnotDiagram,
    band_moves,
    is_alternating,
    is_reduced,
    pretzel_bottom_connector,
    pretzel_diagram,
)
from crossgeo.errors import (
    BadParameter,
    EmptyInput,
    MissingInvariant,
    NotAlternating,
    NotReduced,
)
from crossgeo.states import (
    Provenance,
    SurfacePoint,
    add_twisted_band,
    all_a,
    all_b,
    enumerate_states,
    state_surface,
)

Number = int | Fraction

EXACT = "exact"
UPPER = "upper"
LOWER = "lower"


@dataclass(frozen=True, order=True)
class Wedge:
    """Integer wedge with apex ``(apex_e, apex_b)``."""

    apex_e: int
    apex_b: int

    def __post_init__(self) -> None:
        if (self.apex_e - 2 * self.apex_b) % 4:
            raise ValueError(f"apex ({self.apex_e},{self.apex_b}) violates e = 2b mod 4")

    def contains(self, e: int, b: int) -> bool:
        return (e - 2 * b) % 4 == 0 and abs(e - self.apex_e) <= 2 * (b - self.apex_b)

    def __contains__(self, point: tuple[int, int]) -> bool:
        return self.contains(*point)

    @property
    def apex(self) -> tuple[int, int]:
        return (self.apex_e, self.apex_b)


@dataclass(frozen=True)
class RationalWedge:
    """Rational wedge ``|e - u| <= 2(b - v)`` (no parity condition)."""

    apex_u: Fraction
    apex_v: Fraction

    def contains(self, e: Number, b: Number) -> bool:
        return abs(Fraction(e) - self.apex_u) <= 2 * (Fraction(b) - self.apex_v)


@dataclass(frozen=True)
class GammaPair:
    gamma_plus: Fraction
    gamma_minus: Fraction

    def __add__(self, other: GammaPair) -> GammaPair:
        return GammaPair(self.gamma_plus + other.gamma_plus, self.gamma_minus + other.gamma_minus)

    @property
    def average(self) -> Fraction:
        """``gamma_bar = (gamma_hat+ + gamma_hat-) / 2``."""
        return (self.gamma_plus + self.gamma_minus) / 2

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.gamma_plus, self.gamma_minus)


def normalize(points: Iterable[tuple[int, int]]) -> frozenset[Wedge]:
    """Apexes not contained in the wedge of another point."""
    ws = {Wedge(e, b) for e, b in points}
    return frozenset(w for w in ws if not any(v != w and v.contains(*w.apex) for v in ws))


@dataclass(frozen=True)
class GeographyRegion:
    """A union of wedges, kept as its normalized apex set.

    ``generators`` preserves the points the region was built from, before
    normalization discarded the dominated ones.
    """

    apexes: frozenset[Wedge]
    generators: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @classmethod
    def from_points(cls, points: Iterable[tuple[int, int]]) -> GeographyRegion:
        pts = tuple(sorted(set(points)))
        return cls(normalize(pts), pts)

    def normalized(self) -> GeographyRegion:
        return GeographyRegion(normalize(w.apex for w in self.apexes), self.generators)

    def contains(self, e: int, b: int) -> bool:
        return any(w.contains(e, b) for w in self.apexes)

    def apex_points(self) -> list[tuple[int, int]]:
        return sorted(w.apex for w in self.apexes)


# Gamma -----------------------------------------------------------------------------------


def _eb(p: SurfacePoint | tuple[Number, Number]) -> tuple[Fraction, Fraction]:
    if isinstance(p, SurfacePoint):
        return Fraction(p.e), Fraction(p.b1)
    return Fraction(p[0]), Fraction(p[1])


def gamma(p: SurfacePoint | tuple[Number, Number], sigma: Number) -> GammaPair:
    """``Gamma+ = b1 + sigma - e/2`` and ``Gamma- = b1 - sigma + e/2``."""
    e, b = _eb(p)
    s = Fraction(sigma)
    return GammaPair(b + s - e / 2, b - s + e / 2)


def gamma_invariance_under_twist(
    p: SurfacePoint, sign: int | str, sigma: int, ks: Iterable[int] = range(1, 6)
) -> Fraction:
    """Check that ``Gamma^sign`` is unchanged by ``k`` twisted bands of that sign.

    Returns the common value.

    Raises:
        AssertionError: if any ``k`` changes it.
    """
    plus = sign in (1, "+", "plus")
    base = gamma(p, sigma)
    want = base.gamma_plus if plus else base.gamma_minus
    for k in ks:
        g = gamma(add_twisted_band(p, sign, k), sigma)
        got = g.gamma_plus if plus else g.gamma_minus
        assert got == want, f"Gamma changed from {want} to {got} at k={k}"
    return want


def gamma_hat_from_surfaces(
    surfaces: Sequence[SurfacePoint | tuple[Number, Number]], sigma: Number
) -> GammaPair:
    """Minimum of ``Gamma+`` and of ``Gamma-`` over the given surfaces."""
    if not surfaces:
        raise EmptyInput("no surfaces given")
    gs = [gamma(p, sigma) for p in surfaces]
    return GammaPair(min(g.gamma_plus for g in gs), min(g.gamma_minus for g in gs))


def rational_wedge_bound(candidates: Sequence[tuple[Number, Number]], sigma: Number) -> GammaPair:
    """Minimum ``Gamma+-`` over candidate surfaces with rational ``(e, b1)``.

    When the candidates include every incompressible, boundary-
    incompressible surface, every spanning surface lies in a rational wedge
    of some candidate, so the minima bound ``gamma_hat+-`` from below.
    """
    return gamma_hat_from_surfaces(candidates, sigma)


def gamma3_from_region(r: GeographyRegion) -> int:
    """Lowest apex height of a region."""
    if not r.apexes:
        raise EmptyInput("empty region")
    return min(w.apex_b for w in r.apexes)


def connected_sum_gamma(g1: GammaPair, g2: GammaPair) -> GammaPair:
    return g1 + g2


# geography of diagrams ----------------------------------------------------------------------


@dataclass(frozen=True)
class StateGeography:
    """Region generated by the basic state surfaces of a diagram.

    For a reduced alternating diagram the region is the full 3-dimensional
    geography (``bound_kind == "exact"``).  Otherwise it only contains
    realized surfaces, so its minima are upper bounds.
    """

    region: GeographyRegion
    surfaces: tuple[SurfacePoint, ...]
    bound_kind: str

    def gamma_hat(self, sigma: int) -> GammaPair:
        return gamma_hat_from_surfaces(self.surfaces, sigma)


def _generating_points(d: KnotDiagram) -> list[SurfacePoint]:
    out: list[SurfacePoint] = []
    for s in enumerate_states(d, basic_only=True):
        p = state_surface(s).point
        if p.orientable:
            out.append(add_twisted_band(p, "+"))
            out.append(add_twisted_band(p, "-"))
        else:
            out.append(p)
    return out


def state_geography(d: KnotDiagram) -> StateGeography:
    """Wedges of the basic state surfaces, with orientable ones twisted."""
    pts = _generating_points(d)
    exact = is_alternating(d) and is_reduced(d)
    region = GeographyRegion.from_points(p.pair for p in pts)
    return StateGeography(region, tuple(pts), EXACT if exact else UPPER)


def alternating_region(d: KnotDiagram) -> GeographyRegion:
    """3-dimensional geography of a reduced alternating diagram.

    Raises:
        NotAlternating: if ``d`` is not alternating.
        NotReduced: if ``d`` has a nugatory crossing.
    """
    if not is_alternating(d):
        raise NotAlternating(f"{d.label or 'diagram'} is not alternating")
    if not is_reduced(d):
        raise NotReduced(f"{d.label or 'diagram'} has a nugatory crossing")
    return state_geography(d).region


# Turaev genus of a diagram ------------------------------------------------------------------


def turaev_genus_diagram(d: KnotDiagram) -> int:
    """``(c + 2 - |s_A| - |s_B|) / 2``."""
    if d.c == 0:
        return 0
    return (d.c + 2 - all_a(d).n_circles - all_b(d).n_circles) // 2


def turaev_from_gamma(d: KnotDiagram, sigma: int) -> Fraction:
    """``(Gamma+(F_A) + Gamma-(F_B)) / 2``, which equals the Turaev genus of ``d``."""
    fa = state_surface(all_a(d)).point
    fb = state_surface(all_b(d)).point
    return (gamma(fa, sigma).gamma_plus + gamma(fb, sigma).gamma_minus) / 2


# band-move fillings -----------------------------------------------------------------------


@dataclass(frozen=True)
class BandStep:
    """One flat band move in a scripted filling.

    ``euler`` is ``wri(after) - wri(before)``: read as a cobordism from the
    result up to the diagram it was cut from.  ``caps`` counts the split
    unknots capped off by disks after the move.
    """

    diagram: str
    edges: tuple[int, int]
    orientable: bool
    components: int
    euler: int
    caps: int


@dataclass(frozen=True)
class BandFilling:
    """A filling assembled from flat band moves ending at a crossingless unknot."""

    steps: tuple[BandStep, ...]

    @property
    def e(self) -> int:
        return sum(s.euler for s in self.steps)

    @property
    def b1(self) -> int:
        # one disk for the final unknot, one per capped component, minus a band each
        chi = 1 + sum(s.caps for s in self.steps) - len(self.steps)
        return 1 - chi

    @property
    def point(self) -> SurfacePoint:
        orientable = all(s.orientable for s in self.steps)
        return SurfacePoint(self.e, self.b1, orientable, Provenance.BAND.value)


def _pair_band(params: tuple[int, ...], orientable: bool) -> BandStep:
    """Band below the last two columns, from the arc entering them to the arc leaving them."""
    n = len(params)
    d = pretzel_diagram(params)
    e1 = pretzel_bottom_connector(params, n - 3)
    e2 = pretzel_bottom_connector(params, n - 1)
    for res in band_moves(d, e1, e2):
        if res.orientable == orientable:
            caps = res.components - 1
            return BandStep(d.label or "", (e1, e2), orientable, res.components, res.euler(d), caps)
    raise BadParameter(f"no planar band between edges {e1} and {e2} of {d.label}")  # pragma: no cover


def pretzel_gap_filling(k: int, r: int, pairs: Sequence[int] = ()) -> BandFilling:
    """Mobius-band filling of ``P(-k, r, -r-1, p_1, -p_1, ...)``.

    Each ``(p, -p)`` pair is removed by an orientable band that splits off
    an unknot, leaving ``P(-k, r, -r-1)``; one non-orientable band then
    turns that into an unknot.  The normal Euler number of the result is
    ``2(k - r - 1)``.

    Raises:
        BadParameter: unless ``k``, ``r`` and every ``p`` are odd and positive.
    """
    if any(v <= 0 or v % 2 == 0 for v in (k, r, *pairs)):
        raise BadParameter("k, r and the pair parameters must be odd and positive")
    params: tuple[int, ...] = (-k, r, -r - 1) + tuple(x for p in pairs for x in (p, -p))
    steps = []
    while len(params) > 3:
        steps.append(_pair_band(params, orientable=True))
        params = params[:-2]
    steps.append(_pair_band(params, orientable=False))
    return BandFilling(tuple(steps))


# slice-torus bounds -------------------------------------------------------------------------


def _need(value: int | None, name: str) -> int:
    if value is None:
        raise MissingInvariant(f"{name} is required")
    return value


def gl_wedge(sigma: int) -> Wedge:
    """``W_sigma``: apex ``(2 sigma, 0)``."""
    return Wedge(2 * _need(sigma, "sigma"), 0)


def upsilon_wedge(upsilon: int | None) -> Wedge:
    """``W_upsilon``: apex ``(4 upsilon, 0)``."""
    return Wedge(4 * _need(upsilon, "upsilon"), 0)


def oss_sg_bounds(sigma: int | None, upsilon: int | None) -> tuple[int, int]:
    """Lower bounds ``(max(sigma - 2 upsilon, 0), max(2 upsilon - sigma, 0))`` on ``gamma_hat+-``."""
    s = _need(sigma, "sigma")
    u = _need(upsilon, "upsilon")
    return max(s - 2 * u, 0), max(2 * u - s, 0)


def oss_gamma4_bound(sigma: int | None, upsilon: int | None) -> Fraction:
    """``|upsilon - sigma/2|``, a lower bound on the non-orientable 4-genus."""
    s = _need(sigma, "sigma")
    u = _need(upsilon, "upsilon")
    return abs(Fraction(u) - Fraction(s, 2))


# reports ----------------------------------------------------------------------------------------


def _num(x: Fraction | int) -> int | str:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def geography_report(
    region: GeographyRegion, gamma_hat: GammaPair | None, bound_kind: str
) -> dict:
    return {
        "apexes": [list(p) for p in region.apex_points()],
        "generators": [list(p) for p in region.generators],
        "gamma3": gamma3_from_region(region),
        "gamma_hat_plus": None if gamma_hat is None else _num(gamma_hat.gamma_plus),
        "gamma_hat_minus": None if gamma_hat is None else _num(gamma_hat.gamma_minus),
        "bound_kind": bound_kind,
    }


def geography_json(region: GeographyRegion, gamma_hat: GammaPair | None, bound_kind: str) -> str:
    return json.dumps(geography_report(region, gamma_hat, bound_kind))
