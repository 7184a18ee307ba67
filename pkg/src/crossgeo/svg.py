"""Deterministic SVG pictures of geography regions.

The normal Euler number ``e`` runs to the right and the first Betti number
``b`` runs up, one lattice unit per 20 px.  Only parity-valid lattice
points (``e = 2b mod 4``) are drawn.  Generating surfaces are solid dots,
even when another wedge dominates them; "notable" points (e.g. an
orientable Seifert surface, which only contributes through its twisted
copies) are open dots.  The boundary of ``W_sigma`` is dashed.

Output is byte-identical for identical input; the only line that depends
on the library version is the leading generator comment.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from xml.sax.saxutils import escape

from crossgeo import __version__
from crossgeo.geography import GeographyRegion

UNIT = 20
MARGIN = 40


def _frame(points: Sequence[tuple[int, int]]) -> tuple[int, int, int]:
    es = [e for e, _ in points] or [0]
    bs = [b for _, b in points] or [0]
    top = max(bs) + 3
    lo = min(es) - 2 * (top - min(bs))
    hi = max(es) + 2 * (top - min(bs))
    # keep the picture a reasonable width while showing every wedge's sides
    lo, hi = max(lo, min(es) - 8), min(hi, max(es) + 8)
    return lo, hi, top


def render_geography(
    region: GeographyRegion,
    sigma: int | None = None,
    notable: Iterable[tuple[int, int]] = (),
    title: str | None = None,
) -> str:
    """SVG document for ``region``."""
    apexes = region.apex_points()
    solid = sorted(set(region.generators) | set(apexes))
    extra = sorted(set(notable) - set(solid))
    anchor = [(2 * sigma, 0)] if sigma is not None else []
    lo, hi, top = _frame(solid + extra + anchor)
    width = (hi - lo) * UNIT + 2 * MARGIN
    height = top * UNIT + 2 * MARGIN

    def x(e: float) -> str:
        return f"{MARGIN + (e - lo) * UNIT:.1f}"

    def y(b: float) -> str:
        return f"{MARGIN + (top - b) * UNIT:.1f}"

    out = [
        f"<!-- generator: crossgeo {__version__} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{MARGIN}" y="{MARGIN // 2}" font-family="sans-serif" '
            f'font-size="12">{escape(title)}</text>'
        )
    out.append('<g stroke="#e6e6e6" stroke-width="1">')
    for e in range(lo, hi + 1):
        out.append(f'<line x1="{x(e)}" y1="{y(0)}" x2="{x(e)}" y2="{y(top)}"/>')
    for b in range(0, top + 1):
        out.append(f'<line x1="{x(lo)}" y1="{y(b)}" x2="{x(hi)}" y2="{y(b)}"/>')
    out.append("</g>")
    out.append('<g stroke="black" stroke-width="1.5">')
    out.append(f'<line x1="{x(lo)}" y1="{y(0)}" x2="{x(hi)}" y2="{y(0)}"/>')
    if lo <= 0 <= hi:
        out.append(f'<line x1="{x(0)}" y1="{y(0)}" x2="{x(0)}" y2="{y(top)}"/>')
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="10" fill="#555">')
    out.append(f'<text x="{x(hi)}" y="{float(y(0)) + 14:.1f}" text-anchor="end">e</text>')
    out.append(f'<text x="{float(x(lo)) - 14:.1f}" y="{y(top)}">b</text>')
    for e in range(lo, hi + 1):
        if e % 4 == 0:
            out.append(
                f'<text x="{x(e)}" y="{float(y(0)) + 14:.1f}" text-anchor="middle">{e}</text>'
            )
    out.append("</g>")
    # lattice points of the region
    out.append('<g fill="#9ab">')
    for b in range(0, top + 1):
        for e in range(lo, hi + 1):
            if (e - 2 * b) % 4 == 0 and region.contains(e, b):
                out.append(f'<circle cx="{x(e)}" cy="{y(b)}" r="2"/>')
    out.append("</g>")
    # wedge sides from every apex
    out.append('<g stroke="#35a" stroke-width="1.5" fill="none">')
    for e0, b0 in apexes:
        for side in (lo, hi):
            b1 = b0 + abs(side - e0) / 2
            if b1 > top:
                side = e0 + (2 * (top - b0) if side > e0 else -2 * (top - b0))
                b1 = top
            out.append(f'<line x1="{x(e0)}" y1="{y(b0)}" x2="{x(side)}" y2="{y(b1)}"/>')
    out.append("</g>")
    if sigma is not None:
        e0 = 2 * sigma
        out.append('<g stroke="#c33" stroke-width="1" stroke-dasharray="4 3" fill="none">')
        for side in (e0 - 2 * top, e0 + 2 * top):
            out.append(f'<line x1="{x(e0)}" y1="{y(0)}" x2="{x(side)}" y2="{y(top)}"/>')
        out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="10">')
    for e0, b0 in solid:
        out.append(f'<circle cx="{x(e0)}" cy="{y(b0)}" r="4" fill="black"/>')
        out.append(f'<text x="{float(x(e0)) + 6:.1f}" y="{float(y(b0)) + 12:.1f}">({e0},{b0})</text>')
    for e0, b0 in extra:
        out.append(
            f'<circle cx="{x(e0)}" cy="{y(b0)}" r="4" fill="white" stroke="black" stroke-width="1.5"/>'
        )
        out.append(f'<text x="{float(x(e0)) + 6:.1f}" y="{float(y(b0)) + 12:.1f}">({e0},{b0})</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
