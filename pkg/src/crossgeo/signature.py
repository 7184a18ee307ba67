"""Knot signature from Goeritz matrices, with two independent cross-checks.

The Goeritz matrix of a checkerboard surface ``F`` is its Gordon–Litherland
form.  It is indexed by the complementary faces (the other color) with one
face dropped.  A crossing between complementary faces ``i`` and ``j``
contributes ``-eta`` to entry ``(i, j)``, where ``eta`` is ``+1`` when the
surface uses the B-resolution there and ``-1`` for the A-resolution.
Diagonal entries make every row of the full matrix sum to zero.

The knot signature is then ``sigma(F) + e(F)/2``.  The correction
``mu = -e(F)/2`` equals the sum of ``eta`` over the crossings where the
surface's resolution is not the oriented one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from crossgeo.diagram import BLACK, WHITE, KnotDiagram, is_alternating, is_reduced, writhe
from crossgeo.errors import NotAlternating, NotReduced, Undefined
from crossgeo.linalg import signature as matrix_signature
from crossgeo.states import State, all_a, all_b, seifert_mask, state_surface


@dataclass(frozen=True)
class GoeritzData:
    """Gordon–Litherland data of one checkerboard surface."""

    color: str
    matrix: tuple[tuple[int, ...], ...]
    correction: int
    sigma_f: int
    euler: int

    @property
    def sigma_k(self) -> int:
        return self.sigma_f - self.correction

    @property
    def dim(self) -> int:
        return len(self.matrix)


def checkerboard_state(d: KnotDiagram, color: str) -> State:
    """The state whose surface is the checkerboard surface of ``color``.

    Disks of the white surface sit in the corners that the A-resolution
    keeps apart (corners 0 and 2 of a crossing).
    """
    if color not in (WHITE, BLACK):
        raise ValueError(f"color must be {WHITE!r} or {BLACK!r}")
    cols = d.face_colors
    mask = 0
    for x in range(d.c):
        if cols[d.corner_face(x, 0)] != color:
            mask |= 1 << x
    return State(d, mask)


def gl_checkerboard_form(d: KnotDiagram, color: str = WHITE) -> GoeritzData:
    """Goeritz matrix, correction and signatures for one checkerboard surface."""
    state = checkerboard_state(d, color)
    cols = d.face_colors
    other = [f for f in range(len(cols)) if cols[f] != color]
    pos = {f: k for k, f in enumerate(other)}
    n = len(other)
    full = [[0] * n for _ in range(n)]
    seif = seifert_mask(d)
    mu = 0
    for x in range(d.c):
        b = state.is_b(x)
        eta = 1 if b else -1
        # complementary corners: B keeps corners 1, 3 apart; A keeps 0, 2 apart
        i, j = (1, 3) if not b else (0, 2)
        fi, fj = pos[d.corner_face(x, i)], pos[d.corner_face(x, j)]
        if fi != fj:
            full[fi][fj] -= eta
            full[fj][fi] -= eta
        if bool(seif >> x & 1) != b:
            mu += eta
    for i in range(n):
        full[i][i] = -sum(full[i][j] for j in range(n) if j != i)
    g = tuple(tuple(row[1:]) for row in full[1:])
    e = state_surface(state).e
    return GoeritzData(color, g, mu, matrix_signature(g), e)


def goeritz_signature(d: KnotDiagram) -> int:
    """``sigma(K)`` via the white checkerboard surface."""
    if d.c == 0:
        return 0
    return gl_checkerboard_form(d, WHITE).sigma_k


def traczyk_signature(d: KnotDiagram) -> int:
    """``(-wri + |s_A| - |s_B|) / 2`` for reduced alternating diagrams.

    Raises:
        NotAlternating: if the diagram is not alternating.
        NotReduced: if it has a nugatory crossing.
    """
    if not is_alternating(d):
        raise NotAlternating(f"{d.label or 'diagram'} is not alternating")
    if not is_reduced(d):
        raise NotReduced(f"{d.label or 'diagram'} has a nugatory crossing")
    val = -writhe(d) + all_a(d).n_circles - all_b(d).n_circles
    return val // 2


def pretzel_gap_signature(k: int, r: int) -> int:
    """Closed form for ``P(-k, r, -r-1)`` with ``k, r`` odd and positive.

    Raises:
        Undefined: at ``k == r(r+1)``, where no branch applies.
        ValueError: unless ``k`` and ``r`` are odd and positive.
    """
    if k == r * (r + 1):
        raise Undefined("k = r(r+1) is excluded")
    if k <= 0 or r <= 0 or k % 2 == 0 or r % 2 == 0:
        raise ValueError("k and r must be odd positive integers")
    return k - r if k < r * (r + 1) else k - r - 2


def signature_report(d: KnotDiagram) -> str:
    data = gl_checkerboard_form(d, WHITE) if d.c else None
    return json.dumps(
        {
            "sigma": goeritz_signature(d),
            "method": "goeritz",
            "goeritz_dim": data.dim if data else 0,
            "correction": data.correction if data else 0,
        }
    )
