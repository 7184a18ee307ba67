"""Pinch moves on torus knots and the resulting pinch surfaces.

A pinch move is a non-orientable band move taking ``T(p, q)`` to
``T(r, s)`` with ``r = |p - 2t|`` and ``s = |q - 2h|``, where
``t = -q^-1 mod p`` and ``h = p^-1 mod q`` are taken in ``[1, p)`` and
``[1, q)``.  Pairs are kept in the order the formulas produce them.

``F_3(p, q)`` pinches all the way down to the meridian ``T(0, 1)`` and caps
it with a disk: one band per pinch, and normal Euler number ``-pq``.
``F_4(p, q)`` stops at the first unknot ``T(r, 1)`` and caps it off in the
4-ball, giving normal Euler number ``r - pq``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from crossgeo.errors import BadParameter, NotCoprime, OddProduct
from crossgeo.states import Provenance, SurfacePoint

Pair = tuple[int, int]


def _check(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise BadParameter("torus parameters must be nonnegative")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p},{q}) = {gcd(p, q)}")
    if (p * q) % 2:
        raise OddProduct(f"pq = {p * q} is odd")


def is_unknot(p: int, q: int) -> bool:
    return min(p, q) <= 1


def pinch_step(p: int, q: int) -> Pair:
    """One pinch move ``T(p, q) -> T(r, s)``.

    Raises:
        NotCoprime: if ``gcd(p, q) != 1``.
        OddProduct: if ``pq`` is odd.
        BadParameter: unless ``p, q >= 2``.
    """
    _check(p, q)
    if p < 2 or q < 2:
        raise BadParameter("pinch_step needs p, q >= 2")
    t = (-pow(q, -1, p)) % p
    h = pow(p, -1, q)
    return abs(p - 2 * t), abs(q - 2 * h)


@dataclass(frozen=True)
class PinchSequence:
    """Torus knots visited from ``(p, q)`` down to the meridian."""

    steps: tuple[Pair, ...]
    first_unknot_index: int

    @property
    def first_unknot(self) -> Pair:
        return self.steps[self.first_unknot_index]

    @property
    def total_pinches(self) -> int:
        return len(self.steps) - 1


def pinch_sequence(p: int, q: int) -> PinchSequence:
    """Pinch until an unknot appears, then shrink ``T(k, 1)`` by 2 to ``T(0, 1)``."""
    _check(p, q)
    steps = [(p, q)]
    while not is_unknot(*steps[-1]):
        steps.append(pinch_step(*steps[-1]))
    first = len(steps) - 1
    a, b = steps[-1]
    # T(k,1) with k even: further pinches reduce k by 2
    while (a, b) not in ((0, 1), (1, 0)):
        if b == 1:
            a -= 2
        else:
            b -= 2
        steps.append((a, b))
    return PinchSequence(tuple(steps), first)


def pinch_surface_3(p: int, q: int) -> SurfacePoint:
    """``F_3(p, q)``: ``b1`` = number of pinches, ``e = -pq``."""
    seq = pinch_sequence(p, q)
    return SurfacePoint(-p * q, seq.total_pinches, False, Provenance.PINCH.value)


def pinch_surface_4(p: int, q: int) -> SurfacePoint:
    """``F_4(p, q)``: pinches to the first ``T(r, 1)``, ``e = r - pq``."""
    seq = pinch_sequence(p, q)
    a, b = seq.first_unknot
    r = a if b == 1 else b
    b1 = seq.first_unknot_index
    return SurfacePoint(r - p * q, b1, b1 == 0, Provenance.PINCH.value)


def pinch_report(p: int, q: int) -> str:
    seq = pinch_sequence(p, q)
    f3 = pinch_surface_3(p, q)
    f4 = pinch_surface_4(p, q)
    return json.dumps(
        {
            "sequence": [list(s) for s in seq.steps],
            "f3": {"e": f3.e, "b1": f3.b1},
            "f4": {"e": f4.e, "b1": f4.b1},
        }
    )
