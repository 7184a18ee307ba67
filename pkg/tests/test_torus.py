from __future__ import annotations

import json

import pytest

from crossgeo.errors import BadParameter, NotCoprime, OddProduct
from crossgeo.torus import (
    is_unknot,
    pinch_report,
    pinch_sequence,
    pinch_step,
    pinch_surface_3,
    pinch_surface_4,
)


def test_pinch_step_t43():
    assert pinch_step(4, 3) == (2, 1)


def test_sequences():
    assert pinch_sequence(4, 3).steps == ((4, 3), (2, 1), (0, 1))
    seq = pinch_sequence(3, 2)
    assert seq.first_unknot == seq.steps[seq.first_unknot_index]
    assert is_unknot(*seq.steps[-1])


@pytest.mark.parametrize(
    "p,q,f3,f4",
    [
        (4, 3, (-12, 2), (-10, 1)),
        (3, 2, (-6, 1), (-6, 1)),
        (2, 1, (-2, 1), (0, 0)),
    ],
)
def test_surfaces(p, q, f3, f4):
    assert pinch_surface_3(p, q).pair == f3
    assert pinch_surface_4(p, q).pair == f4


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_family(k):
    f4 = pinch_surface_4(2 * k, 2 * k - 1)
    assert f4.b1 == k - 1
    assert f4.e == -4 * k * k + 2 * k + 2


def test_errors():
    with pytest.raises(NotCoprime):
        pinch_step(6, 4)
    with pytest.raises(OddProduct):
        pinch_step(5, 3)
    with pytest.raises(BadParameter):
        pinch_step(2, 1)
    with pytest.raises(BadParameter):
        pinch_sequence(-4, 3)


def test_report():
    rep = json.loads(pinch_report(4, 3))
    assert rep == {
        "sequence": [[4, 3], [2, 1], [0, 1]],
        "f3": {"e": -12, "b1": 2},
        "f4": {"e": -10, "b1": 1},
    }


def test_surfaces_obey_parity():
    for p, q in [(4, 3), (6, 5), (8, 7), (5, 2), (7, 4), (9, 2)]:
        for s in (pinch_surface_3(p, q), pinch_surface_4(p, q)):
            assert (s.e - 2 * s.b1) % 4 == 0
