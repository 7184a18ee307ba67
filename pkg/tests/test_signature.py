from __future__ import annotations

import json

import pytest
from oracles import numpy_signature

from crossgeo.diagram import BLACK, WHITE, KnotDiagram, connected_sum, parse_pd, pretzel_diagram, torus_diagram
from crossgeo.errors import NotAlternating, NotReduced, Undefined
from crossgeo.signature import (
    checkerboard_state,
    gl_checkerboard_form,
    goeritz_signature,
    pretzel_gap_signature,
    signature_report,
    traczyk_signature,
)
from crossgeo.states import state_surface

POS_TREFOIL = parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")
NEG_TREFOIL = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")


def test_trefoil_goeritz_matrices():
    white = gl_checkerboard_form(POS_TREFOIL, WHITE)
    black = gl_checkerboard_form(POS_TREFOIL, BLACK)
    assert {white.dim, black.dim} == {1, 2}
    assert white.sigma_k == black.sigma_k == -2
    two = white if white.dim == 2 else black
    assert two.matrix == ((-2, 1), (1, -2))


def test_correction_is_minus_half_euler():
    for d in (POS_TREFOIL, pretzel_diagram((1, 1, 3)), torus_diagram(4, 3), pretzel_diagram((-3, 3, 5))):
        for col in (WHITE, BLACK):
            g = gl_checkerboard_form(d, col)
            assert g.correction == -g.euler // 2
            assert g.euler == state_surface(checkerboard_state(d, col)).e


def test_both_colors_agree():
    for d in (torus_diagram(5, 3), pretzel_diagram((-5, 1, -2, 3, -3)), pretzel_diagram((-3, 3, 7))):
        assert gl_checkerboard_form(d, WHITE).sigma_k == gl_checkerboard_form(d, BLACK).sigma_k


def test_numpy_cross_check():
    for d in (torus_diagram(4, 3), pretzel_diagram((-9, 3, -4, 3, -3))):
        g = gl_checkerboard_form(d)
        assert numpy_signature(g.matrix) == g.sigma_f


@pytest.mark.parametrize(
    "d,sigma",
    [
        (POS_TREFOIL, -2),
        (NEG_TREFOIL, 2),
        (pretzel_diagram((1, 1, 3)), 2),
        (torus_diagram(4, 3), -6),
        (torus_diagram(5, 2), -4),
        (torus_diagram(6, 5), -16),
        (pretzel_diagram((-3, 3, 3)), 0),
        (pretzel_diagram((-3, 3, 5)), 0),
        (parse_pd(""), 0),
    ],
    ids=lambda v: getattr(v, "label", None) or str(v),
)
def test_known_signatures(d, sigma):
    assert goeritz_signature(d) == sigma


def test_mirror_and_sum():
    d = pretzel_diagram((1, 1, 3))
    assert goeritz_signature(d.mirror()) == -goeritz_signature(d)
    assert goeritz_signature(connected_sum(POS_TREFOIL, d)) == 0


def test_traczyk():
    assert traczyk_signature(POS_TREFOIL) == -2
    assert traczyk_signature(pretzel_diagram((1, 1, 3))) == 2
    assert traczyk_signature(torus_diagram(7, 2)) == -6
    with pytest.raises(NotAlternating):
        traczyk_signature(torus_diagram(4, 3))
    curl = KnotDiagram.from_tuples([(1, 2, 2, 1)])
    with pytest.raises(NotReduced):
        traczyk_signature(curl)


@pytest.mark.parametrize("k,r,expected", [(5, 1, 2), (9, 1, 6), (5, 3, 2), (9, 3, 6), (15, 3, 10), (3, 1, 0)])
def test_pretzel_gap_signature(k, r, expected):
    assert pretzel_gap_signature(k, r) == expected
    assert goeritz_signature(pretzel_diagram((-k, r, -r - 1))) == expected


def test_pretzel_gap_signature_errors():
    with pytest.raises(Undefined):
        pretzel_gap_signature(6, 2)
    with pytest.raises(ValueError):
        pretzel_gap_signature(4, 1)


def test_report():
    rep = json.loads(signature_report(POS_TREFOIL))
    assert rep["sigma"] == -2 and rep["method"] == "goeritz"
