from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import numpy_signature

from crossgeo.linalg import inertia, signature


def test_definite():
    assert inertia([[2, 1], [1, 2]]) == (2, 0, 0)
    assert inertia([[-2, 1], [1, -2]]) == (0, 2, 0)


def test_hyperbolic_block_without_diagonal_pivot():
    assert inertia([[0, 3], [3, 0]]) == (1, 1, 0)
    assert inertia([[0, 1, 0], [1, 0, 0], [0, 0, 0]]) == (1, 1, 1)


def test_empty():
    assert inertia([]) == (0, 0, 0)
    assert signature([]) == 0


def test_fractions():
    assert signature([[Fraction(1, 2), 0], [0, Fraction(-1, 3)]]) == 0


def test_rejects_non_symmetric():
    with pytest.raises(ValueError):
        inertia([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        inertia([[1, 2]])


@st.composite
def symmetric(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    vals = st.integers(-3, 3)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(vals)
    return m


@settings(max_examples=150, deadline=None)
@given(symmetric())
def test_signature_agrees_with_eigenvalues(m):
    pos, neg, zero = inertia(m)
    assert pos + neg + zero == len(m)
    assert pos - neg == numpy_signature(m)
