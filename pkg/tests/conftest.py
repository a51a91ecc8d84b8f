"""Shared fixtures: the worked algebras used across the suite."""

import pytest

from lsakit.algebra import Algebra


@pytest.fixture
def lsa_rsa_2dim():
    # x.x = 0, x.y = 0, y.x = -x, y.y = x - y  (dim 2, both-symmetric,
    # non-associative: (y,y,y) = x)
    return Algebra(
        "lsa-rsa-2dim",
        2,
        {(2, 1): {1: -1}, (2, 2): {1: 1, 2: -1}},
    )


@pytest.fixture
def rad_not_right_ideal():
    # Dim-4 left-symmetric algebra whose Koszul radical span{e1} is not a
    # right ideal; solvable non-nilpotent commutator Lie algebra.
    return Algebra(
        "radical-not-right-ideal",
        4,
        {
            (1, 3): {3: 1},
            (1, 4): {4: -1},
            (2, 2): {2: 2},
            (2, 3): {3: 1},
            (2, 4): {4: 1},
            (3, 4): {2: 1},
            (4, 3): {2: 1},
        },
    )


@pytest.fixture
def dim2_simple():
    # x.x = 2x, x.y = y, y.x = 0, y.y = x
    return Algebra(
        "dim2-simple",
        2,
        {(1, 1): {1: 2}, (1, 2): {2: 1}, (2, 2): {1: 1}},
    )
