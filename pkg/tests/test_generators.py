"""
Unit tests for the seeded generators.

Tests the random content used by the lemma suite including:
- Reproducibility from a seed
- Unitarity of the sampled unitaries and bases
- Normalization of sampled states and teleportation scalars
"""

import logging
import pytest
import sys
import os

# Add the project root directory to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from abstract_qm import is_preparation
from exceptions import UnsupportedOperationError
from generators import (
    SMALL_SHAPES,
    TINY_SHAPES,
    make_rng,
    permutation_entries,
    random_basis_unitary,
    random_morphism,
    random_permutation,
    random_scalar,
    random_shape,
    random_teleportation_scalar,
    random_unit_state,
    random_unitary,
)
from matrix_morphisms import Morphism, is_unitary
from scalar_rings import BOOLEAN, COMPLEX_ROOT_TWO
from shape_category import I, Q, Tensor, copies


def test_same_seed_same_content(semiring):
    first, second = make_rng(7), make_rng(7)
    for _ in range(5):
        shape = random_shape(first)
        assert shape == random_shape(second)
        assert random_morphism(first, shape, Q, semiring) == random_morphism(second, shape, Q, semiring)


def test_seeding_is_logged(caplog):
    caplog.set_level(logging.DEBUG, logger="generators")
    make_rng([3, 1])
    assert "seeding generator with [3, 1]" in caplog.text


def test_random_scalars_come_from_the_pool(rng, semiring):
    pool = semiring.sample_pool()
    for _ in range(20):
        assert random_scalar(rng, semiring) in pool


def test_tiny_shapes_are_small():
    assert all(shape.dim <= 3 for shape in TINY_SHAPES)
    assert set(TINY_SHAPES) <= set(SMALL_SHAPES)


def test_permutation_entries(field):
    rows = permutation_entries([1, 2, 0], field)
    # basis element 0 goes to 1
    assert rows[1][0] == field.one
    assert rows[0][0] == field.zero
    assert is_unitary(Morphism(copies(3, I), copies(3, I), rows, field))


@pytest.mark.parametrize("shape", SMALL_SHAPES, ids=str)
def test_random_unitaries_are_unitary(shape, semiring):
    rng = make_rng(11)
    for _ in range(5):
        assert is_unitary(random_unitary(rng, shape, semiring=semiring))
        assert is_unitary(random_permutation(rng, shape, semiring=semiring))


def test_random_unitary_between_shapes(rng, field):
    u = random_unitary(rng, Tensor(Q, Q), copies(4, I), field)
    assert u.dom == Tensor(Q, Q)
    assert u.cod == copies(4, I)
    assert is_unitary(u)


def test_random_unit_states_are_preparations(rng, semiring):
    for shape in SMALL_SHAPES:
        assert is_preparation(random_unit_state(rng, shape, semiring))


def test_random_basis_unitary(rng, field):
    base = random_basis_unitary(rng, Tensor(Q, Q), field)
    assert base.dom == copies(4, I)
    assert is_unitary(base)


def test_random_teleportation_scalar(rng, field):
    two = field.from_int(2)
    for _ in range(10):
        s = random_teleportation_scalar(rng, field)
        assert two * s.conj() * s == field.one


def test_random_teleportation_scalar_needs_the_field(rng):
    with pytest.raises(UnsupportedOperationError):
        random_teleportation_scalar(rng, BOOLEAN)
