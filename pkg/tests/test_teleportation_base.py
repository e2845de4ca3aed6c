"""
Unit tests for teleportation bases.

Tests the base constructions including:
- The Bell base and its equations
- The sign matrix under both vectorization readings
- Random bases and validation failures
"""

import pytest
import sys
import os

# Add the project root directory to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from abstract_qm import entanglement_projector, nondestructive_measurement
from exceptions import NotUnitaryError, ShapeMismatchError, UnsupportedOperationError
from generators import make_rng
from matrix_morphisms import (
    adjoint,
    compose,
    from_rows,
    identity,
    is_self_adjoint,
    is_unitary,
    negate,
    scalar_action,
)
from scalar_rings import BOOLEAN
from shape_category import Dual, I, Q, Tensor, copies
from teleportation_base import (
    PREBASE_COD,
    PREBASE_DOM,
    BellBase,
    TeleportationBase,
    bell_matrices,
    make_bell_base,
    make_matrix_base,
    prebase_from_betas,
    random_base,
    sigma_q,
)


def test_bell_betas(bell_base, field):
    expected = bell_matrices(field)
    assert list(bell_base.betas) == expected
    assert bell_base.beta(1) == identity(Q, field)
    assert bell_base.beta(4) == from_rows(Q, Q, [[0, -1], [1, 0]], field)
    assert bell_base.label == "bell"


def test_bell_equations(bell_base, field):
    flip = sigma_q(field)
    assert flip == from_rows(Q, Q, [[0, 1], [1, 0]], field)
    assert bell_base.beta(2) == flip
    assert is_self_adjoint(bell_base.beta(3))
    assert bell_base.beta(4) == compose(flip, bell_base.beta(3))


def test_bell_corrections_invert_the_betas(bell_base, field):
    for correction, beta in zip(bell_base.bell_corrections(), bell_base.betas):
        assert compose(correction, beta) == identity(Q, field)
    assert bell_base.corrections() == [adjoint(beta) for beta in bell_base.betas]


def test_base_is_unitary(bell_base, field):
    two = field.from_int(2)
    assert two * bell_base.weight == field.one
    assert is_unitary(bell_base.base)
    assert bell_base.base.dom == PREBASE_DOM
    assert bell_base.base.cod == PREBASE_COD


def test_gamma_acts_on_duals(bell_base):
    gamma = bell_base.gamma(4)
    assert gamma.dom == Dual(Q)
    assert gamma.cod == Dual(Q)
    assert is_unitary(gamma)


def test_observation_projectors_are_the_entanglement_projectors(bell_base):
    sd = bell_base.observation_decomposition()
    assert sd.shape == Tensor(Q, Dual(Q))
    assert sd.non_degenerate
    # the observation effects are conames; their projectors are weighted ⌜γᵢ⌝∘⌞γᵢ_*⌟ transported to Q ⊗ Q*
    assert len(sd.projectors) == 4
    for projector, gamma in zip(sd.projectors, (bell_base.gamma(i) for i in range(1, 5))):
        expected = entanglement_projector(gamma, bell_base.weight)
        assert projector.rows == expected.rows
    assert nondestructive_measurement(sd).dom == Tensor(Q, Dual(Q))


def test_domain_major_matrix_base_is_bell(field):
    base = make_matrix_base("domain-major", field)
    assert isinstance(base, BellBase)
    assert list(base.betas) == bell_matrices(field)


def test_codomain_major_matrix_base_negates_beta4(field):
    base = make_matrix_base("codomain-major", field)
    assert not isinstance(base, BellBase)
    bells = bell_matrices(field)
    assert list(base.betas[:3]) == bells[:3]
    assert base.beta(4) == negate(bells[3])


def test_unknown_reading(field):
    with pytest.raises(ValueError):
        make_matrix_base("diagonal", field)


def test_random_bases_validate(field):
    rng = make_rng(5)
    for _ in range(10):
        base = random_base(rng, field)
        assert base.label == "random"
        assert all(is_unitary(beta) for beta in base.betas)


def test_random_bases_are_reproducible(field):
    first = random_base(make_rng(9), field)
    second = random_base(make_rng(9), field)
    assert first.prebase == second.prebase
    assert first.s == second.s


def test_prebase_shape_is_checked(field):
    with pytest.raises(ShapeMismatchError):
        TeleportationBase(field.teleportation_scalar(), identity(Q, field))


def test_validation_rejects_wrong_scalar(field):
    prebase = prebase_from_betas(bell_matrices(field))
    with pytest.raises(NotUnitaryError):
        TeleportationBase(field.one, prebase).validate()


def test_validation_rejects_non_unitary_betas(field):
    betas = bell_matrices(field)
    betas[0] = from_rows(Q, Q, [[1, 0], [0, 0]], field)
    with pytest.raises(NotUnitaryError):
        TeleportationBase(field.teleportation_scalar(), prebase_from_betas(betas)).validate()


def test_validation_rejects_broken_bell_equations(field):
    i = field.i
    betas = [scalar_action(i, beta) for beta in bell_matrices(field)]
    base = BellBase(field.teleportation_scalar(), prebase_from_betas(betas), "phased")
    # still a teleportation base, but β1 is no longer the identity
    TeleportationBase.validate(base)
    with pytest.raises(NotUnitaryError):
        base.validate()


def test_no_bell_base_over_booleans():
    with pytest.raises(UnsupportedOperationError):
        make_bell_base(BOOLEAN)


def test_prebase_domain():
    assert PREBASE_DOM == copies(4, I)
