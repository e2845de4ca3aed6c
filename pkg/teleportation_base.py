"""
Teleportation Base Module

A teleportation base is a scalar s with 2s†s = 1 together with a morphism
prebase : 4·I -> Q* ⊗ Q such that s•prebase is unitary and each unnamed
column βⱼ is unitary. This module provides the Bell base, the bases read off
the 4×4 sign matrix under both vectorization readings, and seeded random
bases, all validated on construction.

Classes:
    TeleportationBase: Scalar plus prebase, with the derived βⱼ
    BellBase: A teleportation base satisfying the Bell equations
"""

import logging
from typing import List, Sequence

import numpy as np

from abstract_qm import SpectralDecomposition, computational_basis, make_spectral
from exceptions import NotUnitaryError, ShapeMismatchError
from generators import random_choice, random_teleportation_scalar, random_unitary
from matrix_morphisms import (
    Morphism,
    adjoint,
    compose,
    coname,
    conj_star,
    cotuple_of,
    from_rows,
    identity,
    injection,
    is_self_adjoint,
    is_unitary,
    name,
    scalar_action,
    structural_iso,
    tuple_of,
    unname,
)
from scalar_rings import COMPLEX_ROOT_TWO, Semiring
from shape_category import Dual, I, Q, Tensor, copies

logger = logging.getLogger(__name__)

PREBASE_DOM = copies(4, I)
PREBASE_COD = Tensor(Dual(Q), Q)

# Columns are the vectorized β₁..β₄.
SIGN_MATRIX = [
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [0, 1, 0, -1],
    [1, 0, -1, 0],
]

VECTORIZATION_READINGS = ("domain-major", "codomain-major")


class TeleportationBase:
    """
    A scalar s with a prebase 4·I -> Q* ⊗ Q.

    Attributes:
        s: The scalar s
        prebase (Morphism): The prebase
        label (str): Identifier used in reports
        semiring (Semiring): Semiring of the entries
        betas (tuple): βⱼ = unname(prebase∘qⱼ), j = 1..4 stored 0-based
    """

    def __init__(self, s, prebase: Morphism, label: str = "custom"):
        if prebase.dom != PREBASE_DOM or prebase.cod != PREBASE_COD:
            raise ShapeMismatchError(
                f"A prebase has type {PREBASE_DOM} -> {PREBASE_COD}, got {prebase.dom} -> {prebase.cod}"
            )
        self.s = s
        self.prebase = prebase
        self.label = label
        self.semiring = prebase.semiring
        parts = [I] * 4
        self.betas = tuple(
            unname(compose(prebase, injection(j, parts, self.semiring))) for j in range(4)
        )

    @property
    def base(self) -> Morphism:
        """base_T = s•prebase_T."""
        return scalar_action(self.s, self.prebase)

    @property
    def weight(self):
        """s†s, the weight every teleportation branch carries."""
        return self.s.conj() * self.s

    def beta(self, i: int) -> Morphism:
        """βᵢ for i = 1..4."""
        return self.betas[i - 1]

    def corrections(self) -> List[Morphism]:
        """βᵢ⁻¹ = βᵢ† for each branch."""
        return [adjoint(beta) for beta in self.betas]

    def observation(self) -> Morphism:
        """⟨s†•⌞βᵢ⌟⟩ᵢ : Q ⊗ Q* -> 4·I."""
        s_dagger = self.s.conj()
        return tuple_of([scalar_action(s_dagger, coname(beta)) for beta in self.betas])

    def observation_decomposition(self) -> SpectralDecomposition:
        return make_spectral(self.observation(), [I] * 4, f"{self.label}-observation")

    def validate(self) -> "TeleportationBase":
        """
        Check every defining condition of a teleportation base.

        Returns:
            TeleportationBase: self, for chaining

        Raises:
            NotUnitaryError: If 2s†s ≠ 1, s•prebase is not unitary or some βⱼ is not unitary
        """
        two = self.semiring.from_int(2)
        if two * self.weight != self.semiring.one:
            raise NotUnitaryError(f"{self.label}: 2s†s = {self.semiring.render(two * self.weight)}, not 1")
        if not is_unitary(self.base):
            raise NotUnitaryError(f"{self.label}: s•prebase is not unitary")
        for j, beta in enumerate(self.betas, start=1):
            if not is_unitary(beta):
                raise NotUnitaryError(f"{self.label}: β{j} is not unitary")
        logger.debug("teleportation base %s validated", self.label)
        return self


def sigma_q(semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """σ⊕_Q = base_Q∘σ⊕∘base_Q⁻¹, the bit flip."""
    base_q = computational_basis(Q, semiring).unitary
    swap = structural_iso("sigma_biproduct", I, I, semiring=semiring)
    return compose(base_q, swap, adjoint(base_q))


class BellBase(TeleportationBase):
    """
    A teleportation base with β₁ = 1, β₂ = σ⊕_Q, β₃ = β₃† and β₄ = σ⊕_Q∘β₃.
    """

    @property
    def sigma_q(self) -> Morphism:
        return sigma_q(self.semiring)

    def gamma(self, i: int) -> Morphism:
        """γᵢ = (βᵢ)_* : Q* -> Q*."""
        return conj_star(self.beta(i))

    def bell_corrections(self) -> List[Morphism]:
        """β₁, β₂, β₃ are self-inverse and β₄⁻¹ = β₃∘σ⊕_Q."""
        return [self.beta(1), self.beta(2), self.beta(3), compose(self.beta(3), self.sigma_q)]

    def validate(self) -> "BellBase":
        """
        Check the teleportation base conditions and the Bell equations.

        Raises:
            NotUnitaryError: If any condition fails
        """
        super().validate()
        flip = self.sigma_q
        equations = {
            "β1 = 1": self.beta(1) == identity(Q, self.semiring),
            "β2 = σ⊕": self.beta(2) == flip,
            "β3 = β3†": is_self_adjoint(self.beta(3)),
            "β4 = σ⊕∘β3": self.beta(4) == compose(flip, self.beta(3)),
        }
        failed = [equation for equation, holds in equations.items() if not holds]
        if failed:
            raise NotUnitaryError(f"{self.label}: Bell equations fail: {', '.join(failed)}")
        return self


def bell_matrices(semiring: Semiring = COMPLEX_ROOT_TWO) -> List[Morphism]:
    """β₁ = 1, β₂ = [[0,1],[1,0]], β₃ = [[1,0],[0,−1]], β₄ = [[0,−1],[1,0]]."""
    return [
        from_rows(Q, Q, rows, semiring)
        for rows in (
            [[1, 0], [0, 1]],
            [[0, 1], [1, 0]],
            [[1, 0], [0, -1]],
            [[0, -1], [1, 0]],
        )
    ]


def prebase_from_betas(betas: Sequence[Morphism]) -> Morphism:
    """Assemble [⌜β₁⌝, ..., ⌜β₄⌝] : 4·I -> Q* ⊗ Q."""
    return cotuple_of([name(beta) for beta in betas])


def make_bell_base(semiring: Semiring = COMPLEX_ROOT_TWO) -> BellBase:
    """
    The Bell base with s = √2/2.

    Raises:
        UnsupportedOperationError: If the semiring has no s with 2s†s = 1 or no −1
    """
    s = semiring.teleportation_scalar()
    return BellBase(s, prebase_from_betas(bell_matrices(semiring)), "bell").validate()


def make_matrix_base(reading: str = "domain-major", semiring: Semiring = COMPLEX_ROOT_TWO) -> TeleportationBase:
    """
    The base prebase = base_{Q*⊗Q}∘M for the 4×4 sign matrix M.

    Args:
        reading (str): ``domain-major`` takes each column of M as the name
            vectorization used throughout this package (the Bell base);
            ``codomain-major`` reads each column transposed, giving −β₄ as
            the fourth morphism
        semiring (Semiring): Semiring of the entries

    Returns:
        TeleportationBase: The validated base

    Raises:
        ValueError: If the reading is unknown
    """
    if reading not in VECTORIZATION_READINGS:
        raise ValueError(f"Unknown vectorization reading {reading!r}; use one of {VECTORIZATION_READINGS}")
    s = semiring.teleportation_scalar()
    rows = SIGN_MATRIX if reading == "domain-major" else [SIGN_MATRIX[k] for k in (0, 2, 1, 3)]
    m = from_rows(PREBASE_DOM, PREBASE_DOM, rows, semiring)
    base = computational_basis(PREBASE_COD, semiring).unitary
    prebase = compose(base, m)
    if reading == "domain-major":
        return BellBase(s, prebase, f"matrix-{reading}").validate()
    return TeleportationBase(s, prebase, f"matrix-{reading}").validate()


def random_base(rng: np.random.Generator, semiring: Semiring = COMPLEX_ROOT_TWO) -> TeleportationBase:
    """
    A random teleportation base: βⱼ' = phaseⱼ · U∘β_{π(j)}∘W.

    U and W are random unitaries from the test subgroup, π a random
    permutation, the phases range over {±1, ±i} and s over {±√2/2, ±i√2/2}.
    """
    s = random_teleportation_scalar(rng, semiring)
    u = random_unitary(rng, Q, semiring=semiring)
    w = random_unitary(rng, Q, semiring=semiring)
    order = [int(k) for k in rng.permutation(4)]
    minus = semiring.minus_one()
    phases = [semiring.one, minus, semiring.i, minus * semiring.i]
    bells = bell_matrices(semiring)
    betas = [
        scalar_action(random_choice(rng, phases), compose(u, bells[k], w)) for k in order
    ]
    return TeleportationBase(s, prebase_from_betas(betas), "random").validate()
