"""
Abstract Quantum Mechanics Module

This module builds the quantum vocabulary on top of the matrix category:
spectral decompositions and their projectors, non-destructive measurements,
observations, preparations, the Born rule, bases and the two notions of
dimension, entanglement projectors and classically controlled corrections.

Classes:
    SpectralDecomposition: A unitary A -> ⊕Aᵢ with its derived ψⱼ, πⱼ and Pⱼ
    Basis: A unitary n·I -> A
    BornOutcome: Amplitude and probability of one measurement branch
    BornRuleVerifier: Verifier emitting Born rule reports
    DimensionVerifier: Verifier emitting both dimensions of a shape
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from base_verifier import BaseVerifier
from exceptions import (
    NotAPreparationError,
    NotUnitaryError,
    ShapeMismatchError,
    UnsupportedOperationError,
)
from matrix_morphisms import (
    Morphism,
    adjoint,
    compose,
    copies_of,
    coname,
    conj_star,
    direct_sum_morphisms,
    epsilon,
    eta,
    identity,
    inner_product,
    injection,
    inverse_iso,
    is_unitary,
    name,
    projection,
    scalar_action,
    scalar_of,
    structural_iso,
    tensor,
    trace,
    tuple_of,
)
from scalar_rings import COMPLEX_ROOT_TWO, Semiring
from shape_category import Dual, I, Q, Shape, copies, direct_sum, render_shape

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralDecomposition:
    """
    A spectral decomposition U : A -> ⊕ᵢAᵢ with every derived morphism materialized.

    Attributes:
        unitary (Morphism): The unitary U
        parts (Tuple[Shape, ...]): The summands Aᵢ in injection order
        psis (Tuple[Morphism, ...]): ψⱼ = U†∘qⱼ : Aⱼ -> A
        pis (Tuple[Morphism, ...]): πⱼ = pⱼ∘U : A -> Aⱼ
        projectors (Tuple[Morphism, ...]): Pⱼ = ψⱼ∘πⱼ : A -> A
        label (str): Identifier used in reports
    """

    unitary: Morphism
    parts: Tuple[Shape, ...]
    psis: Tuple[Morphism, ...]
    pis: Tuple[Morphism, ...]
    projectors: Tuple[Morphism, ...]
    label: str = "custom"

    @property
    def shape(self) -> Shape:
        return self.unitary.dom

    @property
    def semiring(self) -> Semiring:
        return self.unitary.semiring

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def non_degenerate(self) -> bool:
        """True when every summand is I, so the measurement has the form A -> n·I."""
        return all(part == I for part in self.parts)


def make_spectral(unitary: Morphism, parts: Sequence[Shape], label: str = "custom") -> SpectralDecomposition:
    """
    Build a spectral decomposition from a unitary onto a biproduct.

    Args:
        unitary (Morphism): U : A -> A₁ ⊕ ... ⊕ Aₙ
        parts (Sequence[Shape]): The summands Aᵢ
        label (str): Identifier used in reports

    Returns:
        SpectralDecomposition: With ψⱼ, πⱼ and Pⱼ computed for every branch

    Raises:
        ShapeMismatchError: If the codomain of U is not the biproduct of parts
        NotUnitaryError: If U is not unitary
    """
    parts = tuple(parts)
    if unitary.cod != direct_sum(parts):
        raise ShapeMismatchError(
            f"Spectral decomposition codomain {unitary.cod} is not {direct_sum(parts)}"
        )
    if not is_unitary(unitary):
        raise NotUnitaryError(f"Spectral decomposition {label!r} is not unitary")

    semiring = unitary.semiring
    u_dagger = adjoint(unitary)
    psis = tuple(compose(u_dagger, injection(j, parts, semiring)) for j in range(len(parts)))
    pis = tuple(compose(projection(j, parts, semiring), unitary) for j in range(len(parts)))
    projectors = tuple(compose(psi, pi) for psi, pi in zip(psis, pis))
    logger.debug("spectral decomposition %s over %s with %d branches", label, unitary.dom, len(parts))
    return SpectralDecomposition(unitary, parts, psis, pis, projectors, label)


def standard_measurement(shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> SpectralDecomposition:
    """Measurement in the computational basis of A, as A -> dim(A)·I."""
    return make_spectral(adjoint(computational_basis(shape, semiring).unitary), [I] * shape.dim, "standard")


def hadamard_measurement(semiring: Semiring = COMPLEX_ROOT_TWO) -> SpectralDecomposition:
    """Measurement of a qubit in the basis s•(1, 1), s•(1, −1)."""
    s = semiring.teleportation_scalar()
    minus = semiring.minus_one()
    unitary = Morphism(Q, copies(2, I), [[s, s], [s, minus * s]], semiring)
    return make_spectral(unitary, [I, I], "hadamard")


def nondestructive_measurement(sd: SpectralDecomposition) -> Morphism:
    """⟨Pᵢ⟩ : A -> n·A."""
    return tuple_of(sd.projectors)


def observation(sd: SpectralDecomposition) -> Morphism:
    """
    ⟨πᵢ⟩ : A -> n·I for a non-degenerate decomposition.

    Raises:
        UnsupportedOperationError: If some summand is not I
    """
    if not sd.non_degenerate:
        raise UnsupportedOperationError(
            f"Destructive measurement of {sd.label!r} is degenerate: summands {list(map(str, sd.parts))}"
        )
    return tuple_of(sd.pis)


def is_preparation(psi: Morphism) -> bool:
    """True iff ψ : I -> A has ⟨ψ|ψ⟩ = 1."""
    if psi.dom != I:
        return False
    return inner_product(psi, psi) == psi.semiring.one


def branch_amplitudes(sd: SpectralDecomposition, psi: Morphism) -> List:
    """
    The scalars πⱼ∘ψ of a non-degenerate decomposition.

    Raises:
        UnsupportedOperationError: If the decomposition is degenerate
    """
    if not sd.non_degenerate:
        raise UnsupportedOperationError(f"Amplitudes need a non-degenerate decomposition, got {sd.label!r}")
    return [scalar_of(compose(pi, psi)) for pi in sd.pis]


@dataclass(frozen=True)
class BornOutcome:
    """One branch of a Born rule evaluation; amplitude is None for degenerate branches."""

    index: int
    amplitude: Optional[object]
    probability: object


def born_outcomes(sd: SpectralDecomposition, psi: Morphism) -> List[BornOutcome]:
    """
    Evaluate Prob(Pⱼ, ψ) = ψ†∘Pⱼ∘ψ for every branch.

    For non-degenerate decompositions the probability is also computed as
    conj(sⱼ)·sⱼ from the amplitude sⱼ = πⱼ∘ψ and the two routes are checked
    to agree.

    Args:
        sd (SpectralDecomposition): The measurement
        psi (Morphism): A preparation I -> A

    Returns:
        List[BornOutcome]: One outcome per branch, in injection order

    Raises:
        ShapeMismatchError: If psi does not live in the decomposed object
        NotAPreparationError: If ⟨ψ|ψ⟩ ≠ 1
    """
    if psi.dom != I or psi.cod != sd.shape:
        raise ShapeMismatchError(f"State {psi.dom} -> {psi.cod} is not a state of {sd.shape}")
    if not is_preparation(psi):
        raise NotAPreparationError(
            f"⟨ψ|ψ⟩ = {sd.semiring.render(inner_product(psi, psi))}, not 1"
        )

    psi_dagger = adjoint(psi)
    outcomes = []
    for j, projector in enumerate(sd.projectors):
        probability = scalar_of(compose(psi_dagger, projector, psi))
        amplitude = None
        if sd.parts[j] == I:
            amplitude = scalar_of(compose(sd.pis[j], psi))
            if amplitude.conj() * amplitude != probability:
                raise ArithmeticError(f"Branch {j + 1} of {sd.label!r}: amplitude and projector routes disagree")
        outcomes.append(BornOutcome(j + 1, amplitude, probability))
    return outcomes


def born(sd: SpectralDecomposition, psi: Morphism) -> List:
    """Prob(Pⱼ, ψ) for every branch of sd."""
    return [outcome.probability for outcome in born_outcomes(sd, psi)]


class Basis:
    """
    A basis for A: a unitary base : n·I -> A with n = dim(A).

    Attributes:
        unitary (Morphism): The unitary n·I -> A
    """

    def __init__(self, unitary: Morphism):
        n = unitary.cod.dim
        if unitary.dom != copies(n, I):
            raise ShapeMismatchError(f"A basis of {unitary.cod} must start at {n}·I, got {unitary.dom}")
        if not is_unitary(unitary):
            raise NotUnitaryError(f"Basis of {unitary.cod} is not unitary")
        self.unitary = unitary

    @property
    def shape(self) -> Shape:
        return self.unitary.cod

    @property
    def n(self) -> int:
        return self.unitary.dom.dim

    def vector(self, i: int) -> Morphism:
        """The i-th base vector base∘qᵢ : I -> A (0-based)."""
        return compose(self.unitary, injection(i, [I] * self.n, self.unitary.semiring))


def computational_basis(shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> Basis:
    n = shape.dim
    rows = [[semiring.one if r == c else semiring.zero for c in range(n)] for r in range(n)]
    return Basis(Morphism(copies(n, I), shape, rows, semiring))


def base_tensor(base_a: Basis, base_b: Basis) -> Basis:
    """(base_A ⊗ base_B)∘d_nm⁻¹ : (nm)·I -> A ⊗ B."""
    semiring = base_a.unitary.semiring
    d_nm = structural_iso("d_nm", base_a.n, base_b.n, semiring=semiring)
    return Basis(compose(tensor(base_a.unitary, base_b.unitary), inverse_iso(d_nm)))


def matrix_in_bases(f: Morphism, base_a: Basis, base_b: Basis) -> Morphism:
    """The matrix of f : A -> B in the given bases, base_B†∘f∘base_A : n·I -> m·I."""
    return compose(adjoint(base_b.unitary), f, base_a.unitary)


def dim_scalar(shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO):
    """dim_s(A) = ε_A∘σ_{A*,A}∘η_A."""
    sigma = structural_iso("sigma_tensor", Dual(shape), shape, semiring=semiring)
    return scalar_of(compose(epsilon(shape, semiring), sigma, eta(shape, semiring)))


def dim_int(shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> int:
    """The n of a basis n·I -> A; the computational basis always exists."""
    return computational_basis(shape, semiring).n


def entanglement_projector(f: Morphism, weight=None) -> Morphism:
    """
    P_f = ⌜f⌝∘⌞f_*⌟ : A* ⊗ B -> A* ⊗ B, optionally scaled by weight.

    Args:
        f (Morphism): f : A -> B
        weight: Scalar multiplying the result, e.g. s†s for a unitary f

    Returns:
        Morphism: The entanglement projector
    """
    projector = compose(name(f), coname(conj_star(f)))
    return projector if weight is None else scalar_action(weight, projector)


def _basis_states(shape: Shape, semiring: Semiring) -> List[Morphism]:
    return [computational_basis(shape, semiring).vector(i) for i in range(shape.dim)]


def preserves_inner_product(u: Morphism) -> bool:
    """True iff ⟨Ueᵢ|Ueⱼ⟩ = ⟨eᵢ|eⱼ⟩ for every pair of computational basis states."""
    states = _basis_states(u.dom, u.semiring)
    return all(
        inner_product(compose(u, x), compose(u, y)) == inner_product(x, y)
        for x in states
        for y in states
    )


def adjoint_by_inner_product(f: Morphism, g: Morphism) -> bool:
    """True iff ⟨g∘ψ|φ⟩ = ⟨ψ|f∘φ⟩ on all basis pairs, i.e. g is the adjoint of f."""
    if g.dom != f.cod or g.cod != f.dom:
        return False
    return all(
        inner_product(compose(g, psi), phi) == inner_product(psi, compose(f, phi))
        for psi in _basis_states(f.cod, f.semiring)
        for phi in _basis_states(f.dom, f.semiring)
    )


def communicate_and_act(corrections: Sequence[Morphism]) -> Morphism:
    """
    Classical communication followed by a branch-dependent unitary.

    Distributes the n outcomes over the carried system and applies Uᵢ on
    branch i: (⊕Uᵢ)∘(⊕λ⁻¹)∘υ : (n·I) ⊗ A -> n·A.

    Raises:
        ShapeMismatchError: If the corrections act on different shapes
    """
    corrections = list(corrections)
    shape = corrections[0].dom
    semiring = corrections[0].semiring
    n = len(corrections)
    upsilon = structural_iso("upsilon_right", [I] * n, shape, semiring=semiring)
    unlambda = copies_of(n, inverse_iso(structural_iso("lambda", shape, semiring=semiring)))
    return compose(direct_sum_morphisms(corrections), unlambda, upsilon)


class BornRuleVerifier(BaseVerifier):
    """
    Evaluates the Born rule for one (measurement, preparation) pair.

    Attributes:
        decomposition (SpectralDecomposition): The measurement
        state (Morphism): The prepared state
    """

    def __init__(self, decomposition: SpectralDecomposition, state: Morphism):
        super().__init__("born")
        self.decomposition = decomposition
        self.state = state

    def generate_report(self) -> Dict:
        """
        Build the Born rule report.

        Returns:
            Dict: {"decomposition", "semiring", "branches": [{"index",
                "amplitude", "probability"}], "total", "ok"}
        """
        semiring = self.decomposition.semiring
        outcomes = born_outcomes(self.decomposition, self.state)
        total = semiring.zero
        for outcome in outcomes:
            total = total + outcome.probability
        self_adjoint = all(o.probability.conj() == o.probability for o in outcomes)
        return {
            "name": self.name,
            "decomposition": self.decomposition.label,
            "semiring": semiring.name,
            "branches": [
                {
                    "index": o.index,
                    "amplitude": None if o.amplitude is None else semiring.render(o.amplitude),
                    "probability": semiring.render(o.probability),
                }
                for o in outcomes
            ],
            "total": semiring.render(total),
            "ok": self_adjoint and total == semiring.one,
        }


class DimensionVerifier(BaseVerifier):
    """
    Reports both dimensions of a shape: the basis size and the scalar ε∘σ∘η.

    Attributes:
        shape (Shape): The shape measured
        semiring (Semiring): Semiring the scalar dimension is computed in
    """

    def __init__(self, shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO):
        super().__init__("dim")
        self.shape = shape
        self.semiring = semiring

    def generate_report(self) -> Dict:
        n = dim_int(self.shape, self.semiring)
        scalar = dim_scalar(self.shape, self.semiring)
        return {
            "name": self.name,
            "shape": render_shape(self.shape),
            "semiring": self.semiring.name,
            "dim_int": n,
            "dim_scalar": self.semiring.render(scalar),
            "ok": scalar == self.semiring.from_int(n) and scalar == trace(identity(self.shape, self.semiring)),
        }
