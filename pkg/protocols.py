"""
Protocols Module

This module transcribes the teleportation family of protocols into composable
diagrams over FMat(S) and checks each against its specification morphism by
exact matrix equality: plain teleportation, logic-gate teleportation,
two-round CNOT teleportation and entanglement swapping. It also runs the
exhaustive search showing that Rel admits no teleportation base.

Every protocol is a BaseVerifier subclass whose report lists the diagram
steps, the per-branch corrections and weights, both composite matrices and
the verdict.

Classes:
    Diagram: A typed sequence of named steps
    BranchResult: Outcome of one measurement branch
    ProtocolReport: Result of a protocol verification
    ProtocolVerifier: Base class of the protocol verifiers
    TeleportationVerifier: Plain teleportation
    GateTeleportationVerifier: Logic-gate teleportation of a unitary f
    CnotTeleportationVerifier: Two-round teleportation of CNOT
    EntanglementSwapVerifier: Entanglement swapping
    RelSearchVerifier: Exhaustive search for a teleportation base in Rel
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from abstract_qm import communicate_and_act, entanglement_projector, nondestructive_measurement
from base_verifier import BaseVerifier
from exceptions import CorrectionError, NotUnitaryError, ShapeMismatchError
from generators import permutation_entries
from matrix_morphisms import (
    Morphism,
    adjoint,
    compose,
    copies_of,
    direct_sum_morphisms,
    first_difference,
    identity,
    inverse_iso,
    is_unitary,
    is_zero,
    name,
    pipeline,
    projection,
    render_matrix,
    scalar_action,
    structural_iso,
    tensor,
    tuple_of,
)
from scalar_rings import BOOLEAN, Semiring
from shape_category import Dual, I, Q, Shape, Tensor, copies
from teleportation_base import PREBASE_COD, PREBASE_DOM, BellBase, TeleportationBase

logger = logging.getLogger(__name__)


class Diagram:
    """
    A diagram transcribed as a sequence of named steps, type-checked on entry.

    Attributes:
        name (str): Diagram name used in error messages
        steps (List[Tuple[str, Morphism]]): The steps in diagram order
    """

    def __init__(self, name: str):
        self.name = name
        self.steps: List[Tuple[str, Morphism]] = []

    def then(self, label: str, morphism: Morphism) -> "Diagram":
        """
        Append a step.

        Raises:
            ShapeMismatchError: If the step does not start where the previous one ends
        """
        if self.steps and self.steps[-1][1].cod != morphism.dom:
            previous = self.steps[-1][0]
            raise ShapeMismatchError(
                f"{self.name}: step {label!r} starts at {morphism.dom} "
                f"but step {previous!r} ends at {self.steps[-1][1].cod}"
            )
        self.steps.append((label, morphism))
        return self

    def compose(self) -> Morphism:
        return pipeline(*[morphism for _, morphism in self.steps])

    def signature(self) -> List[Dict[str, str]]:
        return [
            {"step": label, "type": f"{morphism.dom} -> {morphism.cod}"}
            for label, morphism in self.steps
        ]


@dataclass
class BranchResult:
    """Outcome of one measurement branch: correction applied, weight and whether it matched."""

    index: str
    correction: str
    weight: object
    ok: bool


@dataclass
class ProtocolReport:
    """
    Result of a protocol verification.

    Attributes:
        protocol (str): Protocol name
        semiring (Semiring): Semiring the protocol ran over
        lhs (Morphism): The composed protocol
        rhs (Morphism): The specification morphism
        branches (List[BranchResult]): Per-branch outcomes
        steps (List[Dict[str, str]]): Diagram steps with their types
        details (Dict): Protocol specific extra facts
        conditions (Dict[str, bool]): Side equations the protocol relies on;
            the report is only ok when every one of them holds
    """

    protocol: str
    semiring: Semiring
    lhs: Morphism
    rhs: Morphism
    branches: List[BranchResult]
    steps: List[Dict[str, str]] = field(default_factory=list)
    details: Dict = field(default_factory=dict)
    conditions: Dict[str, bool] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else "unequal"

    @property
    def ok(self) -> bool:
        return (
            self.equal
            and all(branch.ok for branch in self.branches)
            and all(self.conditions.values())
        )

    def to_dict(self) -> Dict:
        report = {
            "name": self.protocol,
            "protocol": self.protocol,
            "semiring": self.semiring.name,
            "branches": [
                {
                    "index": branch.index,
                    "correction": branch.correction,
                    "weight": self.semiring.render(branch.weight),
                    "ok": branch.ok,
                }
                for branch in self.branches
            ],
            "steps": self.steps,
            "verdict": self.verdict,
            "lhs": render_matrix(self.lhs),
            "rhs": render_matrix(self.rhs),
        }
        if not self.equal:
            report["first_difference"] = first_difference(self.lhs, self.rhs)
        report.update(self.details)
        report["ok"] = self.ok
        return report


def delta(shape: Shape, weight, n: int = 4, semiring: Optional[Semiring] = None) -> Morphism:
    """Δⁿ = ⟨weight•1_A⟩ᵢ₌₁..ₙ : A -> n·A."""
    semiring = semiring if semiring is not None else weight.semiring
    return tuple_of([scalar_action(weight, identity(shape, semiring))] * n)


def _branches(lhs: Morphism, parts: Sequence[Shape], expected: Morphism, weight, labels: Sequence[str], indices: Sequence[str]) -> List[BranchResult]:
    semiring = lhs.semiring
    target = scalar_action(weight, expected)
    results = []
    for k, (label, index) in enumerate(zip(labels, indices)):
        branch = compose(projection(k, parts, semiring), lhs)
        results.append(BranchResult(index, label, weight, branch == target))
    return results


class ProtocolVerifier(BaseVerifier):
    """
    Base class of the protocol verifiers.

    Attributes:
        base (TeleportationBase): The teleportation base the protocol uses
        protocol_report (Optional[ProtocolReport]): The latest structured result
    """

    def __init__(self, name: str, base: TeleportationBase):
        super().__init__(name)
        self.base = base
        self.protocol_report = None

    def build(self) -> ProtocolReport:
        raise NotImplementedError("Subclasses must implement build")

    def generate_report(self) -> Dict:
        self.protocol_report = self.build()
        logger.info("%s over %s: %s", self.name, self.base.semiring.name, self.protocol_report.verdict)
        return self.protocol_report.to_dict()


def _teleportation_diagram(tb: TeleportationBase, gate: Morphism, corrections: Sequence[Morphism], title: str) -> Diagram:
    semiring = tb.semiring
    n = len(corrections)
    return (
        Diagram(title)
        .then("ρ", structural_iso("rho", Q, semiring=semiring))
        .then("1 ⊗ s•⌜f⌝", tensor(identity(Q, semiring), scalar_action(tb.s, name(gate))))
        .then("α", structural_iso("alpha", Q, Dual(Q), Q, semiring=semiring))
        .then("observation ⊗ 1", tensor(tb.observation(), identity(Q, semiring)))
        .then("υ", structural_iso("upsilon_right", [I] * n, Q, semiring=semiring))
        .then("⊕λ⁻¹", copies_of(n, inverse_iso(structural_iso("lambda", Q, semiring=semiring))))
        .then("⊕ corrections", direct_sum_morphisms(corrections))
    )


class TeleportationVerifier(ProtocolVerifier):
    """Teleportation of one qubit through the base's observation and corrections βᵢ⁻¹."""

    def __init__(self, base: TeleportationBase):
        super().__init__("teleport", base)

    def build(self) -> ProtocolReport:
        tb = self.base
        corrections = tb.corrections()
        diagram = _teleportation_diagram(tb, identity(Q, tb.semiring), corrections, self.name)
        lhs = diagram.compose()
        rhs = delta(Q, tb.weight, semiring=tb.semiring)
        labels = [f"β{i}⁻¹" for i in range(1, 5)]
        details = {}
        if isinstance(tb, BellBase):
            inverses_ok = all(
                compose(correction, beta) == identity(Q, tb.semiring)
                for correction, beta in zip(tb.bell_corrections(), tb.betas)
            )
            details["bell_corrections"] = inverses_ok
        branches = _branches(lhs, [Q] * 4, identity(Q, tb.semiring), tb.weight, labels, [str(i) for i in range(1, 5)])
        return ProtocolReport(self.name, tb.semiring, lhs, rhs, branches, diagram.signature(), details, dict(details))


def gate_corrections(tb: TeleportationBase, f: Morphism) -> List[Morphism]:
    """φᵢ(f) = f∘βᵢ∘f† for a unitary f."""
    f_dagger = adjoint(f)
    return [compose(f, beta, f_dagger) for beta in tb.betas]


class GateTeleportationVerifier(ProtocolVerifier):
    """
    Teleportation of the unitary f: the shared state is s•⌜f⌝ and branch i is
    corrected by φᵢ(f)⁻¹.

    Attributes:
        gate (Morphism): The unitary f : Q -> Q
        phis (List[Morphism]): The corrections φᵢ(f)
    """

    def __init__(self, base: TeleportationBase, gate: Morphism, corrections: Optional[Sequence[Morphism]] = None):
        """
        Initialize and validate the gate and its corrections.

        Args:
            base (TeleportationBase): The teleportation base
            gate (Morphism): A unitary Q -> Q
            corrections (Optional[Sequence[Morphism]]): φᵢ(f); derived as f∘βᵢ∘f† when omitted

        Raises:
            NotUnitaryError: If the gate is not unitary
            CorrectionError: If some supplied φᵢ(f) violates f∘βᵢ = φᵢ(f)∘f
        """
        super().__init__("gate-teleport", base)
        if gate.dom != Q or gate.cod != Q or not is_unitary(gate):
            raise NotUnitaryError(f"Gate {gate.dom} -> {gate.cod} is not a unitary on Q")
        phis = list(corrections) if corrections is not None else gate_corrections(base, gate)
        if len(phis) != 4:
            raise CorrectionError(f"Expected 4 corrections, got {len(phis)}")
        for i, (phi, beta) in enumerate(zip(phis, base.betas), start=1):
            if compose(gate, beta) != compose(phi, gate):
                raise CorrectionError(f"Correction φ{i}(f) violates f∘β{i} = φ{i}(f)∘f")
        self.gate = gate
        self.phis = phis

    def build(self) -> ProtocolReport:
        tb = self.base
        corrections = [adjoint(phi) for phi in self.phis]
        diagram = _teleportation_diagram(tb, self.gate, corrections, self.name)
        lhs = diagram.compose()
        rhs = compose(delta(Q, tb.weight, semiring=tb.semiring), self.gate)
        labels = [f"φ{i}(f)⁻¹" for i in range(1, 5)]
        branches = _branches(lhs, [Q] * 4, self.gate, tb.weight, labels, [str(i) for i in range(1, 5)])
        details = {"gate": render_matrix(self.gate)}
        return ProtocolReport(self.name, tb.semiring, lhs, rhs, branches, diagram.signature(), details)


def standard_cnot(semiring: Semiring) -> Morphism:
    """CNOT with the first qubit as control: the permutation (0, 1, 3, 2)."""
    pair = Tensor(Q, Q)
    return Morphism(pair, pair, permutation_entries([0, 1, 3, 2], semiring), semiring)


class CnotTeleportationVerifier(ProtocolVerifier):
    """
    Two-round teleportation of CNOT through the shared state s²•⌜CNOT⌝.

    Round one observes the first input qubit against the first half of the
    shared state and corrects with φ₁(βᵢ)⁻¹; round two does the same for the
    second qubit with φ₂(βⱼ)⁻¹, giving sixteen branches of weight (s†s)².

    Attributes:
        cnot (Morphism): The CNOT gate on Q ⊗ Q
        equations (Dict[str, bool]): The assumed and derived commutation equations
    """

    def __init__(self, base: BellBase, cnot: Optional[Morphism] = None):
        """
        Raises:
            NotUnitaryError: If cnot is not unitary
            CorrectionError: If one of the four assumed commutation equations fails
        """
        super().__init__("cnot-teleport", base)
        semiring = base.semiring
        cnot = cnot if cnot is not None else standard_cnot(semiring)
        if not is_unitary(cnot):
            raise NotUnitaryError("CNOT is not unitary")
        one, flip, phase = identity(Q, semiring), base.sigma_q, base.beta(3)
        beta_four = base.beta(4)

        def commutes(left: Morphism, right: Morphism) -> bool:
            return compose(cnot, left) == compose(right, cnot)

        assumed = {
            "CNOT∘(σ⊗1) = (σ⊗σ)∘CNOT": commutes(tensor(flip, one), tensor(flip, flip)),
            "CNOT∘(1⊗σ) = (1⊗σ)∘CNOT": commutes(tensor(one, flip), tensor(one, flip)),
            "CNOT∘(β3⊗1) = (β3⊗1)∘CNOT": commutes(tensor(phase, one), tensor(phase, one)),
            "CNOT∘(1⊗β3) = (β3⊗β3)∘CNOT": commutes(tensor(one, phase), tensor(phase, phase)),
        }
        failed = [equation for equation, holds in assumed.items() if not holds]
        if failed:
            raise CorrectionError(f"CNOT commutation equations fail: {', '.join(failed)}")
        derived = {
            "CNOT∘(β4⊗1) = (β4⊗σ)∘CNOT": commutes(tensor(beta_four, one), tensor(beta_four, flip)),
            "CNOT∘(1⊗β4) = (β3⊗β4)∘CNOT": commutes(tensor(one, beta_four), tensor(phase, beta_four)),
        }
        self.cnot = cnot
        self.equations = {**assumed, **derived}

    def first_round_corrections(self) -> List[Morphism]:
        """φ₁(βᵢ) = CNOT∘(βᵢ ⊗ 1)∘CNOT†."""
        one = identity(Q, self.base.semiring)
        dagger = adjoint(self.cnot)
        return [compose(self.cnot, tensor(beta, one), dagger) for beta in self.base.betas]

    def second_round_corrections(self) -> List[Morphism]:
        """φ₂(βⱼ) = CNOT∘(1 ⊗ βⱼ)∘CNOT†."""
        one = identity(Q, self.base.semiring)
        dagger = adjoint(self.cnot)
        return [compose(self.cnot, tensor(one, beta), dagger) for beta in self.base.betas]

    def build(self) -> ProtocolReport:
        tb = self.base
        semiring = tb.semiring
        pair = Tensor(Q, Q)
        bell_pair = Tensor(Q, Dual(Q))
        outcomes = copies(4, I)
        one_pair = identity(pair, semiring)
        one_bell = identity(bell_pair, semiring)
        rebracketed = Tensor(Tensor(bell_pair, pair), bell_pair)
        shared = scalar_action(tb.s * tb.s, name(self.cnot))
        phi_one = [adjoint(phi) for phi in self.first_round_corrections()]
        phi_two = [adjoint(phi) for phi in self.second_round_corrections()]
        unrho = inverse_iso(structural_iso("rho", pair, semiring=semiring))

        diagram = (
            Diagram(self.name)
            .then("ρ", structural_iso("rho", pair, semiring=semiring))
            .then("1 ⊗ s²•⌜CNOT⌝", tensor(one_pair, shared))
            .then(
                "1 ⊗ (u ⊗ 1)",
                tensor(one_pair, tensor(structural_iso("u_tensor", Q, Q, semiring=semiring), one_pair)),
            )
            .then(
                "(α, σ)",
                structural_iso(
                    "shuffle",
                    Tensor(pair, Tensor(Tensor(Dual(Q), Dual(Q)), pair)),
                    rebracketed,
                    (0, 2, 4, 5, 1, 3),
                    semiring=semiring,
                ),
            )
            .then("1st observation", tensor(tensor(tb.observation(), one_pair), one_bell))
            .then("communication and φ₁ corrections", tensor(communicate_and_act(phi_one), one_bell))
            .then("2nd observation", tensor(copies_of(4, one_pair), tb.observation()))
            .then("υ", structural_iso("upsilon_right", [pair] * 4, outcomes, semiring=semiring))
            .then("⊕τ", copies_of(4, structural_iso("tau_left", pair, [I] * 4, semiring=semiring)))
            .then("⊕⊕ρ⁻¹", copies_of(4, copies_of(4, unrho)))
            .then("⊕⊕ φ₂ corrections", copies_of(4, direct_sum_morphisms(phi_two)))
        )
        lhs = diagram.compose()
        weight = tb.weight * tb.weight
        rhs = tuple_of([tuple_of([scalar_action(weight, self.cnot)] * 4)] * 4)

        inner = [pair] * 4
        branches = []
        for i in range(4):
            round_one = compose(projection(i, [copies(4, pair)] * 4, semiring), lhs)
            for j in range(4):
                branch = compose(projection(j, inner, semiring), round_one)
                branches.append(
                    BranchResult(
                        f"{i + 1},{j + 1}",
                        f"φ1(β{i + 1})⁻¹ ; φ2(β{j + 1})⁻¹",
                        weight,
                        branch == scalar_action(weight, self.cnot),
                    )
                )
        details = {"equations": self.equations}
        return ProtocolReport(
            self.name, semiring, lhs, rhs, branches, diagram.signature(), details, self.equations
        )


class EntanglementSwapVerifier(ProtocolVerifier):
    """
    Entanglement swapping: two shared pairs (d*, a) and (b*, c); measuring
    (a, b*) non-destructively with Pᵢ = s†s•(⌜γᵢ⌝∘⌞βᵢ⌟) and correcting with
    ζᵢ = (γᵢ⁻¹ ⊗ 1_a) ⊗ (1_{d*} ⊗ βᵢ⁻¹) leaves (b*, a) and (d*, c) entangled.
    """

    def __init__(self, base: BellBase):
        super().__init__("swap", base)

    def projectors(self) -> List[Morphism]:
        return [entanglement_projector(self.base.gamma(i), self.base.weight) for i in range(1, 5)]

    def corrections(self) -> List[Morphism]:
        tb = self.base
        one, one_dual = identity(Q, tb.semiring), identity(Dual(Q), tb.semiring)
        return [
            tensor(tensor(adjoint(tb.gamma(i)), one), tensor(one_dual, adjoint(tb.beta(i))))
            for i in range(1, 5)
        ]

    def build(self) -> ProtocolReport:
        tb = self.base
        semiring = tb.semiring
        s = tb.s
        epr = name(identity(Q, semiring))
        pairs = Tensor(Tensor(Dual(Q), Q), Tensor(Dual(Q), Q))
        middle = Tensor(Tensor(Dual(Q), Tensor(Q, Dual(Q))), Q)
        projectors = self.projectors()
        measured = tuple_of(projectors)

        diagram = (
            Diagram(self.name)
            .then("λ", structural_iso("lambda", I, semiring=semiring))
            .then("s²•(⌜1⌝ ⊗ ⌜1⌝)", scalar_action(s * s, tensor(epr, epr)))
            .then("α", structural_iso("shuffle", pairs, middle, (0, 1, 2, 3), semiring=semiring))
            .then(
                "Θ",
                tensor(tensor(identity(Dual(Q), semiring), measured), identity(Q, semiring)),
            )
            .then(
                "τ ⊗ 1",
                tensor(
                    structural_iso("tau_left", Dual(Q), [Tensor(Q, Dual(Q))] * 4, semiring=semiring),
                    identity(Q, semiring),
                ),
            )
            .then(
                "υ",
                structural_iso("upsilon_right", [Tensor(Dual(Q), Tensor(Q, Dual(Q)))] * 4, Q, semiring=semiring),
            )
            .then("4·(α, σ)", copies_of(4, structural_iso("shuffle", middle, pairs, (2, 1, 0, 3), semiring=semiring)))
            .then("⊕ζ", direct_sum_morphisms(self.corrections()))
        )
        lhs = diagram.compose()
        weight = s.conj() * s * s * s
        pair_of_pairs = tensor(epr, epr)
        rhs = compose(
            tuple_of([scalar_action(weight, pair_of_pairs)] * 4),
            structural_iso("lambda", I, semiring=semiring),
        )
        expected = compose(pair_of_pairs, structural_iso("lambda", I, semiring=semiring))
        labels = [f"ζ{i}" for i in range(1, 5)]
        branches = _branches(lhs, [pairs] * 4, expected, weight, labels, [str(i) for i in range(1, 5)])

        orthogonal = all(
            is_zero(compose(p, q))
            for a, p in enumerate(projectors)
            for b, q in enumerate(projectors)
            if a != b
        )
        details = {
            "projectors": {
                "self_adjoint": all(adjoint(p) == p for p in projectors),
                "idempotent": all(compose(p, p) == p for p in projectors),
                "orthogonal": orthogonal,
            },
            "matches_observation": measured == nondestructive_measurement(tb.observation_decomposition()),
        }
        conditions = {**details["projectors"], "matches_observation": details["matches_observation"]}
        return ProtocolReport(self.name, semiring, lhs, rhs, branches, diagram.signature(), details, conditions)


def verify_teleportation(tb: TeleportationBase) -> ProtocolReport:
    return TeleportationVerifier(tb).build()


def verify_gate_teleportation(tb: TeleportationBase, f: Morphism, corrections: Optional[Sequence[Morphism]] = None) -> ProtocolReport:
    return GateTeleportationVerifier(tb, f, corrections).build()


def verify_cnot_teleportation(tb: BellBase, cnot: Optional[Morphism] = None) -> ProtocolReport:
    return CnotTeleportationVerifier(tb, cnot).build()


def verify_entanglement_swap(tb: BellBase) -> ProtocolReport:
    return EntanglementSwapVerifier(tb).build()


class RelSearchVerifier(BaseVerifier):
    """
    Exhaustive search over all 2¹⁶ Boolean prebase candidates 4·I -> Q* ⊗ Q.

    The only non-zero Boolean scalar is 1, so s = 1 and 2s†s = 1 + 1 = 1 holds;
    a candidate is a teleportation base iff it is unitary and each of its
    four unnamed columns is unitary.
    """

    def __init__(self):
        super().__init__("rel-search")
        self.semiring = BOOLEAN

    @staticmethod
    def _candidate_bits() -> np.ndarray:
        codes = np.arange(1 << 16, dtype=np.uint32)
        bits = (codes[:, None] >> np.arange(16, dtype=np.uint32)) & 1
        return bits.astype(np.int64).reshape(-1, 4, 4)

    def unitary_candidates(self) -> np.ndarray:
        """Indices of candidates with RᵀR = RRᵀ = 1 over the Booleans (the permutations)."""
        bits = self._candidate_bits()
        eye = np.eye(4, dtype=bool)
        gram = np.einsum("nki,nkj->nij", bits, bits) > 0
        cogram = np.einsum("nik,njk->nij", bits, bits) > 0
        mask = np.all(gram == eye, axis=(1, 2)) & np.all(cogram == eye, axis=(1, 2))
        return np.flatnonzero(mask)

    def _as_morphism(self, bits: np.ndarray, dom: Shape, cod: Shape) -> Morphism:
        rows = [[self.semiring.one if b else self.semiring.zero for b in row] for row in bits]
        return Morphism(dom, cod, rows, self.semiring)

    def search(self) -> List[TeleportationBase]:
        bits = self._candidate_bits()
        found = []
        for index in self.unitary_candidates():
            prebase = self._as_morphism(bits[index], PREBASE_DOM, PREBASE_COD)
            try:
                found.append(TeleportationBase(self.semiring.one, prebase, f"rel-{index}").validate())
            except NotUnitaryError as e:
                logger.debug("candidate %d rejected: %s", index, e)
        return found

    def boolean_unitaries(self) -> List[Morphism]:
        """All unitaries Q -> Q over the Booleans."""
        unitaries = []
        for code in range(16):
            bits = np.array([(code >> k) & 1 for k in range(4)]).reshape(2, 2)
            candidate = self._as_morphism(bits, Q, Q)
            if is_unitary(candidate):
                unitaries.append(candidate)
        return unitaries

    def generate_report(self) -> Dict:
        """
        Run the search.

        Returns:
            Dict: Candidate counts, the (empty) list of bases, the Boolean
                unitaries on Q and the single-branch teleportation check
                β⁻¹∘1∘β = 1 for each of them
        """
        bases = self.search()
        unitaries = self.boolean_unitaries()
        one = identity(Q, self.semiring)
        branch_checks = [
            {"beta": render_matrix(beta), "ok": compose(adjoint(beta), one, beta) == one}
            for beta in unitaries
        ]
        candidates = 1 << 16
        logger.info("rel-search: %d teleportation bases among %d candidates", len(bases), candidates)
        return {
            "name": self.name,
            "semiring": self.semiring.name,
            "candidates": candidates,
            "unitary_candidates": int(len(self.unitary_candidates())),
            "bases": [render_matrix(tb.prebase) for tb in bases],
            "summary": f"{len(bases)} teleportation bases among {candidates} candidates",
            "boolean_unitaries": len(unitaries),
            "branch_teleportation": branch_checks,
            "ok": not bases and all(check["ok"] for check in branch_checks),
        }


def rel_teleportation_search() -> Dict:
    return RelSearchVerifier().generate_report()
