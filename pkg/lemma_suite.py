"""
Lemma Suite Module

Seeded randomized checks of the algebraic laws the protocols rely on:
absorption, compositionality, cut and backward absorption of names and
conames, the snake identities, the dual as a compact-closed composite, the
adjoint as a functor and through bras and inner products, unitaries and
bases, scalar action, the biproduct additive structure, structural
coherence, spectral decompositions and the Born rule. Every check draws
its own generator from the suite seed so failures reproduce individually.

Classes:
    LemmaSuiteVerifier: Runs every check for a configured semiring, seed and case count
"""

import logging
from functools import partial
from typing import Callable, Dict, List, Optional, Tuple

from abstract_qm import (
    Basis,
    adjoint_by_inner_product,
    base_tensor,
    born,
    make_spectral,
    matrix_in_bases,
    nondestructive_measurement,
    preserves_inner_product,
)
from base_verifier import BaseVerifier
from generators import (
    SMALL_SHAPES,
    TINY_SHAPES,
    make_rng,
    random_basis_unitary,
    random_morphism,
    random_scalar,
    random_shape,
    random_state,
    random_unit_state,
    random_unitary,
)
from matrix_morphisms import (
    Morphism,
    add,
    add_via_biproduct,
    adjoint,
    biproduct,
    compose,
    coname,
    conj_star,
    dual,
    epsilon,
    eta,
    first_difference,
    identity,
    inner_product,
    injection,
    inverse_iso,
    is_projector,
    is_unitary,
    is_zero,
    name,
    projection,
    render_matrix,
    scalar_action,
    scalar_of,
    structural_iso,
    sum_of,
    tensor,
    trace,
    zero,
)
from scalar_rings import BOOLEAN, Semiring
from shape_category import Dual, I, Q, Shape, Tensor, direct_sum

logger = logging.getLogger(__name__)

# Dimension at most 2, for checks whose intermediate shapes multiply four dimensions.
PAIR_SHAPES = [shape for shape in SMALL_SHAPES if shape.dim <= 2]

Equation = Tuple[str, object, object]


def _iso(kind: str, *params, semiring: Semiring) -> Morphism:
    return structural_iso(kind, *params, semiring=semiring)


def _one(shape: Shape, semiring: Semiring) -> Morphism:
    return identity(shape, semiring)


def dual_via_compact(f: Morphism) -> Morphism:
    """f* : B* -> A* as ρ⁻¹∘(1 ⊗ ε_B)∘α⁻¹∘((1 ⊗ f) ⊗ 1)∘(η_A ⊗ 1)∘λ."""
    sr = f.semiring
    a_star, b_star = Dual(f.dom), Dual(f.cod)
    return compose(
        inverse_iso(_iso("rho", a_star, semiring=sr)),
        tensor(_one(a_star, sr), epsilon(f.cod, sr)),
        inverse_iso(_iso("alpha", a_star, f.cod, b_star, semiring=sr)),
        tensor(tensor(_one(a_star, sr), f), _one(b_star, sr)),
        tensor(eta(f.dom, sr), _one(b_star, sr)),
        _iso("lambda", b_star, semiring=sr),
    )


def bra_via_compact(psi: Morphism) -> Morphism:
    """ψ† : A -> I as ε_A∘(1_A ⊗ ψ_*)∘(1_A ⊗ u_I)∘ρ_A."""
    sr = psi.semiring
    a = psi.cod
    return compose(
        epsilon(a, sr),
        tensor(_one(a, sr), conj_star(psi)),
        tensor(_one(a, sr), _iso("u_I", semiring=sr)),
        _iso("rho", a, semiring=sr),
    )


def inner_product_via_compact(psi: Morphism, phi: Morphism):
    """⟨ψ|φ⟩ as ε_A∘(φ ⊗ ψ_*)∘(1_I ⊗ u_I)∘ρ_I."""
    sr = psi.semiring
    return scalar_of(
        compose(
            epsilon(psi.cod, sr),
            tensor(phi, conj_star(psi)),
            tensor(_one(I, sr), _iso("u_I", semiring=sr)),
            _iso("rho", I, semiring=sr),
        )
    )


def relational_composition(r: Morphism, s: Morphism) -> Morphism:
    """R;S = {(a, c) | ∃b. a R b and b S c} for Boolean matrices, by direct search."""
    sr = r.semiring
    rows = [[sr.zero] * r.dom.dim for _ in range(s.cod.dim)]
    for a in range(r.dom.dim):
        for b in range(r.cod.dim):
            if r.entries[b, a] != sr.one:
                continue
            for c in range(s.cod.dim):
                if s.entries[c, b] == sr.one:
                    rows[c][a] = sr.one
    return Morphism(r.dom, s.cod, rows, sr)


def _compositionality(f: Morphism, g: Morphism) -> Morphism:
    # λ⁻¹∘(⌞f⌟ ⊗ 1_C)∘α∘(1_A ⊗ ⌜g⌝)∘ρ_A
    sr = f.semiring
    a, b, c = f.dom, f.cod, g.cod
    return compose(
        inverse_iso(_iso("lambda", c, semiring=sr)),
        tensor(coname(f), _one(c, sr)),
        _iso("alpha", a, Dual(b), c, semiring=sr),
        tensor(_one(a, sr), name(g)),
        _iso("rho", a, semiring=sr),
    )


def _triple(rng, semiring: Semiring, shapes=TINY_SHAPES):
    a, b, c = (random_shape(rng, shapes) for _ in range(3))
    return a, b, c, random_morphism(rng, a, b, semiring), random_morphism(rng, b, c, semiring)


def name_absorption(rng, sr: Semiring) -> List[Equation]:
    a, b, c, f, g = _triple(rng, sr, SMALL_SHAPES)
    return [
        ("(1 ⊗ g)∘⌜f⌝ = ⌜g∘f⌝", compose(tensor(_one(Dual(a), sr), g), name(f)), name(compose(g, f))),
        ("⌞g⌟∘(f ⊗ 1) = ⌞g∘f⌟", compose(coname(g), tensor(f, _one(Dual(c), sr))), coname(compose(g, f))),
    ]


def compositionality(rng, sr: Semiring) -> List[Equation]:
    _, _, _, f, g = _triple(rng, sr)
    return [("λ⁻¹∘(⌞f⌟ ⊗ 1)∘α∘(1 ⊗ ⌜g⌝)∘ρ = g∘f", _compositionality(f, g), compose(g, f))]


def cut_elimination(rng, sr: Semiring) -> List[Equation]:
    a, b, c, d = (random_shape(rng, PAIR_SHAPES) for _ in range(4))
    f, g, h = random_morphism(rng, a, b, sr), random_morphism(rng, b, c, sr), random_morphism(rng, c, d, sr)
    a_star, c_star = Dual(a), Dual(c)
    cut = compose(
        tensor(_one(a_star, sr), inverse_iso(_iso("lambda", d, semiring=sr))),
        tensor(_one(a_star, sr), tensor(coname(g), _one(d, sr))),
        tensor(_one(a_star, sr), _iso("alpha", b, c_star, d, semiring=sr)),
        inverse_iso(_iso("alpha", a_star, b, Tensor(c_star, d), semiring=sr)),
        tensor(name(f), name(h)),
        _iso("rho", I, semiring=sr),
    )
    return [("cut of ⌜f⌝ ⊗ ⌜h⌝ along ⌞g⌟ = ⌜h∘g∘f⌝", cut, name(compose(h, g, f)))]


def backward_absorption(rng, sr: Semiring) -> List[Equation]:
    a, b, c = (random_shape(rng, SMALL_SHAPES) for _ in range(3))
    f = random_morphism(rng, a, b, sr)
    g_in = random_morphism(rng, c, a, sr)
    g_out = random_morphism(rng, b, c, sr)
    return [
        ("(g* ⊗ 1)∘⌜f⌝ = ⌜f∘g⌝", compose(tensor(dual(g_in), _one(b, sr)), name(f)), name(compose(f, g_in))),
        ("⌞f⌟∘(1 ⊗ g*) = ⌞g∘f⌟", compose(coname(f), tensor(_one(a, sr), dual(g_out))), coname(compose(g_out, f))),
    ]


def symmetry_of_units(rng, sr: Semiring) -> List[Equation]:
    equations = []
    for shape in (Q, Tensor(Q, Q), random_shape(rng)):
        sigma = _iso("sigma_tensor", Dual(shape), shape, semiring=sr)
        equations.append((f"σ∘η_A = η_A* for {shape}", compose(sigma, eta(shape, sr)), eta(Dual(shape), sr)))
        equations.append((f"ε_A∘σ = ε_A* for {shape}", compose(epsilon(shape, sr), sigma), epsilon(Dual(shape), sr)))
    return equations


def snake_identities(rng, sr: Semiring) -> List[Equation]:
    a = random_shape(rng, TINY_SHAPES)
    b = random_shape(rng, TINY_SHAPES)
    a_star = Dual(a)
    left = compose(
        inverse_iso(_iso("lambda", a, semiring=sr)),
        tensor(epsilon(a, sr), _one(a, sr)),
        _iso("alpha", a, a_star, a, semiring=sr),
        tensor(_one(a, sr), eta(a, sr)),
        _iso("rho", a, semiring=sr),
    )
    right = compose(
        inverse_iso(_iso("rho", a_star, semiring=sr)),
        tensor(_one(a_star, sr), epsilon(a, sr)),
        inverse_iso(_iso("alpha", a_star, a, a_star, semiring=sr)),
        tensor(eta(a, sr), _one(a_star, sr)),
        _iso("lambda", a_star, semiring=sr),
    )
    f = random_morphism(rng, a, b, sr)
    endo = random_morphism(rng, a, a, sr)
    diagonal_sum = sr.zero
    for k in range(a.dim):
        diagonal_sum = diagonal_sum + endo.entry(k, k)
    return [
        ("Tr(f) = Σ fₖₖ", trace(endo), diagonal_sum),
        ("(ε ⊗ 1)∘α∘(1 ⊗ η) = 1_A", left, _one(a, sr)),
        ("(1 ⊗ ε)∘α⁻¹∘(η ⊗ 1) = 1_A*", right, _one(a_star, sr)),
        ("f* by units and counits = transpose", dual_via_compact(f), dual(f)),
        ("⌜1⌝ = η, ⌞1⌟ = ε", (name(_one(a, sr)), coname(_one(a, sr))), (eta(a, sr), epsilon(a, sr))),
    ]


def bra_via_units(rng, sr: Semiring) -> List[Equation]:
    psi = random_state(rng, random_shape(rng), sr)
    return [("ε∘(1 ⊗ ψ_*)∘(1 ⊗ u_I)∘ρ = ψ†", bra_via_compact(psi), adjoint(psi))]


def adjoint_functoriality(rng, sr: Semiring) -> List[Equation]:
    a, b, c, f, g = _triple(rng, sr)
    f2 = random_morphism(rng, a, b, sr)
    h = random_morphism(rng, c, a, sr)
    return [
        ("(g∘f)† = f†∘g†", adjoint(compose(g, f)), compose(adjoint(f), adjoint(g))),
        ("(f + f')† = f† + f'†", adjoint(add(f, f2)), add(adjoint(f), adjoint(f2))),
        ("0† = 0", adjoint(zero(a, b, sr)), zero(b, a, sr)),
        ("f†† = f", adjoint(adjoint(f)), f),
        ("1† = 1", adjoint(_one(a, sr)), _one(a, sr)),
        ("(f ⊗ h)† = f† ⊗ h†", adjoint(tensor(f, h)), tensor(adjoint(f), adjoint(h))),
    ]


def inner_product_via_units(rng, sr: Semiring) -> List[Equation]:
    shape = random_shape(rng)
    psi, phi = random_state(rng, shape, sr), random_state(rng, shape, sr)
    return [("⟨ψ|φ⟩ = ψ†∘φ", inner_product_via_compact(psi, phi), scalar_of(compose(adjoint(psi), phi)))]


def adjoint_inner_product(rng, sr: Semiring) -> List[Equation]:
    a, b = random_shape(rng, TINY_SHAPES), random_shape(rng, TINY_SHAPES)
    f = random_morphism(rng, a, b, sr)
    psi, phi = random_state(rng, b, sr), random_state(rng, a, sr)
    return [
        ("⟨f†ψ|φ⟩ = ⟨ψ|fφ⟩", inner_product(compose(adjoint(f), psi), phi), inner_product(psi, compose(f, phi))),
        ("f† is the unique g with ⟨gψ|φ⟩ = ⟨ψ|fφ⟩", adjoint_by_inner_product(f, adjoint(f)), True),
    ]


def unitary_inner_product(rng, sr: Semiring) -> List[Equation]:
    shape = random_shape(rng)
    u = random_unitary(rng, shape, semiring=sr)
    psi, phi = random_state(rng, shape, sr), random_state(rng, shape, sr)
    return [
        ("⟨Uψ|Uφ⟩ = ⟨ψ|φ⟩", inner_product(compose(u, psi), compose(u, phi)), inner_product(psi, phi)),
        ("U preserves the inner product on basis pairs", preserves_inner_product(u), True),
        ("U†∘U = 1", compose(adjoint(u), u), _one(shape, sr)),
    ]


def basis_matrix(rng, sr: Semiring) -> List[Equation]:
    a, b = random_shape(rng, TINY_SHAPES), random_shape(rng, TINY_SHAPES)
    f = random_morphism(rng, a, b, sr)
    base_a, base_b = Basis(random_basis_unitary(rng, a, sr)), Basis(random_basis_unitary(rng, b, sr))
    tensor_base = base_tensor(base_a, base_b)
    return [
        (
            "matrix of f† = conjugate transpose of matrix of f",
            matrix_in_bases(adjoint(f), base_b, base_a),
            adjoint(matrix_in_bases(f, base_a, base_b)),
        ),
        ("base_A ⊗ base_B is unitary", is_unitary(tensor_base.unitary), True),
    ]


def adjoint_decomposition(rng, sr: Semiring) -> List[Equation]:
    f = random_morphism(rng, random_shape(rng), random_shape(rng), sr)
    return [
        ("f† = (f_*)*", adjoint(f), dual(conj_star(f))),
        ("f† = (f*)_*", adjoint(f), conj_star(dual(f))),
    ]


def scalar_action_naturality(rng, sr: Semiring) -> List[Equation]:
    a, b, c, f, g = _triple(rng, sr)
    s, t = random_scalar(rng, sr), random_scalar(rng, sr)
    h = random_morphism(rng, c, a, sr)
    return [
        ("g∘(s•f) = s•(g∘f)", compose(g, scalar_action(s, f)), scalar_action(s, compose(g, f))),
        ("(s•f) ⊗ h = s•(f ⊗ h)", tensor(scalar_action(s, f), h), scalar_action(s, tensor(f, h))),
        ("s•(t•f) = (st)•f", scalar_action(s, scalar_action(t, f)), scalar_action(s * t, f)),
        ("(s•f)† = s†•f†", adjoint(scalar_action(s, f)), scalar_action(s.conj(), adjoint(f))),
        ("1•f = f", scalar_action(sr.one, f), f),
    ]


def semi_additivity(rng, sr: Semiring) -> List[Equation]:
    a, b, c, f, g = _triple(rng, sr)
    f2 = random_morphism(rng, a, b, sr)
    parts = [random_shape(rng, TINY_SHAPES) for _ in range(2)]
    selectors = [
        (
            f"p{j + 1}∘q{i + 1}",
            compose(projection(j, parts, sr), injection(i, parts, sr)),
            _one(parts[i], sr) if i == j else zero(parts[i], parts[j], sr),
        )
        for i in range(2)
        for j in range(2)
    ]
    resolution = sum_of([compose(injection(k, parts, sr), projection(k, parts, sr)) for k in range(2)])
    return selectors + [
        ("∇∘(f ⊕ f')∘Δ = f + f'", add_via_biproduct(f, f2), add(f, f2)),
        ("g∘(f + f') = g∘f + g∘f'", compose(g, add(f, f2)), add(compose(g, f), compose(g, f2))),
        ("f + 0 = f", add(f, zero(a, b, sr)), f),
        ("Σ qₖ∘pₖ = 1", resolution, _one(direct_sum(parts), sr)),
        ("1 ⊕ 1 = 1", biproduct(_one(parts[0], sr), _one(parts[1], sr)), _one(direct_sum(parts), sr)),
    ]


def structural_coherence(rng, sr: Semiring) -> List[Equation]:
    a, b, c, d = (random_shape(rng, PAIR_SHAPES) for _ in range(4))
    pentagon_left = compose(
        _iso("alpha", Tensor(a, b), c, d, semiring=sr),
        _iso("alpha", a, b, Tensor(c, d), semiring=sr),
    )
    pentagon_right = compose(
        tensor(_iso("alpha", a, b, c, semiring=sr), _one(d, sr)),
        _iso("alpha", a, Tensor(b, c), d, semiring=sr),
        tensor(_one(a, sr), _iso("alpha", b, c, d, semiring=sr)),
    )
    isos = [
        _iso("alpha", a, b, c, semiring=sr),
        _iso("sigma_tensor", a, b, semiring=sr),
        _iso("sigma_biproduct", a, b, semiring=sr),
        _iso("tau_left", a, b, c, semiring=sr),
        _iso("upsilon_right", a, b, c, semiring=sr),
        _iso("nu", a, b, semiring=sr),
        _iso("u_tensor", a, b, semiring=sr),
    ]
    return [
        ("pentagon", pentagon_left, pentagon_right),
        (
            "σ_B,A∘σ_A,B = 1",
            compose(_iso("sigma_tensor", b, a, semiring=sr), _iso("sigma_tensor", a, b, semiring=sr)),
            _one(Tensor(a, b), sr),
        ),
        ("structural isos are unitary", all(is_unitary(iso) for iso in isos), True),
    ]


def tau_naturality(rng, sr: Semiring) -> List[Equation]:
    a, b, c, a2, b2, c2 = (random_shape(rng, TINY_SHAPES) for _ in range(6))
    f, g, h = random_morphism(rng, a, a2, sr), random_morphism(rng, b, b2, sr), random_morphism(rng, c, c2, sr)
    return [
        (
            "τ∘(f ⊗ (g ⊕ h)) = ((f ⊗ g) ⊕ (f ⊗ h))∘τ",
            compose(_iso("tau_left", a2, b2, c2, semiring=sr), tensor(f, biproduct(g, h))),
            compose(biproduct(tensor(f, g), tensor(f, h)), _iso("tau_left", a, b, c, semiring=sr)),
        )
    ]


def _random_parts(rng, shape: Shape) -> List[Shape]:
    if shape.dim >= 2 and rng.integers(2):
        return [Q] + [I] * (shape.dim - 2)
    return [I] * shape.dim


def spectral_decomposition_laws(rng, sr: Semiring) -> List[Equation]:
    shape = random_shape(rng)
    parts = _random_parts(rng, shape)
    sd = make_spectral(random_unitary(rng, shape, direct_sum(parts), sr), parts)
    projectors = sd.projectors
    orthogonal = all(
        is_zero(compose(p, q)) for i, p in enumerate(projectors) for j, q in enumerate(projectors) if i != j
    )
    injected = sum_of([compose(injection(k, [shape] * sd.n, sr), p) for k, p in enumerate(projectors)])
    return [
        ("each Pⱼ is a projector", all(is_projector(p) for p in projectors), True),
        ("Pᵢ∘Pⱼ = 0 for i ≠ j", orthogonal, True),
        ("Σ Pⱼ = 1", sum_of(projectors), _one(shape, sr)),
        ("⟨Pᵢ⟩ = Σ qᵢ∘Pᵢ", nondestructive_measurement(sd), injected),
    ]


def born_rule(rng, sr: Semiring) -> List[Equation]:
    shape = random_shape(rng)
    sd = make_spectral(random_unitary(rng, shape, direct_sum([I] * shape.dim), sr), [I] * shape.dim)
    psi = random_unit_state(rng, shape, sr)
    probabilities = born(sd, psi)
    total = sr.zero
    for p in probabilities:
        total = total + p
    return [
        ("Prob is self-adjoint", all(p.conj() == p for p in probabilities), True),
        ("Σ Prob = 1", total, sr.one),
    ]


def rel_constraint_propagation(rng, sr: Semiring) -> List[Equation]:
    _, _, _, r, s = _triple(rng, sr)
    return [("⌞R⌟ followed by ⌜S⌝ yields R;S", _compositionality(r, s), relational_composition(r, s))]


def _boolean_only(semiring: Semiring) -> Optional[str]:
    return None if semiring is BOOLEAN else "relational reading needs the Boolean semiring"


CHECKS: List[Tuple[str, Callable, Optional[Callable[[Semiring], Optional[str]]]]] = [
    ("name_absorption", name_absorption, None),
    ("compositionality", compositionality, None),
    ("cut_elimination", cut_elimination, None),
    ("backward_absorption", backward_absorption, None),
    ("symmetry_of_units", symmetry_of_units, None),
    ("snake_identities", snake_identities, None),
    ("bra_via_units", bra_via_units, None),
    ("adjoint_functoriality", adjoint_functoriality, None),
    ("inner_product_via_units", inner_product_via_units, None),
    ("adjoint_inner_product", adjoint_inner_product, None),
    ("unitary_inner_product", unitary_inner_product, None),
    ("basis_matrix", basis_matrix, None),
    ("adjoint_decomposition", adjoint_decomposition, None),
    ("scalar_action_naturality", scalar_action_naturality, None),
    ("semi_additivity", semi_additivity, None),
    ("structural_coherence", structural_coherence, None),
    ("tau_naturality", tau_naturality, None),
    ("spectral_decomposition_laws", spectral_decomposition_laws, None),
    ("born_rule", born_rule, None),
    ("rel_constraint_propagation", rel_constraint_propagation, _boolean_only),
]


class LemmaSuiteVerifier(BaseVerifier):
    """
    Runs every lemma check over seeded random cases.

    Attributes:
        semiring (Semiring): Semiring the cases are drawn from
        seed (int): Suite seed; check k draws from the generator seeded by (seed, k)
        count (int): Number of random cases per check
    """

    def __init__(self, semiring: Semiring, seed: int = 0, count: int = 200):
        super().__init__("lemmas")
        self.semiring = semiring
        self.seed = seed
        self.count = count

    def checks(self) -> Dict[str, Callable[[], Dict]]:
        return {
            check_name: partial(self._run, index, case, skip)
            for index, (check_name, case, skip) in enumerate(CHECKS)
        }

    def _describe(self, label: str, lhs, rhs) -> Dict:
        if isinstance(lhs, Morphism) and isinstance(rhs, Morphism):
            return {
                "equation": label,
                "lhs": render_matrix(lhs),
                "rhs": render_matrix(rhs),
                "difference": first_difference(lhs, rhs),
            }
        if isinstance(lhs, tuple):
            return {"equation": label, "lhs": " | ".join(map(str, lhs)), "rhs": " | ".join(map(str, rhs))}
        if isinstance(lhs, bool):
            return {"equation": label, "lhs": lhs, "rhs": rhs}
        return {"equation": label, "lhs": self.semiring.render(lhs), "rhs": self.semiring.render(rhs)}

    def _run(self, index: int, case: Callable, skip: Optional[Callable]) -> Dict:
        reason = skip(self.semiring) if skip is not None else None
        if reason:
            return {"ok": True, "cases": 0, "skipped": reason}
        if self.count == 0:
            return {"ok": True, "cases": 0, "vacuous": True}

        rng = make_rng([self.seed, index])
        for k in range(self.count):
            for label, lhs, rhs in case(rng, self.semiring):
                if lhs != rhs:
                    return {"ok": False, "cases": k + 1, "counterexample": self._describe(label, lhs, rhs)}
        return {"ok": True, "cases": self.count}

    def generate_report(self) -> Dict:
        """
        Run every check.

        Returns:
            Dict: {"name", "semiring", "seed", "count", "checks": {name: result}, "ok"}
        """
        logger.info("lemma suite over %s: %d cases per check, seed %d", self.semiring.name, self.count, self.seed)
        results = self.run_all_checks()
        return {
            "name": self.name,
            "semiring": self.semiring.name,
            "seed": self.seed,
            "count": self.count,
            "checks": results,
            "ok": all(result.get("ok", False) for result in results.values()),
        }
