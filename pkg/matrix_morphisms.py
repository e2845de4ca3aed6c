"""
Matrix Morphisms Module

This module implements the category FMat(S) of exact matrices over a pluggable
semiring S, with shapes as objects. It provides composition, tensor and
biproduct structure, the compact closed structure (units, counits, names,
conames and duals), the strong compact closed structure (the covariant
conjugation f_* and the adjoint f†), the scalar action, inner products and the
unitary/self-adjoint/projector predicates.

Entries are stored in a read-only numpy object array with one row per codomain
basis element and one column per domain basis element. Products and tensors
walk only the non-zero entries.

Classes:
    Morphism: An exact matrix with explicit domain and codomain shapes
"""

import logging
from functools import reduce
from typing import Dict, List, Optional, Sequence

import numpy as np

from exceptions import ParseError, ShapeMismatchError
from scalar_rings import COMPLEX_ROOT_TWO, Semiring
from shape_category import (
    Biproduct,
    Dual,
    I,
    Shape,
    Tensor,
    copies,
    direct_sum,
    parse_shape,
    render_shape,
    structural_permutation,
)

logger = logging.getLogger(__name__)

_conj = np.frompyfunc(lambda x: x.conj(), 1, 1)


class Morphism:
    """
    An arrow of FMat(S) between two shapes.

    Attributes:
        dom (Shape): Domain shape
        cod (Shape): Codomain shape
        entries (np.ndarray): ``cod.dim × dom.dim`` read-only object array;
            entry ``[r, c]`` is the coefficient of codomain basis element r in
            the image of domain basis element c
        semiring (Semiring): The semiring the entries belong to
    """

    def __init__(self, dom: Shape, cod: Shape, entries, semiring: Semiring = COMPLEX_ROOT_TWO):
        array = np.array(entries, dtype=object)
        if array.shape != (cod.dim, dom.dim):
            raise ShapeMismatchError(
                f"Entries of shape {array.shape} do not fit {dom} -> {cod} "
                f"({cod.dim}×{dom.dim})"
            )
        array.setflags(write=False)
        self.dom = dom
        self.cod = cod
        self.entries = array
        self.semiring = semiring

    def entry(self, row: int, col: int):
        return self.entries[row, col]

    @property
    def rows(self) -> List[List]:
        return [list(row) for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.semiring is other.semiring
            and all(x == y for x, y in zip(self.entries.flat, other.entries.flat))
        )

    __hash__ = None

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return compose(self, other)

    def __add__(self, other: "Morphism") -> "Morphism":
        return add(self, other)

    def __repr__(self) -> str:
        return f"<Morphism {self.dom} -> {self.cod} over {self.semiring.name}>"

    def __str__(self) -> str:
        return render_matrix(self)


def _same_semiring(*morphisms: Morphism) -> Semiring:
    semiring = morphisms[0].semiring
    for morphism in morphisms[1:]:
        if morphism.semiring is not semiring:
            raise ShapeMismatchError(
                f"Cannot mix semirings {semiring.name} and {morphism.semiring.name}"
            )
    return semiring


def _filled(rows: int, cols: int, value) -> np.ndarray:
    array = np.empty((rows, cols), dtype=object)
    array.fill(value)
    return array


_nonzero = np.frompyfunc(lambda x: not x.is_zero(), 1, 1)


def _support(entries: np.ndarray) -> List[tuple]:
    """(row, col, value) for every non-zero entry, in row-major order."""
    rows, cols = np.nonzero(_nonzero(entries).astype(bool))
    return [(r, c, entries[r, c]) for r, c in zip(rows.tolist(), cols.tolist())]


def _product(left: np.ndarray, right: np.ndarray, semiring: Semiring) -> np.ndarray:
    """Matrix product that only multiplies pairs of non-zero entries."""
    out = _filled(left.shape[0], right.shape[1], semiring.zero)
    by_row: Dict[int, List[tuple]] = {}
    for k, c, value in _support(right):
        by_row.setdefault(k, []).append((c, value))
    for r, k, value in _support(left):
        for c, other in by_row.get(k, ()):
            out[r, c] = out[r, c] + value * other
    return out


def _kron(left: np.ndarray, right: np.ndarray, semiring: Semiring) -> np.ndarray:
    """Left-major Kronecker product over the non-zero entries."""
    rows, cols = right.shape
    out = _filled(left.shape[0] * rows, left.shape[1] * cols, semiring.zero)
    right_support = _support(right)
    for i, j, x in _support(left):
        for k, l, y in right_support:
            out[i * rows + k, j * cols + l] = x * y
    return out


def from_rows(dom: Shape, cod: Shape, rows: Sequence[Sequence], semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """Build a morphism from rows given as scalars, ints or scalar strings."""

    def coerce(value):
        if isinstance(value, str):
            return semiring.parse(value)
        if isinstance(value, int):
            return semiring.from_int(value) if value >= 0 else semiring.minus_one() * semiring.from_int(-value)
        return value

    return Morphism(dom, cod, [[coerce(value) for value in row] for row in rows], semiring)


def column(cod: Shape, values: Sequence, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """A state I -> cod with the given amplitudes."""
    return from_rows(I, cod, [[value] for value in values], semiring)


def row(dom: Shape, values: Sequence, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """An effect dom -> I with the given coefficients."""
    return from_rows(dom, I, [list(values)], semiring)


def scalar_morphism(s, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    return Morphism(I, I, [[s]], semiring)


def scalar_of(morphism: Morphism):
    """
    Read the scalar carried by an endomorphism of I.

    Raises:
        ShapeMismatchError: If the morphism is not of type I -> I
    """
    if morphism.dom != I or morphism.cod != I:
        raise ShapeMismatchError(f"Not a scalar: {morphism.dom} -> {morphism.cod}")
    return morphism.entries[0, 0]


def identity(shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    array = _filled(shape.dim, shape.dim, semiring.zero)
    for k in range(shape.dim):
        array[k, k] = semiring.one
    return Morphism(shape, shape, array, semiring)


def zero(dom: Shape, cod: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    return Morphism(dom, cod, _filled(cod.dim, dom.dim, semiring.zero), semiring)


def compose(*morphisms: Morphism) -> Morphism:
    """
    Compose right to left: ``compose(h, g, f)`` is h∘g∘f.

    Args:
        *morphisms (Morphism): At least one morphism; adjacent endpoints must
            be equal shapes

    Returns:
        Morphism: The composite, computed as a sparse matrix product

    Raises:
        ShapeMismatchError: If some dom(g) differs from cod(f)
    """
    if not morphisms:
        raise ShapeMismatchError("compose needs at least one morphism")

    def compose_two(g: Morphism, f: Morphism) -> Morphism:
        if g.dom != f.cod:
            logger.debug("composition mismatch: dom %s, cod %s", g.dom, f.cod)
            raise ShapeMismatchError(
                f"Cannot compose {g.dom} -> {g.cod} after {f.dom} -> {f.cod}"
            )
        semiring = _same_semiring(g, f)
        return Morphism(f.dom, g.cod, _product(g.entries, f.entries, semiring), semiring)

    return reduce(compose_two, morphisms)


def pipeline(*steps: Morphism) -> Morphism:
    """Compose in diagram order: ``pipeline(f, g, h)`` is h∘g∘f."""
    return compose(*reversed(steps))


def tensor(f: Morphism, g: Morphism) -> Morphism:
    """f ⊗ g as the left-major Kronecker product."""
    semiring = _same_semiring(f, g)
    return Morphism(
        Tensor(f.dom, g.dom), Tensor(f.cod, g.cod), _kron(f.entries, g.entries, semiring), semiring
    )


def tensor_all(*morphisms: Morphism) -> Morphism:
    """Left-nested ((f ⊗ g) ⊗ h) ⊗ ..."""
    return reduce(tensor, morphisms)


def _block_diagonal(blocks: Sequence[np.ndarray], semiring: Semiring) -> np.ndarray:
    rows = []
    for i, block in enumerate(blocks):
        rows.append(
            [
                block if i == j else _filled(block.shape[0], other.shape[1], semiring.zero)
                for j, other in enumerate(blocks)
            ]
        )
    return np.block(rows)


def direct_sum_morphisms(morphisms: Sequence[Morphism]) -> Morphism:
    """⊕fᵢ : ⊕dom(fᵢ) -> ⊕cod(fᵢ), block diagonal over right-nested sums."""
    morphisms = list(morphisms)
    semiring = _same_semiring(*morphisms)
    return Morphism(
        direct_sum([f.dom for f in morphisms]),
        direct_sum([f.cod for f in morphisms]),
        _block_diagonal([f.entries for f in morphisms], semiring),
        semiring,
    )


def biproduct(f: Morphism, g: Morphism) -> Morphism:
    return direct_sum_morphisms([f, g])


def copies_of(n: int, f: Morphism) -> Morphism:
    """n·f : n·A -> n·B."""
    return direct_sum_morphisms([f] * n)


def tuple_of(morphisms: Sequence[Morphism]) -> Morphism:
    """
    ⟨f₁, ..., fₙ⟩ : A -> ⊕Bᵢ for morphisms sharing the domain A.

    Raises:
        ShapeMismatchError: If the domains differ
    """
    morphisms = list(morphisms)
    semiring = _same_semiring(*morphisms)
    dom = morphisms[0].dom
    for f in morphisms:
        if f.dom != dom:
            raise ShapeMismatchError(f"tuple needs a shared domain, got {dom} and {f.dom}")
    return Morphism(
        dom,
        direct_sum([f.cod for f in morphisms]),
        np.vstack([f.entries for f in morphisms]),
        semiring,
    )


def cotuple_of(morphisms: Sequence[Morphism]) -> Morphism:
    """
    [f₁, ..., fₙ] : ⊕Aᵢ -> B for morphisms sharing the codomain B.

    Raises:
        ShapeMismatchError: If the codomains differ
    """
    morphisms = list(morphisms)
    semiring = _same_semiring(*morphisms)
    cod = morphisms[0].cod
    for f in morphisms:
        if f.cod != cod:
            raise ShapeMismatchError(f"cotuple needs a shared codomain, got {cod} and {f.cod}")
    return Morphism(
        direct_sum([f.dom for f in morphisms]),
        cod,
        np.hstack([f.entries for f in morphisms]),
        semiring,
    )


def add(f: Morphism, g: Morphism) -> Morphism:
    """Entrywise sum of two parallel morphisms."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatchError(
            f"Cannot add {f.dom} -> {f.cod} and {g.dom} -> {g.cod}"
        )
    semiring = _same_semiring(f, g)
    return Morphism(f.dom, f.cod, f.entries + g.entries, semiring)


def sum_of(morphisms: Sequence[Morphism]) -> Morphism:
    return reduce(add, morphisms)


def negate(f: Morphism) -> Morphism:
    """−f; raises UnsupportedOperationError over the Boolean semiring."""
    return scalar_action(f.semiring.minus_one(), f)


def subtract(f: Morphism, g: Morphism) -> Morphism:
    return add(f, negate(g))


def diagonal(shape: Shape, n: int = 2, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """Δ = ⟨1, ..., 1⟩ : A -> n·A."""
    return tuple_of([identity(shape, semiring)] * n)


def codiagonal(shape: Shape, n: int = 2, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """∇ = [1, ..., 1] : n·A -> A."""
    return cotuple_of([identity(shape, semiring)] * n)


def add_via_biproduct(f: Morphism, g: Morphism) -> Morphism:
    """f + g as ∇∘(f ⊕ g)∘Δ, the biproduct-induced addition."""
    semiring = _same_semiring(f, g)
    return compose(codiagonal(f.cod, 2, semiring), biproduct(f, g), diagonal(f.dom, 2, semiring))


def injection(i: int, parts: Sequence[Shape], semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """
    The coproduct injection qᵢ : Aᵢ -> ⊕Aₖ (0-based index).

    Raises:
        ShapeMismatchError: If i is out of range
    """
    parts = list(parts)
    if not 0 <= i < len(parts):
        raise ShapeMismatchError(f"Injection index {i} out of range for {len(parts)} summands")
    blocks = [
        identity(part, semiring) if k == i else zero(parts[i], part, semiring)
        for k, part in enumerate(parts)
    ]
    return tuple_of(blocks)


def projection(i: int, parts: Sequence[Shape], semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """The product projection pᵢ : ⊕Aₖ -> Aᵢ, the adjoint of qᵢ."""
    return adjoint(injection(i, parts, semiring))


def structural_iso(kind: str, *params, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """
    Build a structural isomorphism as a permutation matrix.

    Args:
        kind (str): alpha, lambda, rho, sigma_tensor, sigma_biproduct,
            tau_left, upsilon_right, d_nm, u_I, nu, u_tensor or shuffle
        *params: Parameters as accepted by shape_category.structural_permutation
        semiring (Semiring): Semiring of the entries

    Returns:
        Morphism: A unitary permutation matrix between the two shapes

    Raises:
        ShapeMismatchError: If the parameters are inconsistent with the kind
    """
    spec = structural_permutation(kind, *params)
    array = _filled(spec.cod.dim, spec.dom.dim, semiring.zero)
    for source, target in enumerate(spec.permutation):
        array[target, source] = semiring.one
    return Morphism(spec.dom, spec.cod, array, semiring)


def inverse_iso(iso: Morphism) -> Morphism:
    """Inverse of a structural iso (its adjoint, since it is a permutation)."""
    return adjoint(iso)


# ---------------------------------------------------------------------------
# Compact closed structure


def eta(shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """η_A : I -> A* ⊗ A, the sum of ēᵢ ⊗ eᵢ."""
    n = shape.dim
    array = _filled(n * n, 1, semiring.zero)
    for k in range(n):
        array[k * n + k, 0] = semiring.one
    return Morphism(I, Tensor(Dual(shape), shape), array, semiring)


def epsilon(shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """ε_A : A ⊗ A* -> I, pairing eᵢ ⊗ ēⱼ to δᵢⱼ."""
    n = shape.dim
    array = _filled(1, n * n, semiring.zero)
    for k in range(n):
        array[0, k * n + k] = semiring.one
    return Morphism(Tensor(shape, Dual(shape)), I, array, semiring)


def name(f: Morphism) -> Morphism:
    """⌜f⌝ = (1_{A*} ⊗ f)∘η_A : I -> A* ⊗ B."""
    return compose(tensor(identity(Dual(f.dom), f.semiring), f), eta(f.dom, f.semiring))


def coname(f: Morphism) -> Morphism:
    """⌞f⌟ = ε_B∘(f ⊗ 1_{B*}) : A ⊗ B* -> I."""
    return compose(epsilon(f.cod, f.semiring), tensor(f, identity(Dual(f.cod), f.semiring)))


def unname(n: Morphism) -> Morphism:
    """
    Recover f : A -> B from its name ⌜f⌝ : I -> A* ⊗ B.

    Raises:
        ShapeMismatchError: If n is not of type I -> X ⊗ B
    """
    if n.dom != I or not isinstance(n.cod, Tensor):
        raise ShapeMismatchError(f"Not a name: {n.dom} -> {n.cod}")
    source, target = Dual(n.cod.left), n.cod.right
    block = n.entries.reshape(source.dim, target.dim)
    return Morphism(source, target, block.T, n.semiring)


def unconame(c: Morphism) -> Morphism:
    """
    Recover f : A -> B from its coname ⌞f⌟ : A ⊗ B* -> I.

    Raises:
        ShapeMismatchError: If c is not of type A ⊗ X -> I
    """
    if c.cod != I or not isinstance(c.dom, Tensor):
        raise ShapeMismatchError(f"Not a coname: {c.dom} -> {c.cod}")
    source, target = c.dom.left, Dual(c.dom.right)
    block = c.entries.reshape(source.dim, target.dim)
    return Morphism(source, target, block.T, c.semiring)


def dual(f: Morphism) -> Morphism:
    """f* : B* -> A*, the transpose."""
    return Morphism(Dual(f.cod), Dual(f.dom), f.entries.T, f.semiring)


def conj_star(f: Morphism) -> Morphism:
    """f_* : A* -> B*, the covariant entrywise conjugate."""
    return Morphism(Dual(f.dom), Dual(f.cod), _conj(f.entries), f.semiring)


def adjoint(f: Morphism) -> Morphism:
    """f† : B -> A, the conjugate transpose."""
    return Morphism(f.cod, f.dom, _conj(f.entries).T, f.semiring)


def scalar_action(s, f: Morphism) -> Morphism:
    """s•f, every entry multiplied by the scalar s."""
    scale = np.empty((), dtype=object)
    scale[()] = s
    return Morphism(f.dom, f.cod, f.entries * scale, f.semiring)


def inner_product(psi: Morphism, phi: Morphism):
    """
    ⟨ψ|φ⟩ = ψ†∘φ for two states of the same shape.

    Raises:
        ShapeMismatchError: If either is not a state or the shapes differ
    """
    if psi.dom != I or phi.dom != I or psi.cod != phi.cod:
        raise ShapeMismatchError(
            f"Inner product needs two states of one shape, got {psi.dom} -> {psi.cod} "
            f"and {phi.dom} -> {phi.cod}"
        )
    return scalar_of(compose(adjoint(psi), phi))


def is_unitary(u: Morphism) -> bool:
    if u.dom.dim != u.cod.dim:
        return False
    return compose(adjoint(u), u) == identity(u.dom, u.semiring) and compose(
        u, adjoint(u)
    ) == identity(u.cod, u.semiring)


def is_self_adjoint(m: Morphism) -> bool:
    return m.dom == m.cod and adjoint(m) == m


def is_projector(p: Morphism) -> bool:
    return is_self_adjoint(p) and compose(p, p) == p


def is_zero(f: Morphism) -> bool:
    return all(x == f.semiring.zero for x in f.entries.flat)


def trace(f: Morphism):
    """
    Tr(f) = ε_A∘σ_{A*,A}∘(1_{A*} ⊗ f)∘η_A for an endomorphism f : A -> A.

    Raises:
        ShapeMismatchError: If f is not an endomorphism
    """
    if f.dom != f.cod:
        raise ShapeMismatchError(f"Trace needs an endomorphism, got {f.dom} -> {f.cod}")
    sr = f.semiring
    sigma = structural_iso("sigma_tensor", Dual(f.dom), f.dom, semiring=sr)
    return scalar_of(
        compose(epsilon(f.dom, sr), sigma, tensor(identity(Dual(f.dom), sr), f), eta(f.dom, sr))
    )


def first_difference(lhs: Morphism, rhs: Morphism) -> Optional[Dict]:
    """
    Locate the first entry where two morphisms disagree.

    Returns:
        Optional[Dict]: None when equal; otherwise the row, column and both
            entries (rendered), or the two type signatures on a shape mismatch
    """
    if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
        return {
            "lhs_type": f"{lhs.dom} -> {lhs.cod}",
            "rhs_type": f"{rhs.dom} -> {rhs.cod}",
        }
    for (r, c), value in np.ndenumerate(lhs.entries):
        if value != rhs.entries[r, c]:
            return {
                "row": int(r),
                "col": int(c),
                "lhs": lhs.semiring.render(value),
                "rhs": rhs.semiring.render(rhs.entries[r, c]),
            }
    return None


# ---------------------------------------------------------------------------
# Matrix text format: "dom -> cod" header, then one comma-separated row per line


def render_matrix(f: Morphism) -> str:
    lines = [f"{render_shape(f.dom)} -> {render_shape(f.cod)}"]
    for matrix_row in f.entries:
        lines.append(", ".join(f.semiring.render(value) for value in matrix_row))
    return "\n".join(lines)


def parse_matrix(text: str, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    """
    Parse the matrix text format produced by render_matrix.

    Raises:
        ParseError: If the header or any row is malformed
    """
    lines = [line for line in text.strip().splitlines() if line.strip()]
    if not lines or "->" not in lines[0]:
        raise ParseError("Matrix text needs a 'dom -> cod' header line")
    dom_text, cod_text = lines[0].split("->", 1)
    dom, cod = parse_shape(dom_text), parse_shape(cod_text)
    rows = [[semiring.parse(cell) for cell in line.split(",")] for line in lines[1:]]
    try:
        return Morphism(dom, cod, rows, semiring)
    except (ShapeMismatchError, ValueError) as e:
        raise ParseError(f"Matrix rows do not fit {dom} -> {cod}: {e}")
