"""
Generators Module

Seeded random content for the property suites and randomized protocol runs:
scalars from a small per-semiring pool, morphisms between small shapes,
unitaries from an explicit subgroup (permutations, diagonal phases in
{±1, ±i}, Bell factors and Hadamard blocks) and permutation bases.

All randomness flows through a ``numpy.random.Generator`` created by
``make_rng``; identical seeds reproduce identical content on every platform.
"""

import logging
from typing import List, Optional, Sequence

import numpy as np

from matrix_morphisms import Morphism, compose, from_rows
from scalar_rings import COMPLEX_ROOT_TWO, Semiring
from shape_category import Biproduct, Dual, I, Q, Shape, Tensor, copies

logger = logging.getLogger(__name__)

# Shapes of dimension at most 4, mixing every constructor.
SMALL_SHAPES: List[Shape] = [
    I,
    Q,
    Dual(Q),
    Tensor(Q, I),
    Biproduct(I, I),
    Biproduct(Q, I),
    Biproduct(I, Biproduct(I, I)),
    Tensor(Q, Q),
]

# Shapes of dimension at most 3, for checks that stack three or more morphisms.
TINY_SHAPES: List[Shape] = [shape for shape in SMALL_SHAPES if shape.dim <= 3]


def make_rng(seed) -> np.random.Generator:
    """Create the PCG64 generator all randomized content is drawn from."""
    logger.debug("seeding generator with %s", seed)
    return np.random.default_rng(seed)


def random_choice(rng: np.random.Generator, items: Sequence):
    return items[int(rng.integers(len(items)))]


def random_scalar(rng: np.random.Generator, semiring: Semiring = COMPLEX_ROOT_TWO):
    """Draw from {0, 1, −1, i, s} over Q(i,√2) or {0, 1} over the Booleans."""
    return random_choice(rng, semiring.sample_pool())


def random_shape(rng: np.random.Generator, shapes: Sequence[Shape] = SMALL_SHAPES) -> Shape:
    return random_choice(rng, shapes)


def random_morphism(
    rng: np.random.Generator, dom: Shape, cod: Shape, semiring: Semiring = COMPLEX_ROOT_TWO
) -> Morphism:
    pool = semiring.sample_pool()
    picks = rng.integers(len(pool), size=(cod.dim, dom.dim))
    return Morphism(dom, cod, [[pool[k] for k in row] for row in picks], semiring)


def random_state(rng: np.random.Generator, shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO) -> Morphism:
    return random_morphism(rng, I, shape, semiring)


def permutation_entries(permutation: Sequence[int], semiring: Semiring) -> List[List]:
    """Rows of the matrix sending basis element c to permutation[c]."""
    n = len(permutation)
    rows = [[semiring.zero] * n for _ in range(n)]
    for source, target in enumerate(permutation):
        rows[target][source] = semiring.one
    return rows


def random_permutation(
    rng: np.random.Generator, dom: Shape, cod: Optional[Shape] = None, semiring: Semiring = COMPLEX_ROOT_TWO
) -> Morphism:
    cod = dom if cod is None else cod
    permutation = [int(k) for k in rng.permutation(dom.dim)]
    return Morphism(dom, cod, permutation_entries(permutation, semiring), semiring)


def _phase_diagonal(rng: np.random.Generator, shape: Shape, semiring: Semiring) -> Morphism:
    phases = [semiring.one, semiring.minus_one(), semiring.i, semiring.minus_one() * semiring.i]
    rows = [[semiring.zero] * shape.dim for _ in range(shape.dim)]
    for k in range(shape.dim):
        rows[k][k] = random_choice(rng, phases)
    return Morphism(shape, shape, rows, semiring)


def _two_by_two_factors(semiring: Semiring) -> List[List[List]]:
    s = semiring.teleportation_scalar()
    return [
        [[0, 1], [1, 0]],
        [[1, 0], [0, -1]],
        [[0, -1], [1, 0]],
        [[s, s], [s, -s]],
    ]


def _block_factor(rng: np.random.Generator, shape: Shape, semiring: Semiring) -> Morphism:
    # Direct sum of 2×2 unitaries on consecutive basis pairs; a trailing odd element is fixed.
    n = shape.dim
    rows = [[semiring.zero] * n for _ in range(n)]
    factors = _two_by_two_factors(semiring)
    for start in range(0, n - 1, 2):
        block = from_rows(Q, Q, random_choice(rng, factors), semiring).entries
        for r in range(2):
            for c in range(2):
                rows[start + r][start + c] = block[r, c]
    if n % 2:
        rows[n - 1][n - 1] = semiring.one
    return Morphism(shape, shape, rows, semiring)


def random_unitary(
    rng: np.random.Generator, dom: Shape, cod: Optional[Shape] = None, semiring: Semiring = COMPLEX_ROOT_TWO
) -> Morphism:
    """
    Draw a unitary from the test subgroup.

    Over Q(i,√2) the result is a permutation times a diagonal phase matrix
    times a direct sum of Bell/Hadamard blocks (each factor optional beyond
    the permutation); over the Booleans only permutations are unitary.

    Args:
        rng (np.random.Generator): Source of randomness
        dom (Shape): Domain shape
        cod (Optional[Shape]): Codomain shape of equal dimension, defaults to dom
        semiring (Semiring): Semiring of the entries

    Returns:
        Morphism: A unitary dom -> cod
    """
    cod = dom if cod is None else cod
    unitary = random_permutation(rng, dom, cod, semiring)
    if semiring is not COMPLEX_ROOT_TWO:
        return unitary
    if rng.integers(2):
        unitary = compose(unitary, _phase_diagonal(rng, dom, semiring))
    if rng.integers(2):
        unitary = compose(unitary, _block_factor(rng, dom, semiring))
    return unitary


def random_unit_state(
    rng: np.random.Generator, shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO
) -> Morphism:
    """A normalized state: a random unitary applied to the first basis vector."""
    first = Morphism(I, shape, [[semiring.one]] + [[semiring.zero]] * (shape.dim - 1), semiring)
    return compose(random_unitary(rng, shape, semiring=semiring), first)


def random_basis_unitary(
    rng: np.random.Generator, shape: Shape, semiring: Semiring = COMPLEX_ROOT_TWO
) -> Morphism:
    """A permutation basis n·I -> A."""
    return random_permutation(rng, copies(shape.dim, I), shape, semiring)


def random_teleportation_scalar(rng: np.random.Generator, semiring: Semiring = COMPLEX_ROOT_TWO):
    """One of ±√2/2, ±i√2/2: every s with 2s†s = 1 the field offers on the unit circle axes."""
    s = semiring.teleportation_scalar()
    return random_choice(rng, [s, semiring.minus_one() * s, semiring.i * s, semiring.minus_one() * semiring.i * s])
