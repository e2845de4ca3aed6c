"""
Unit tests for the matrix category FMat(S).

Tests the morphism layer including:
- Composition, tensor and biproduct structure
- Names, conames, duals, conjugates and adjoints
- Predicates, traces and the matrix text format
"""

import hypothesis
import hypothesis.strategies as strat
import logging
import numpy as np
import pytest
import sys
import os

# Add the project root directory to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from exceptions import ParseError, ShapeMismatchError, UnsupportedOperationError
from generators import SMALL_SHAPES, TINY_SHAPES
from matrix_morphisms import (
    Morphism,
    add,
    add_via_biproduct,
    adjoint,
    biproduct,
    column,
    compose,
    coname,
    conj_star,
    copies_of,
    cotuple_of,
    dual,
    epsilon,
    eta,
    first_difference,
    from_rows,
    identity,
    injection,
    inner_product,
    is_projector,
    is_self_adjoint,
    is_unitary,
    is_zero,
    name,
    negate,
    parse_matrix,
    pipeline,
    projection,
    render_matrix,
    row,
    scalar_action,
    scalar_morphism,
    scalar_of,
    structural_iso,
    subtract,
    tensor,
    trace,
    tuple_of,
    unconame,
    unname,
    zero,
)
from scalar_rings import BOOLEAN, COMPLEX_ROOT_TWO
from shape_category import Biproduct, Dual, I, Q, Tensor, copies


def morphisms(dom, cod, semiring=COMPLEX_ROOT_TWO):
    pool = semiring.sample_pool()
    entries = strat.lists(
        strat.lists(strat.sampled_from(pool), min_size=dom.dim, max_size=dom.dim),
        min_size=cod.dim,
        max_size=cod.dim,
    )
    return entries.map(lambda rows: Morphism(dom, cod, rows, semiring))


shapes = strat.sampled_from(TINY_SHAPES)
semirings = strat.sampled_from([BOOLEAN, COMPLEX_ROOT_TWO])


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(strat.data(), shapes, shapes, shapes, shapes, semirings)
def test_composition_is_associative_and_unital(data, a, b, c, d, semiring):
    f = data.draw(morphisms(a, b, semiring))
    g = data.draw(morphisms(b, c, semiring))
    h = data.draw(morphisms(c, d, semiring))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(identity(b, semiring), f) == f == compose(f, identity(a, semiring))
    assert pipeline(f, g, h) == compose(h, g, f)
    assert (g @ f) == compose(g, f)


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(strat.data(), shapes, shapes, shapes, shapes, semirings)
def test_tensor_is_bifunctorial(data, a, b, c, d, semiring):
    f = data.draw(morphisms(a, b, semiring))
    f2 = data.draw(morphisms(b, a, semiring))
    g = data.draw(morphisms(c, d, semiring))
    g2 = data.draw(morphisms(d, c, semiring))
    assert compose(tensor(f2, g2), tensor(f, g)) == tensor(compose(f2, f), compose(g2, g))
    assert tensor(identity(a, semiring), identity(c, semiring)) == identity(Tensor(a, c), semiring)


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(strat.data(), shapes, shapes, shapes, semirings)
def test_sparse_products_match_dense_numpy(data, a, b, c, semiring):
    f = data.draw(morphisms(a, b, semiring))
    g = data.draw(morphisms(b, c, semiring))
    assert compose(g, f) == Morphism(a, c, np.dot(g.entries, f.entries), semiring)
    assert tensor(f, g) == Morphism(Tensor(a, b), Tensor(b, c), np.kron(f.entries, g.entries), semiring)


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(strat.data(), shapes, shapes, semirings)
def test_names_round_trip(data, a, b, semiring):
    f = data.draw(morphisms(a, b, semiring))
    assert name(f).cod == Tensor(Dual(a), b)
    assert coname(f).dom == Tensor(a, Dual(b))
    assert unname(name(f)) == f
    assert unconame(coname(f)) == f


@hypothesis.settings(max_examples=50, deadline=None)
@hypothesis.given(strat.data(), shapes, shapes, semirings)
def test_dagger_laws(data, a, b, semiring):
    f = data.draw(morphisms(a, b, semiring))
    assert adjoint(adjoint(f)) == f
    assert dual(dual(f)) == f
    assert conj_star(conj_star(f)) == f
    assert adjoint(f) == dual(conj_star(f))


def test_name_entry_convention():
    # entry at (i in dom, j in cod) is f[j][i]
    f = from_rows(Q, Q, [["1", "2"], ["3", "4"]])
    entries = [scalar_of(compose(row(Tensor(Dual(Q), Q), [1 if k == n else 0 for k in range(4)]), name(f))) for n in range(4)]
    assert entries == [COMPLEX_ROOT_TWO.from_int(v) for v in (1, 3, 2, 4)]


def test_eta_and_epsilon(semiring):
    assert eta(Q, semiring) == column(Tensor(Dual(Q), Q), [1, 0, 0, 1], semiring)
    assert epsilon(Q, semiring) == row(Tensor(Q, Dual(Q)), [1, 0, 0, 1], semiring)
    assert name(identity(Q, semiring)) == eta(Q, semiring)
    assert coname(identity(Q, semiring)) == epsilon(Q, semiring)


def test_compose_rejects_mismatched_shapes(caplog):
    caplog.set_level(logging.DEBUG, logger="matrix_morphisms")
    with pytest.raises(ShapeMismatchError) as excinfo:
        compose(identity(Q), identity(I))
    assert "Q" in str(excinfo.value)
    assert "composition mismatch: dom Q, cod I" in caplog.text
    with pytest.raises(ShapeMismatchError):
        compose()


def test_mixed_semirings_raise():
    with pytest.raises(ShapeMismatchError):
        compose(identity(Q, BOOLEAN), identity(Q, COMPLEX_ROOT_TWO))


def test_entries_must_fit_the_shapes():
    with pytest.raises(ShapeMismatchError):
        Morphism(Q, Q, [[COMPLEX_ROOT_TWO.one]])


def test_entries_are_read_only():
    f = identity(Q)
    with pytest.raises(ValueError):
        f.entries[0, 0] = COMPLEX_ROOT_TWO.zero


def test_morphisms_are_unhashable_value_objects():
    assert identity(Q) == identity(Q)
    assert identity(Q) != zero(Q, Q)
    assert identity(Q) != identity(Dual(Q))
    with pytest.raises(TypeError):
        hash(identity(Q))


def test_biproduct_structure(semiring):
    parts = [Q, I]
    for i in range(2):
        for j in range(2):
            expected = identity(parts[i], semiring) if i == j else zero(parts[i], parts[j], semiring)
            assert compose(projection(j, parts, semiring), injection(i, parts, semiring)) == expected
    resolution = add(
        compose(injection(0, parts, semiring), projection(0, parts, semiring)),
        compose(injection(1, parts, semiring), projection(1, parts, semiring)),
    )
    assert resolution == identity(Biproduct(Q, I), semiring)
    with pytest.raises(ShapeMismatchError):
        injection(2, parts, semiring)


def test_tuples_and_cotuples(field):
    f = from_rows(Q, I, [[1, 2]], field)
    g = identity(Q, field)
    pair = tuple_of([f, g])
    assert pair.cod == Biproduct(I, Q)
    assert compose(projection(0, [I, Q], field), pair) == f
    assert cotuple_of([adjoint(f), g]).dom == Biproduct(I, Q)
    assert copies_of(3, g) == identity(copies(3, Q), field)
    with pytest.raises(ShapeMismatchError):
        tuple_of([f, identity(I, field)])


def test_addition_via_biproduct(field):
    f = from_rows(Q, Q, [[1, "i"], [0, "s"]], field)
    g = from_rows(Q, Q, [["s", 1], [-1, 0]], field)
    assert add_via_biproduct(f, g) == add(f, g) == f + g
    assert subtract(add(f, g), g) == f
    assert add(f, negate(f)) == zero(Q, Q, field)
    assert biproduct(f, g).dom == Biproduct(Q, Q)


def test_negation_unsupported_over_booleans(rel):
    with pytest.raises(UnsupportedOperationError):
        negate(identity(Q, rel))


def test_scalar_action_and_scalars(field):
    s = field.teleportation_scalar()
    assert scalar_of(scalar_morphism(s, field)) == s
    assert scalar_action(s, identity(Q, field)).entry(1, 1) == s
    with pytest.raises(ShapeMismatchError):
        scalar_of(identity(Q, field))


def test_inner_product(field):
    psi = column(Q, [1, "i"], field)
    phi = column(Q, ["i", 1], field)
    # conj(1)·i + conj(i)·1 = i - i
    assert inner_product(psi, phi) == field.zero
    assert inner_product(psi, psi) == field.from_int(2)
    with pytest.raises(ShapeMismatchError):
        inner_product(psi, column(I, [1], field))


def test_predicates(field):
    s = field.teleportation_scalar()
    hadamard = scalar_action(s, from_rows(Q, Q, [[1, 1], [1, -1]], field))
    assert is_unitary(hadamard)
    assert is_self_adjoint(hadamard)
    assert not is_unitary(from_rows(Q, Q, [[1, 1], [0, 1]], field))
    assert not is_unitary(zero(Q, I, field))
    projector = from_rows(Q, Q, [[1, 0], [0, 0]], field)
    assert is_projector(projector)
    assert not is_projector(from_rows(Q, Q, [[1, 1], [0, 0]], field))
    assert is_zero(zero(Q, Q, field))


def test_structural_isos_are_unitary(semiring):
    for iso in (
        structural_iso("alpha", Q, I, Q, semiring=semiring),
        structural_iso("sigma_tensor", Q, Biproduct(I, I), semiring=semiring),
        structural_iso("tau_left", Q, [I, Q], semiring=semiring),
        structural_iso("d_nm", 2, 2, semiring=semiring),
    ):
        assert is_unitary(iso)


def test_sigma_tensor_is_natural(field):
    f = from_rows(Q, Q, [[1, "i"], [0, "s"]], field)
    g = from_rows(I, Q, [[2], [-1]], field)
    lhs = compose(structural_iso("sigma_tensor", Q, Q, semiring=field), tensor(f, g))
    rhs = compose(tensor(g, f), structural_iso("sigma_tensor", Q, I, semiring=field))
    assert lhs == rhs


def test_trace(field):
    f = from_rows(Q, Q, [[3, "i"], [5, "s"]], field)
    assert trace(f) == field.parse("3 + s")
    assert trace(identity(Tensor(Q, Q), field)) == field.from_int(4)
    with pytest.raises(ShapeMismatchError):
        trace(zero(Q, I, field))


def test_first_difference(field):
    f = from_rows(Q, Q, [[1, 0], [0, 1]], field)
    g = from_rows(Q, Q, [[1, 0], [0, "i"]], field)
    assert first_difference(f, f) is None
    assert first_difference(f, g) == {"row": 1, "col": 1, "lhs": "1", "rhs": "i"}
    assert first_difference(f, identity(I, field)) == {"lhs_type": "Q -> Q", "rhs_type": "I -> I"}


def test_render_and_parse_matrix(field):
    f = from_rows(Tensor(Q, Dual(Q)), I, [["s", 0, 0, "s"]], field)
    text = render_matrix(f)
    assert text == "(Q * Q^) -> I\n1/2√2, 0, 0, 1/2√2"
    assert parse_matrix(text, field) == f
    assert str(f) == text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "Q Q\n1, 0",
        "Q -> Q\n1, 0\n0",
        "Q -> I\n1, x",
        "Q -> I\n1, 0\n0, 1",
    ],
)
def test_parse_matrix_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_matrix(text)


def test_small_shapes_cover_every_constructor():
    kinds = {type(shape).__name__ for shape in SMALL_SHAPES}
    assert {"Unit", "Qubit", "Dual", "Tensor", "Biproduct"} <= kinds
