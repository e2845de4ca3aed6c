"""
Unit tests for shapes and structural permutations.

Tests the object layer including:
- Dimensions, strict duals and biproduct helpers
- Index permutations of the structural isomorphisms
- The shape text grammar
"""

import pytest
import sys
import os

# Add the project root directory to Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from exceptions import ParseError, ShapeMismatchError
from shape_category import (
    Biproduct,
    Dual,
    I,
    ISO_KINDS,
    Q,
    Qubit,
    Tensor,
    copies,
    direct_sum,
    linearize,
    parse_shape,
    render_shape,
    structural_permutation,
    summands,
    tensor_all,
    unwrap_summand_path,
    wrap_summand_path,
)


def test_dimensions():
    assert I.dim == 1
    assert Q.dim == 2
    assert Tensor(Q, Q).dim == 4
    assert Biproduct(Q, I).dim == 3
    assert Dual(Tensor(Q, Biproduct(I, I))).dim == 4
    assert copies(4, I).dim == 4


def test_dual_is_strictly_involutive():
    assert Dual(Dual(Q)) == Q
    assert Dual(Dual(Tensor(Q, I))) == Tensor(Q, I)
    assert Dual(Q) != Q
    assert Dual(I) != I


def test_qubit_labels_do_not_affect_equality():
    assert Qubit("a") == Qubit("b") == Q
    assert Tensor(Qubit("a"), Qubit("b")) == Tensor(Q, Q)


def test_direct_sum_nests_to_the_right():
    assert direct_sum([Q]) == Q
    assert direct_sum([Q, I, Q]) == Biproduct(Q, Biproduct(I, Q))
    assert copies(3, I) == Biproduct(I, Biproduct(I, I))
    assert summands(copies(3, Q), 3) == [Q, Q, Q]
    with pytest.raises(ShapeMismatchError):
        direct_sum([])
    with pytest.raises(ShapeMismatchError):
        copies(0, I)
    with pytest.raises(ShapeMismatchError):
        summands(Q, 2)


def test_tensor_all_nests_to_the_left():
    assert tensor_all([Q, I, Q]) == Tensor(Tensor(Q, I), Q)
    with pytest.raises(ShapeMismatchError):
        tensor_all([])


def test_linearize_is_left_major():
    assert linearize(Tensor(Q, Q)) == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert linearize(Biproduct(I, Q)) == (("L", ()), ("R", 0), ("R", 1))
    assert linearize(Dual(Q)) == linearize(Q)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_summand_paths_round_trip(n):
    for k in range(n):
        assert unwrap_summand_path(wrap_summand_path(k, n, ()), n) == (k, ())


def test_sigma_tensor_permutation():
    spec = structural_permutation("sigma_tensor", Q, Q)
    assert spec.dom == Tensor(Q, Q)
    assert spec.permutation == (0, 2, 1, 3)


def test_sigma_biproduct_permutation():
    spec = structural_permutation("sigma_biproduct", Q, I)
    assert spec.cod == Biproduct(I, Q)
    assert spec.permutation == (1, 2, 0)


def test_alpha_lambda_rho_are_identities_on_indices():
    assert structural_permutation("alpha", Q, Q, Q).permutation == tuple(range(8))
    assert structural_permutation("lambda", Q).cod == Tensor(I, Q)
    assert structural_permutation("rho", Q).cod == Tensor(Q, I)


def test_tau_left_matches_brute_force():
    # A ⊗ (B1 ⊕ B2) -> (A ⊗ B1) ⊕ (A ⊗ B2), computed independently by index arithmetic
    spec = structural_permutation("tau_left", Q, [I, Q])
    expected = []
    for a in range(2):
        for b in range(3):
            if b == 0:
                expected.append(a)
            else:
                expected.append(2 + a * 2 + (b - 1))
    assert spec.permutation == tuple(expected)


def test_upsilon_right_matches_brute_force():
    # (A1 ⊕ A2) ⊗ C -> (A1 ⊗ C) ⊕ (A2 ⊗ C) with A1 = A2 = I, C = Q is the identity order
    spec = structural_permutation("upsilon_right", [I, I], Q)
    assert spec.dom == Tensor(Biproduct(I, I), Q)
    assert spec.cod == Biproduct(Tensor(I, Q), Tensor(I, Q))
    assert spec.permutation == (0, 1, 2, 3)

    spec = structural_permutation("upsilon_right", [Q, I], Q)
    # domain (q, c) pairs: rows (L,0),(L,1),(R,()) each times c in {0,1}
    assert spec.permutation == (0, 1, 2, 3, 4, 5)


def test_d_nm_is_row_major():
    spec = structural_permutation("d_nm", 2, 3)
    assert spec.dom == Tensor(copies(2, I), copies(3, I))
    assert spec.cod == copies(6, I)
    assert spec.permutation == tuple(range(6))


def test_shuffle_permutes_leaves():
    dom = Tensor(Tensor(Q, I), Q)
    cod = Tensor(Q, Tensor(Q, I))
    spec = structural_permutation("shuffle", dom, cod, (2, 0, 1))
    # (q1, (), q2) -> (q2, (q1, ()))
    assert spec.permutation == (0, 2, 1, 3)


def test_shuffle_rejects_mismatched_factors():
    with pytest.raises(ShapeMismatchError):
        structural_permutation("shuffle", Tensor(Q, I), Tensor(Q, I), (1, 0))
    with pytest.raises(ShapeMismatchError):
        structural_permutation("shuffle", Tensor(Q, I), Tensor(Q, I), (0, 0))


def test_duality_isos():
    assert structural_permutation("u_I").cod == Dual(I)
    assert structural_permutation("nu", Q, I).cod == Biproduct(Dual(Q), Dual(I))
    assert structural_permutation("u_tensor", Q, I).dom == Dual(Tensor(Q, I))


def test_unknown_or_malformed_isos_raise():
    with pytest.raises(ShapeMismatchError):
        structural_permutation("beta", Q)
    with pytest.raises(ShapeMismatchError):
        structural_permutation("alpha", Q, Q)
    with pytest.raises(ShapeMismatchError):
        structural_permutation("sigma_tensor", Q, 2)
    with pytest.raises(ShapeMismatchError):
        structural_permutation("d_nm", 0, 2)
    assert "tau_left" in ISO_KINDS


@pytest.mark.parametrize(
    "text,expected",
    [
        ("I", I),
        ("Q*Q", Tensor(Q, Q)),
        ("(Q * Q^)", Tensor(Q, Dual(Q))),
        ("Q ⊗ Q ⊕ I", Biproduct(Tensor(Q, Q), I)),
        ("Q^^", Q),
        ("(I + (I + I))", copies(3, I)),
    ],
)
def test_parse_shape(text, expected):
    assert parse_shape(text) == expected


@pytest.mark.parametrize("text", ["", "Q*", "(Q", "Q)", "X", "Q Q"])
def test_parse_shape_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_shape(text)


def test_render_shape():
    shape = Biproduct(Tensor(Q, Dual(Q)), I)
    assert render_shape(shape) == "((Q * Q^) + I)"
    assert parse_shape(render_shape(shape)) == shape
    assert str(Q) == "Q"
