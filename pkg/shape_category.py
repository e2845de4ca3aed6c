"""
Shape Category Module

Objects of the category are shapes: formal expressions over the unit I, the
qubit Q, tensor, biproduct and dual. A shape knows its dimension and the
lexicographic enumeration of its basis paths. Every structural isomorphism
(associators, unitors, symmetries, distributivity, self-duality, ...) is a
re-association of basis paths between two shapes; this module computes the
induced index permutation, and matrix_morphisms turns it into a morphism.

Conventions:
    - tensor order is left-major: the left index varies slowest
    - a biproduct lists its left block before its right block
    - n·X is the right-nested biproduct X ⊕ (X ⊕ (... ⊕ X)); 1·X is X
    - Dual(X) linearizes exactly as X and Dual(Dual(X)) is X

Classes:
    Shape: Base class of all object expressions
    Unit, Qubit, Tensor, Biproduct, Dual: The generators
    IsoSpec: Domain, codomain and index permutation of a structural iso
"""

import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from exceptions import ParseError, ShapeMismatchError

logger = logging.getLogger(__name__)

BasisPath = object


class Shape:
    """Base class for object expressions; see the module docstring."""

    @property
    def dim(self) -> int:
        raise NotImplementedError("Subclasses must implement dim")

    def __str__(self) -> str:
        return render_shape(self)


@dataclass(frozen=True)
class Unit(Shape):
    """The tensor unit I (dimension 1)."""

    @property
    def dim(self) -> int:
        return 1


@dataclass(frozen=True)
class Qubit(Shape):
    """
    The qubit Q (dimension 2).

    Attributes:
        label (Optional[str]): Party annotation such as "a" for Q_a. Labels are
            documentation only; they take no part in equality or composition.
    """

    label: Optional[str] = field(default=None, compare=False)

    @property
    def dim(self) -> int:
        return 2


@dataclass(frozen=True)
class Tensor(Shape):
    left: Shape
    right: Shape

    @property
    def dim(self) -> int:
        return self.left.dim * self.right.dim


@dataclass(frozen=True)
class Biproduct(Shape):
    left: Shape
    right: Shape

    @property
    def dim(self) -> int:
        return self.left.dim + self.right.dim


@dataclass(frozen=True)
class Dual(Shape):
    """
    The dual X* of a shape. Strictly involutive: Dual(Dual(X)) returns X.
    """

    child: Shape

    def __new__(cls, child):
        if isinstance(child, Dual):
            return child.child
        return super().__new__(cls)

    @property
    def dim(self) -> int:
        return self.child.dim


I = Unit()
Q = Qubit()


def direct_sum(shapes: Sequence[Shape]) -> Shape:
    """
    Right-nested biproduct of a non-empty list of shapes.

    Args:
        shapes (Sequence[Shape]): Summands in branch order

    Returns:
        Shape: ``shapes[0] ⊕ (shapes[1] ⊕ ...)``; a single shape is returned as is

    Raises:
        ShapeMismatchError: If the list is empty (no zero object is modelled)
    """
    shapes = list(shapes)
    if not shapes:
        raise ShapeMismatchError("A direct sum needs at least one summand")
    result = shapes[-1]
    for shape in reversed(shapes[:-1]):
        result = Biproduct(shape, result)
    return result


def copies(n: int, shape: Shape) -> Shape:
    """n·X, the n-fold biproduct of a shape with itself."""
    if n < 1:
        raise ShapeMismatchError(f"n·X needs n >= 1, got {n}")
    return direct_sum([shape] * n)


def summands(shape: Shape, n: int) -> List[Shape]:
    """
    Split a right-nested biproduct into its n summands.

    Raises:
        ShapeMismatchError: If the shape is not an n-fold right-nested biproduct
    """
    parts = []
    current = shape
    for _ in range(n - 1):
        if not isinstance(current, Biproduct):
            raise ShapeMismatchError(f"{shape} is not a {n}-fold biproduct")
        parts.append(current.left)
        current = current.right
    parts.append(current)
    return parts


def tensor_all(shapes: Sequence[Shape]) -> Shape:
    """Left-nested tensor ((A ⊗ B) ⊗ C) ⊗ ... of a non-empty list."""
    shapes = list(shapes)
    if not shapes:
        raise ShapeMismatchError("A tensor product needs at least one factor")
    result = shapes[0]
    for shape in shapes[1:]:
        result = Tensor(result, shape)
    return result


# ---------------------------------------------------------------------------
# Basis paths


@lru_cache(maxsize=None)
def linearize(shape: Shape) -> Tuple[BasisPath, ...]:
    """
    Enumerate the basis paths of a shape in lexicographic order.

    Paths are: ``()`` for I, ``0``/``1`` for Q, ``(left, right)`` for a
    tensor, ``("L", p)``/``("R", p)`` for a biproduct; a dual reuses the
    paths of its child.

    Args:
        shape (Shape): The shape to enumerate

    Returns:
        Tuple[BasisPath, ...]: ``shape.dim`` distinct paths
    """
    if isinstance(shape, Unit):
        return ((),)
    if isinstance(shape, Qubit):
        return (0, 1)
    if isinstance(shape, Dual):
        return linearize(shape.child)
    if isinstance(shape, Tensor):
        return tuple(
            (left, right)
            for left in linearize(shape.left)
            for right in linearize(shape.right)
        )
    if isinstance(shape, Biproduct):
        return tuple(("L", p) for p in linearize(shape.left)) + tuple(
            ("R", p) for p in linearize(shape.right)
        )
    raise ShapeMismatchError(f"Not a shape: {shape!r}")


@lru_cache(maxsize=None)
def path_index(shape: Shape) -> Dict[BasisPath, int]:
    return {path: index for index, path in enumerate(linearize(shape))}


def wrap_summand_path(k: int, n: int, path: BasisPath) -> BasisPath:
    """Path of element ``path`` of summand k inside an n-fold right-nested biproduct."""
    if not 0 <= k < n:
        raise ShapeMismatchError(f"Summand index {k} out of range for {n} summands")
    wrapped = path if k == n - 1 else ("L", path)
    for _ in range(k):
        wrapped = ("R", wrapped)
    return wrapped


def unwrap_summand_path(path: BasisPath, n: int) -> Tuple[int, BasisPath]:
    """Inverse of wrap_summand_path: returns (k, inner path)."""
    k = 0
    while k < n - 1:
        tag, inner = path
        if tag == "L":
            return k, inner
        path = inner
        k += 1
    return k, path


def _tensor_leaves(shape: Shape) -> List[Shape]:
    if isinstance(shape, Tensor):
        return _tensor_leaves(shape.left) + _tensor_leaves(shape.right)
    return [shape]


def _split_tensor_path(shape: Shape, path: BasisPath) -> List[BasisPath]:
    if isinstance(shape, Tensor):
        return _split_tensor_path(shape.left, path[0]) + _split_tensor_path(
            shape.right, path[1]
        )
    return [path]


def _join_tensor_path(shape: Shape, leaf_paths: List[BasisPath]) -> BasisPath:
    if isinstance(shape, Tensor):
        left_count = len(_tensor_leaves(shape.left))
        return (
            _join_tensor_path(shape.left, leaf_paths[:left_count]),
            _join_tensor_path(shape.right, leaf_paths[left_count:]),
        )
    return leaf_paths[0]


# ---------------------------------------------------------------------------
# Structural isomorphisms


@dataclass(frozen=True)
class IsoSpec:
    """
    A structural isomorphism as data.

    Attributes:
        kind (str): Name of the generator, e.g. "tau_left"
        dom (Shape): Domain shape
        cod (Shape): Codomain shape
        permutation (Tuple[int, ...]): ``permutation[c]`` is the codomain index
            of domain basis element ``c``
    """

    kind: str
    dom: Shape
    cod: Shape
    permutation: Tuple[int, ...]


def _require_shapes(kind: str, params: Sequence) -> None:
    for param in params:
        if not isinstance(param, Shape):
            raise ShapeMismatchError(f"{kind}: expected shapes, got {param!r}")


def _summand_list(kind: str, params: Sequence) -> List[Shape]:
    if len(params) == 1 and isinstance(params[0], (list, tuple)):
        parts = list(params[0])
    else:
        parts = list(params)
    if not parts:
        raise ShapeMismatchError(f"{kind}: needs at least one summand")
    _require_shapes(kind, parts)
    return parts


def _iso_alpha(a, b, c):
    return Tensor(a, Tensor(b, c)), Tensor(Tensor(a, b), c), lambda p: ((p[0], p[1][0]), p[1][1])


def _iso_lambda(a):
    return a, Tensor(I, a), lambda p: ((), p)


def _iso_rho(a):
    return a, Tensor(a, I), lambda p: (p, ())


def _iso_sigma_tensor(a, b):
    return Tensor(a, b), Tensor(b, a), lambda p: (p[1], p[0])


def _iso_sigma_biproduct(a, b):
    flip = {"L": "R", "R": "L"}
    return Biproduct(a, b), Biproduct(b, a), lambda p: (flip[p[0]], p[1])


def _iso_u_unit():
    return I, Dual(I), lambda p: p


def _iso_nu(a, b):
    return Dual(Biproduct(a, b)), Biproduct(Dual(a), Dual(b)), lambda p: p


def _iso_u_tensor(a, b):
    return Dual(Tensor(a, b)), Tensor(Dual(a), Dual(b)), lambda p: p


_BINARY_KINDS: Dict[str, Tuple[int, Callable]] = {
    "alpha": (3, _iso_alpha),
    "lambda": (1, _iso_lambda),
    "rho": (1, _iso_rho),
    "sigma_tensor": (2, _iso_sigma_tensor),
    "sigma_biproduct": (2, _iso_sigma_biproduct),
    "u_I": (0, _iso_u_unit),
    "nu": (2, _iso_nu),
    "u_tensor": (2, _iso_u_tensor),
}

ISO_KINDS = tuple(_BINARY_KINDS) + ("tau_left", "upsilon_right", "d_nm", "shuffle")


def _iso_tau_left(params):
    # A ⊗ (B1 ⊕ ... ⊕ Bn) -> (A ⊗ B1) ⊕ ... ⊕ (A ⊗ Bn)
    if len(params) < 2:
        raise ShapeMismatchError("tau_left needs a shape and at least one summand")
    a = params[0]
    _require_shapes("tau_left", [a])
    parts = _summand_list("tau_left", params[1:])
    n = len(parts)

    def move(p):
        k, inner = unwrap_summand_path(p[1], n)
        return wrap_summand_path(k, n, (p[0], inner))

    return Tensor(a, direct_sum(parts)), direct_sum([Tensor(a, b) for b in parts]), move


def _iso_upsilon_right(params):
    # (A1 ⊕ ... ⊕ An) ⊗ C -> (A1 ⊗ C) ⊕ ... ⊕ (An ⊗ C)
    if len(params) < 2:
        raise ShapeMismatchError("upsilon_right needs at least one summand and a shape")
    c = params[-1]
    _require_shapes("upsilon_right", [c])
    parts = _summand_list("upsilon_right", params[:-1])
    n = len(parts)

    def move(p):
        k, inner = unwrap_summand_path(p[0], n)
        return wrap_summand_path(k, n, (inner, p[1]))

    return Tensor(direct_sum(parts), c), direct_sum([Tensor(a, c) for a in parts]), move


def _iso_d_nm(params):
    if len(params) != 2 or not all(isinstance(x, int) and x >= 1 for x in params):
        raise ShapeMismatchError(f"d_nm needs two positive integers, got {params!r}")
    n, m = params

    def move(p):
        i, _ = unwrap_summand_path(p[0], n)
        j, _ = unwrap_summand_path(p[1], m)
        return wrap_summand_path(i * m + j, n * m, ())

    return Tensor(copies(n, I), copies(m, I)), copies(n * m, I), move


def _iso_shuffle(params):
    # Re-bracket and permute tensor factors: codomain leaf k is domain leaf order[k].
    if len(params) != 3:
        raise ShapeMismatchError("shuffle needs (dom, cod, leaf order)")
    dom, cod, order = params
    _require_shapes("shuffle", [dom, cod])
    dom_leaves, cod_leaves = _tensor_leaves(dom), _tensor_leaves(cod)
    order = tuple(order)
    if sorted(order) != list(range(len(dom_leaves))) or len(cod_leaves) != len(dom_leaves):
        raise ShapeMismatchError(
            f"shuffle order {order} is not a permutation of {len(dom_leaves)} factors"
        )
    for k, source in enumerate(order):
        if cod_leaves[k] != dom_leaves[source]:
            raise ShapeMismatchError(
                f"shuffle: factor {k} of {cod} is {cod_leaves[k]}, "
                f"but factor {source} of {dom} is {dom_leaves[source]}"
            )

    def move(p):
        leaf_paths = _split_tensor_path(dom, p)
        return _join_tensor_path(cod, [leaf_paths[source] for source in order])

    return dom, cod, move


def structural_permutation(kind: str, *params) -> IsoSpec:
    """
    Compute the permutation induced by a structural isomorphism.

    Args:
        kind (str): One of ``ISO_KINDS``
        *params: Shapes (or, for ``d_nm``, two integers; for ``shuffle``, the
            domain, codomain and leaf order) consistent with the kind

    Returns:
        IsoSpec: Domain, codomain and index permutation

    Raises:
        ShapeMismatchError: If the kind is unknown or the parameters are inconsistent
    """
    if kind in _BINARY_KINDS:
        arity, builder = _BINARY_KINDS[kind]
        if len(params) != arity:
            raise ShapeMismatchError(f"{kind} takes {arity} shapes, got {len(params)}")
        _require_shapes(kind, params)
        dom, cod, move = builder(*params)
    elif kind == "tau_left":
        dom, cod, move = _iso_tau_left(params)
    elif kind == "upsilon_right":
        dom, cod, move = _iso_upsilon_right(params)
    elif kind == "d_nm":
        dom, cod, move = _iso_d_nm(params)
    elif kind == "shuffle":
        dom, cod, move = _iso_shuffle(params)
    else:
        raise ShapeMismatchError(f"Unknown structural isomorphism {kind!r}")

    targets = path_index(cod)
    try:
        permutation = tuple(targets[move(path)] for path in linearize(dom))
    except (KeyError, TypeError, ValueError) as e:
        raise ShapeMismatchError(f"{kind}: paths of {dom} do not land in {cod}: {e}")
    if len(set(permutation)) != cod.dim or dom.dim != cod.dim:
        raise ShapeMismatchError(f"{kind}: {dom} -> {cod} is not a bijection")
    logger.debug("structural iso %s: %s -> %s", kind, dom, cod)
    return IsoSpec(kind, dom, cod, permutation)


# ---------------------------------------------------------------------------
# Text grammar: I, Q, (A * B), (A + B), A^


def render_shape(shape: Shape) -> str:
    if isinstance(shape, Unit):
        return "I"
    if isinstance(shape, Qubit):
        return "Q"
    if isinstance(shape, Tensor):
        return f"({render_shape(shape.left)} * {render_shape(shape.right)})"
    if isinstance(shape, Biproduct):
        return f"({render_shape(shape.left)} + {render_shape(shape.right)})"
    if isinstance(shape, Dual):
        return f"{render_shape(shape.child)}^"
    raise ShapeMismatchError(f"Not a shape: {shape!r}")


_SHAPE_TOKEN = re.compile(r"\s*(?:(I|Q)|([()*+^])|(⊗|⊕))")


def _tokenize_shape(text: str) -> List[str]:
    tokens, position = [], 0
    text = text.rstrip()
    while position < len(text):
        match = _SHAPE_TOKEN.match(text, position)
        if match is None:
            raise ParseError(f"Unexpected character at {position} in shape {text!r}")
        token = match.group(1) or match.group(2) or {"⊗": "*", "⊕": "+"}[match.group(3)]
        tokens.append(token)
        position = match.end()
    return tokens


def parse_shape(text: str) -> Shape:
    """
    Parse a shape expression.

    ``^`` binds tightest, then ``*`` (tensor), then ``+`` (biproduct); both
    binary operators associate to the left. ``⊗`` and ``⊕`` are accepted as
    spellings of ``*`` and ``+``.

    Args:
        text (str): Expression such as ``"(Q * Q^)"`` or ``"Q*Q"``

    Returns:
        Shape: The parsed shape

    Raises:
        ParseError: On any syntax error
    """
    tokens = _tokenize_shape(text)
    position = 0

    def peek():
        return tokens[position] if position < len(tokens) else None

    def take(expected=None):
        nonlocal position
        token = peek()
        if token is None or (expected is not None and token != expected):
            raise ParseError(f"Expected {expected or 'a token'} in shape {text!r}")
        position += 1
        return token

    def atom():
        token = take()
        if token == "I":
            return I
        if token == "Q":
            return Q
        if token == "(":
            inner = biproduct_expr()
            take(")")
            return inner
        raise ParseError(f"Unexpected {token!r} in shape {text!r}")

    def postfix():
        shape = atom()
        while peek() == "^":
            take("^")
            shape = Dual(shape)
        return shape

    def tensor_expr():
        shape = postfix()
        while peek() == "*":
            take("*")
            shape = Tensor(shape, postfix())
        return shape

    def biproduct_expr():
        shape = tensor_expr()
        while peek() == "+":
            take("+")
            shape = Biproduct(shape, tensor_expr())
        return shape

    if not tokens:
        raise ParseError("Empty shape expression")
    result = biproduct_expr()
    if position != len(tokens):
        raise ParseError(f"Trailing tokens in shape {text!r}")
    return result
