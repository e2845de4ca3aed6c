"""
Scalar Rings Module

This module provides the exact commutative semirings with involution that play
the role of the scalars C(I, I). Two instances are shipped: the Boolean
semiring (the scalars of Rel) and the field Q(i, √2), which holds every scalar
the qubit protocols need, including s = √2/2 with 2·conj(s)·s = 1.

Scalars are immutable values. Every semiring object knows how to build its
units, parse and render its elements, and hand out the sampling pool used by
the seeded generators.

Classes:
    BooleanScalar: Element of the Boolean semiring ({0, 1}, OR, AND)
    ComplexRootTwoScalar: Element a + b√2 + ci + d√2i of Q(i, √2)
    Semiring: Base class for a pluggable semiring
    BooleanSemiring: The Boolean semiring, conj is the identity
    ComplexRootTwoSemiring: Q(i, √2), conj is complex conjugation
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from exceptions import ParseError, UnsupportedOperationError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class BooleanScalar:
    """
    Element of the Boolean semiring.

    Addition is OR, multiplication is AND and the involution is the identity,
    so 1 + 1 = 1 and there are no additive inverses.

    Attributes:
        bit (bool): The truth value carried by the scalar
    """

    bit: bool

    def __post_init__(self):
        object.__setattr__(self, "bit", bool(self.bit))

    @property
    def semiring(self) -> "BooleanSemiring":
        return BOOLEAN

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, BooleanScalar):
            return NotImplemented
        return BooleanScalar(self.bit or other.bit)

    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, BooleanScalar):
            return NotImplemented
        return BooleanScalar(self.bit and other.bit)

    def __neg__(self):
        raise UnsupportedOperationError(
            "The Boolean semiring has no additive inverses; -1 does not exist"
        )

    def __sub__(self, other):
        raise UnsupportedOperationError(
            "The Boolean semiring has no additive inverses; subtraction is undefined"
        )

    def conj(self) -> "BooleanScalar":
        return self

    def is_zero(self) -> bool:
        return not self.bit

    def __str__(self) -> str:
        return "1" if self.bit else "0"


@dataclass(frozen=True)
class ComplexRootTwoScalar:
    """
    Element a + b√2 + ci + d√2i of the field Q(i, √2).

    The four rational components are the canonical form: two scalars are
    equal exactly when all four components are equal.

    Attributes:
        a (Fraction): Rational part
        b (Fraction): Coefficient of √2
        c (Fraction): Coefficient of i
        d (Fraction): Coefficient of √2·i
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        for field_name in ("a", "b", "c", "d"):
            value = getattr(self, field_name)
            if type(value) is not Fraction:
                object.__setattr__(self, field_name, Fraction(value))

    @property
    def semiring(self) -> "ComplexRootTwoSemiring":
        return COMPLEX_ROOT_TWO

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    @staticmethod
    def _coerce(other) -> "ComplexRootTwoScalar":
        if isinstance(other, ComplexRootTwoScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexRootTwoScalar(Fraction(other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return ComplexRootTwoScalar(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    __radd__ = __add__

    def __neg__(self) -> "ComplexRootTwoScalar":
        return ComplexRootTwoScalar(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_rational():
            return other._scaled(self.a)
        if other.is_rational():
            return self._scaled(other.a)
        # expand over the non-zero components only
        out = [_NOUGHT] * 4
        for p, x in enumerate(self.components):
            if not x:
                continue
            for q, y in enumerate(other.components):
                if not y:
                    continue
                scale, unit = _UNIT_PRODUCTS[p][q]
                out[unit] = out[unit] + scale * x * y
        return ComplexRootTwoScalar(*out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def conj(self) -> "ComplexRootTwoScalar":
        return ComplexRootTwoScalar(self.a, self.b, -self.c, -self.d)

    def root_two_conj(self) -> "ComplexRootTwoScalar":
        """The Galois automorphism √2 ↦ −√2."""
        return ComplexRootTwoScalar(self.a, -self.b, self.c, -self.d)

    def inverse(self) -> "ComplexRootTwoScalar":
        """
        Multiplicative inverse of a non-zero element.

        Multiplies by the three Galois conjugates so that the denominator
        lands in Q.

        Raises:
            ZeroDivisionError: If the scalar is zero
        """
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse in Q(i, √2)")
        partial = self.conj() * self.root_two_conj() * self.conj().root_two_conj()
        norm = (self * partial).a
        return ComplexRootTwoScalar(*(component / norm for component in partial.components))

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def _scaled(self, q: Fraction) -> "ComplexRootTwoScalar":
        if not q:
            return _ZERO
        if q == 1:
            return self
        return ComplexRootTwoScalar(q * self.a, q * self.b, q * self.c, q * self.d)

    def __str__(self) -> str:
        return COMPLEX_ROOT_TWO.render(self)


_NOUGHT = Fraction(0)
_ZERO = ComplexRootTwoScalar()


def _unit_product(p: int, q: int) -> Tuple[int, int]:
    # unit k has √2 when k & 1 and i when k & 2; √2·√2 = 2 and i·i = -1
    root, imag = (p & 1) and (q & 1), (p & 2) and (q & 2)
    return (2 if root else 1) * (-1 if imag else 1), (p ^ q)


# (scale, unit) with unit_p · unit_q = scale · unit, indexed over (a, b, c, d)
_UNIT_PRODUCTS: List[List[Tuple[int, int]]] = [[_unit_product(p, q) for q in range(4)] for p in range(4)]


class Semiring:
    """
    Base class for a pluggable commutative semiring with involution.

    Subclasses provide the element type, the units, the text grammar and the
    sampling pool used for randomized checks.

    Attributes:
        name (str): Selector used by configuration and reports
    """

    name = "abstract"

    @property
    def zero(self):
        raise NotImplementedError("Subclasses must implement zero")

    @property
    def one(self):
        raise NotImplementedError("Subclasses must implement one")

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def conj(self, x):
        return x.conj()

    def from_int(self, n: int):
        """Return 1 + 1 + ... + 1 (n times), or 0 for n = 0."""
        total = self.zero
        for _ in range(n):
            total = total + self.one
        return total

    def minus_one(self):
        raise UnsupportedOperationError(f"Semiring {self.name} has no -1")

    def teleportation_scalar(self):
        """
        Return a scalar s with 2·conj(s)·s = 1.

        Raises:
            UnsupportedOperationError: If the semiring cannot host a teleportation base
        """
        raise UnsupportedOperationError(
            f"Semiring {self.name} has no scalar s with 2s†s = 1 and -1"
        )

    def sample_pool(self) -> List:
        raise NotImplementedError("Subclasses must implement sample_pool")

    def parse(self, text: str):
        raise NotImplementedError("Subclasses must implement parse")

    def render(self, x) -> str:
        return str(x)

    def __repr__(self) -> str:
        return f"<Semiring {self.name}>"


class BooleanSemiring(Semiring):
    """The Boolean semiring {0, 1}: the scalars of Rel."""

    name = "boolean"

    @property
    def zero(self) -> BooleanScalar:
        return BooleanScalar(False)

    @property
    def one(self) -> BooleanScalar:
        return BooleanScalar(True)

    def sample_pool(self) -> List[BooleanScalar]:
        return [self.zero, self.one]

    def parse(self, text: str) -> BooleanScalar:
        token = text.strip().lower()
        if token in ("0", "false"):
            return self.zero
        if token in ("1", "true"):
            return self.one
        raise ParseError(f"Not a Boolean scalar: {text!r}")


_TERM = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?(?P<root>√2|sqrt2|r2)?(?P<imag>i)?$"
)

# unit name -> index into the (a, b, c, d) tuple
_UNITS: Dict[Tuple[bool, bool], int] = {
    (False, False): 0,
    (True, False): 1,
    (False, True): 2,
    (True, True): 3,
}


class ComplexRootTwoSemiring(Semiring):
    """
    The field Q(i, √2), with complex conjugation as involution.

    Text grammar: a sum of signed terms ``p/q``, ``p/q√2``, ``p/qi`` and
    ``p/q√2i`` (coefficient 1 may be omitted before a unit); ``sqrt2`` and
    ``r2`` are accepted for √2 and ``s`` abbreviates √2/2.
    """

    name = "complex-root-two"

    @property
    def zero(self) -> ComplexRootTwoScalar:
        return ComplexRootTwoScalar()

    @property
    def one(self) -> ComplexRootTwoScalar:
        return ComplexRootTwoScalar(1)

    @property
    def i(self) -> ComplexRootTwoScalar:
        return ComplexRootTwoScalar(0, 0, 1, 0)

    @property
    def root_two(self) -> ComplexRootTwoScalar:
        return ComplexRootTwoScalar(0, 1, 0, 0)

    def from_int(self, n: int) -> ComplexRootTwoScalar:
        return ComplexRootTwoScalar(n)

    def minus_one(self) -> ComplexRootTwoScalar:
        return ComplexRootTwoScalar(-1)

    def teleportation_scalar(self) -> ComplexRootTwoScalar:
        return ComplexRootTwoScalar(0, Fraction(1, 2), 0, 0)

    def sample_pool(self) -> List[ComplexRootTwoScalar]:
        return [self.zero, self.one, self.minus_one(), self.i, self.teleportation_scalar()]

    def parse(self, text: str) -> ComplexRootTwoScalar:
        """
        Parse a scalar written in the a + b√2 + ci + d√2i grammar.

        Args:
            text (str): Scalar text, e.g. ``"1/2√2"`` or ``"1 - 3/4i"``

        Returns:
            ComplexRootTwoScalar: The parsed element

        Raises:
            ParseError: If any term is malformed
        """
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise ParseError("Empty scalar")
        components = [Fraction(0)] * 4
        for signed_term in re.split(r"(?=[+-])", compact):
            if not signed_term:
                continue
            sign = -1 if signed_term[0] == "-" else 1
            body = signed_term[1:] if signed_term[0] in "+-" else signed_term
            if body == "s":
                components[1] += sign * Fraction(1, 2)
                continue
            match = _TERM.match(body)
            if not body or match is None or not any(match.groupdict().values()):
                logger.debug("malformed term %r in scalar %r", signed_term, text)
                raise ParseError(f"Malformed scalar term {signed_term!r} in {text!r}")
            try:
                coefficient = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
            except ZeroDivisionError:
                raise ParseError(f"Zero denominator in {text!r}")
            unit = _UNITS[(match.group("root") is not None, match.group("imag") is not None)]
            components[unit] += sign * coefficient
        return ComplexRootTwoScalar(*components)

    def render(self, x: ComplexRootTwoScalar) -> str:
        units = ("", "√2", "i", "√2i")
        pieces = []
        for coefficient, unit in zip(x.components, units):
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            if unit and magnitude == 1:
                body = unit
            else:
                body = f"{magnitude}{unit}"
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f"- {body}" if coefficient < 0 else f"+ {body}")
        return " ".join(pieces) if pieces else "0"


BOOLEAN = BooleanSemiring()
COMPLEX_ROOT_TWO = ComplexRootTwoSemiring()

SEMIRINGS: Dict[str, Semiring] = {
    BOOLEAN.name: BOOLEAN,
    COMPLEX_ROOT_TWO.name: COMPLEX_ROOT_TWO,
}


def get_semiring(name: str) -> Semiring:
    """
    Look up a semiring by its selector.

    Args:
        name (str): ``boolean`` or ``complex-root-two``

    Returns:
        Semiring: The matching semiring instance

    Raises:
        ValueError: If the selector is unknown
    """
    try:
        return SEMIRINGS[name]
    except KeyError:
        raise ValueError(
            f"Unknown semiring {name!r}; choose one of {', '.join(sorted(SEMIRINGS))}"
        )
