"""The Grothendieck-group calculus of Z/2Z-equivariant virtual Poincare series.

A class is a value, never a point set: the module manipulates images of
arc-symmetric sets under the equivariant series, in the normal form

    value = P(u) + c * u/(u-1)

where P has integer coefficients and the integer c >= 0 is the ordinary
virtual Poincare polynomial of the fixed point set evaluated at 1.   Every
operation preserves this shape and the constructor re-checks it, so a value
that escapes the module is always in normal form.

Only the group operations plus multiplication by affine factors are exposed.
A general ring product of two classes is deliberately absent: the series is
additive and multiplicative against affine factors only, and a blanket
product would silently produce wrong values (u/(u-1) squared is not the
class of a point times a point).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import IntPoly, RationalU, exact_divide
from .errors import (
    AssertionMissing,
    InvalidAtom,
    MissingDimHint,
    NegativeCoefficient,
    NormalFormError,
    NotFree,
    PoleAtPoint,
)

#: The series of a fixed point: sum of u^i over i <= 0.
TAIL_SERIES = RationalU(IntPoly.u(), IntPoly.u() - 1)

ACTION_FREE = "free"
ACTION_FIXED = "with_fixed_point"
ACTION_TRIVIAL = "trivial"
SPHERE_ACTIONS = (ACTION_FREE, ACTION_FIXED, ACTION_TRIVIAL)


@dataclass(frozen=True)
class VirtualClass:
    """An equivariant virtual Poincare series in normal form.

    ``value`` is the rational function, ``poly_part``/``fixed_tail`` its
    decomposition, ``dim_hint`` an optional dimension claim used by
    ``check_degree``.  Equality compares values only (the decomposition is
    determined by the value, and hints are advisory).
    """

    value: RationalU
    poly_part: IntPoly
    fixed_tail: int
    dim_hint: int | None = field(default=None, compare=False)

    def __post_init__(self):
        expected = RationalU(self.poly_part) + self.fixed_tail * TAIL_SERIES
        if self.value != expected:
            raise NormalFormError(
                f"{self.value} != {self.poly_part} + {self.fixed_tail}*u/(u-1)")

    def __eq__(self, other):
        if not isinstance(other, VirtualClass):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    @classmethod
    def from_parts(cls, poly_part, fixed_tail: int, dim_hint=None) -> "VirtualClass":
        if isinstance(poly_part, int):
            poly_part = IntPoly({0: poly_part})
        value = RationalU(poly_part) + fixed_tail * TAIL_SERIES
        return cls(value, poly_part, fixed_tail, dim_hint)

    @classmethod
    def from_value(cls, value: RationalU, dim_hint=None) -> "VirtualClass":
        """Decompose a rational function into normal form, or fail."""
        try:
            tail_value = (value * RationalU(IntPoly.u() - 1)).eval_at(1)
        except PoleAtPoint as exc:
            raise NormalFormError(
                f"{value} has a pole of order > 1 at u = 1") from exc
        if tail_value.denominator != 1:
            raise NormalFormError(f"tail of {value} is not an integer")
        tail = int(tail_value)
        rest = value - tail * TAIL_SERIES
        if not rest.is_polynomial():
            raise NormalFormError(f"{value} minus its tail is not a polynomial")
        return cls(value, rest.numerator, tail, dim_hint)

    @classmethod
    def zero(cls) -> "VirtualClass":
        return cls.from_parts(IntPoly.zero(), 0)

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __str__(self):
        return str(self.value)


def _resolve_hint(result_value: RationalU, candidate: int | None) -> int | None:
    if candidate is not None and result_value.degree == candidate:
        return candidate
    return None


def _combine(a: VirtualClass, b: VirtualClass, sign: int, hint) -> VirtualClass:
    value = a.value + sign * b.value
    poly = a.poly_part + sign * b.poly_part
    tail = a.fixed_tail + sign * b.fixed_tail
    return VirtualClass(value, poly, tail, _resolve_hint(value, hint))


def union_disjoint(a: VirtualClass, b: VirtualClass) -> VirtualClass:
    """Class of a disjoint union: the sum, dimension the larger of the two."""
    hint = None
    if a.dim_hint is not None and b.dim_hint is not None:
        hint = max(a.dim_hint, b.dim_hint)
    return _combine(a, b, 1, hint)


def difference(a: VirtualClass, b: VirtualClass) -> VirtualClass:
    """Class of a complement: the difference, keeping the ambient dimension."""
    return _combine(a, b, -1, a.dim_hint)


def scissor(a: VirtualClass, b: VirtualClass, op: str) -> VirtualClass:
    if op == "union_disjoint":
        return union_disjoint(a, b)
    if op == "difference":
        return difference(a, b)
    raise ValueError(f"unknown scissor operation {op!r}")


def affine_product(a: VirtualClass, d: int) -> VirtualClass:
    """Class of the product with a d-dimensional affine space (any action).

    Multiplies the value by u^d; the tail is unchanged because
    u^d * u/(u-1) = (u^d + ... + u) + u/(u-1).
    """
    if d < 0:
        raise ValueError("affine dimension must be non-negative")
    if d == 0:
        return a
    value = a.value * RationalU(IntPoly.monomial(d))
    poly = a.poly_part.shift(d) + a.fixed_tail * IntPoly.geometric_sum(1, d)
    hint = a.dim_hint + d if a.dim_hint is not None else None
    return VirtualClass(value, poly, a.fixed_tail, _resolve_hint(value, hint))


def trivial_lift(beta_poly: IntPoly, allow_negative: bool = False) -> VirtualClass:
    """Class of a set with trivial involution, from its ordinary virtual
    Poincare polynomial: value = beta * u/(u-1), tail = beta(1).

    Negative coefficients are legitimate for non-compact sets but usually a
    typo, hence the explicit override.
    """
    if beta_poly.has_negative_coefficient() and not allow_negative:
        raise NegativeCoefficient(
            f"{beta_poly} has a negative coefficient; pass allow_negative=True "
            "if it really is the virtual polynomial of a non-compact set")
    tail = int(beta_poly.evaluate(1))
    shifted = exact_lift_poly(beta_poly, tail)
    return VirtualClass.from_parts(shifted, tail,
                                   dim_hint=_poly_degree_hint(beta_poly))


def _poly_degree_hint(p: IntPoly):
    return int(p.degree) if not p.is_zero() else None


def exact_lift_poly(beta_poly: IntPoly, tail: int) -> IntPoly:
    """Polynomial part of beta * u/(u-1): u * (beta - beta(1)) / (u-1)."""
    numerator = (beta_poly - tail) * IntPoly.u()
    if numerator.is_zero():
        return IntPoly.zero()
    return exact_divide(numerator, IntPoly.u() - 1)


def free_quotient(a: VirtualClass, asserted_free: bool) -> IntPoly:
    """Ordinary virtual Poincare polynomial of the quotient of a compact set
    with a free involution.

    Freeness is a geometric fact the caller must assert; the symbolic
    necessary condition (no fixed tail) is still enforced.
    """
    if not asserted_free:
        raise AssertionMissing("free_quotient requires asserted_free=True")
    if a.fixed_tail != 0:
        raise NotFree(f"fixed tail is {a.fixed_tail}, the action cannot be free")
    return a.poly_part


def blowup_class(x: VirtualClass, c: VirtualClass, e: VirtualClass) -> VirtualClass:
    """Class of the blow-up of x along a centre with class c and exceptional
    divisor class e:  x - c + e."""
    return union_disjoint(difference(x, c), e)


def negative_tail(a: VirtualClass) -> int:
    """The common coefficient of every negative power of u."""
    return a.fixed_tail


def check_degree(a: VirtualClass) -> bool:
    """True when the degree of the series equals the claimed dimension."""
    if a.dim_hint is None:
        raise MissingDimHint("class carries no dimension hint")
    return a.value.degree == a.dim_hint


# ---------------------------------------------------------------------------
# atoms: building blocks with known series

@dataclass(frozen=True)
class Atom:
    """A building block whose series is known in closed form.

    ``kind`` is one of point_trivial, swapped_pair, sphere, affine, custom;
    the remaining fields are only populated where they apply.
    """

    kind: str
    dim: int | None = None
    action: str | None = None
    value: RationalU | None = None
    fixed_poly: IntPoly | None = None

    @classmethod
    def point(cls) -> "Atom":
        return cls("point_trivial")

    @classmethod
    def pair(cls) -> "Atom":
        return cls("swapped_pair")

    @classmethod
    def sphere(cls, d: int, action: str) -> "Atom":
        if d < 1:
            raise InvalidAtom(f"sphere dimension must be >= 1, got {d}")
        if action not in SPHERE_ACTIONS:
            raise InvalidAtom(f"unknown sphere action {action!r}")
        return cls("sphere", dim=d, action=action)

    @classmethod
    def affine(cls, d: int) -> "Atom":
        if d < 0:
            raise InvalidAtom(f"affine dimension must be >= 0, got {d}")
        return cls("affine", dim=d)

    @classmethod
    def custom(cls, value: RationalU, dim: int, fixed_poly: IntPoly) -> "Atom":
        return cls("custom", dim=dim, value=value, fixed_poly=fixed_poly)


def atom_class(atom: Atom) -> VirtualClass:
    """The equivariant series of an atom.

    point -> u/(u-1); swapped pair -> 1; free d-sphere -> 1 + u^d;
    d-sphere with a fixed point (or trivial action) -> u^d + ... + u + 2u/(u-1);
    affine d-space -> u^(d+1)/(u-1); custom -> the given value.
    """
    if atom.kind == "point_trivial":
        return VirtualClass.from_parts(IntPoly.zero(), 1, dim_hint=0)
    if atom.kind == "swapped_pair":
        return VirtualClass.from_parts(IntPoly.one(), 0, dim_hint=0)
    if atom.kind == "sphere":
        d = atom.dim
        if atom.action == ACTION_FREE:
            return VirtualClass.from_parts(IntPoly({0: 1, d: 1}), 0, dim_hint=d)
        # with a fixed point the groups do not depend on the action, and the
        # trivial action produces the same series
        return VirtualClass.from_parts(IntPoly.geometric_sum(1, d), 2, dim_hint=d)
    if atom.kind == "affine":
        return VirtualClass.from_parts(IntPoly.geometric_sum(1, atom.dim), 1,
                                       dim_hint=atom.dim)
    if atom.kind == "custom":
        tail = int(atom.fixed_poly.evaluate(1))
        rest = atom.value - tail * TAIL_SERIES
        if not rest.is_polynomial():
            raise InvalidAtom(
                f"custom value {atom.value} is not in normal form with fixed "
                f"polynomial {atom.fixed_poly}")
        return VirtualClass(atom.value, rest.numerator, tail, atom.dim)
    raise InvalidAtom(f"unknown atom kind {atom.kind!r}")


CURVE_ACTIONS = ("both_negated", "y_negated", "x_negated")


def curve_example(action: str) -> VirtualClass:
    """Series of the nodal quartic curve y^2 = x^2 - x^4 under the three
    sign involutions of the plane.

    Blowing up the node resolves the curve to a circle; the node pulls back
    to two points, fixed or swapped depending on the involution, so the class
    is circle - (two preimages) + (node).
    """
    s1_fixed = atom_class(Atom.sphere(1, ACTION_FIXED))
    s1_free = atom_class(Atom.sphere(1, ACTION_FREE))
    node = atom_class(Atom.point())
    if action == "both_negated":
        # both preimages fixed, involution on the circle has fixed points
        preimages = union_disjoint(node, node)
        resolved = s1_fixed
    elif action == "y_negated":
        # preimages swapped, involution on the circle still has fixed points
        preimages = atom_class(Atom.pair())
        resolved = s1_fixed
    elif action == "x_negated":
        # preimages swapped, involution on the circle is free
        preimages = atom_class(Atom.pair())
        resolved = s1_free
    else:
        raise InvalidAtom(f"unknown curve action {action!r}; "
                          f"expected one of {CURVE_ACTIONS}")
    return union_disjoint(difference(resolved, preimages), node)
