"""Exact arithmetic over integer polynomials in u and their fraction field.

Values of the equivariant series live in Z[[u^-1]][u]: power series in 1/u
with finitely many positive powers of u.  Every value this toolkit produces
is in fact a rational function of u, so all algebra happens exactly in the
fraction field Q(u) restricted to integer-polynomial numerators and
denominators; the Laurent expansion at u = infinity is a *view* of such a
fraction, never an arithmetic domain of its own.  That way truncation error
is impossible by construction.

Canonical text form (the output contract of the whole package): descending
powers, ``^`` for exponents, ``1`` denominators omitted, e.g.
``(u^2 + 1)/(u - 1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from types import MappingProxyType

from .errors import DivisionByZero, NonIntegerExpansion, PoleAtPoint

#: Degree of the zero polynomial.  Compares below every integer.
NEG_INFINITY = float("-inf")


class IntPoly:
    """A polynomial in u with arbitrary-precision integer coefficients.

    Stored sparsely as exponent -> coefficient with no zero entries; the zero
    polynomial is the empty map.  Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for exp, c in dict(coeffs).items():
                if exp < 0:
                    raise ValueError(f"negative exponent {exp} in IntPoly")
                c = int(c)
                if c != 0:
                    clean[int(exp)] = c
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls({0: 1})

    @classmethod
    def u(cls) -> "IntPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "IntPoly":
        return cls({exp: coeff})

    @classmethod
    def geometric_sum(cls, low: int, high: int) -> "IntPoly":
        """u^low + u^(low+1) + ... + u^high (zero when the range is empty)."""
        return cls({e: 1 for e in range(low, high + 1)})

    # -- inspection --------------------------------------------------------

    @property
    def coefficients(self):
        """Read-only exponent -> coefficient view."""
        return MappingProxyType(self._coeffs)

    def __getitem__(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self):
        """Largest stored exponent, NEG_INFINITY for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else NEG_INFINITY

    @property
    def valuation(self):
        """Smallest stored exponent, NEG_INFINITY for the zero polynomial."""
        return min(self._coeffs) if self._coeffs else NEG_INFINITY

    @property
    def leading_coefficient(self) -> int:
        return self._coeffs[max(self._coeffs)] if self._coeffs else 0

    def content(self) -> int:
        """Positive gcd of all coefficients; 0 for the zero polynomial."""
        g = 0
        for c in self._coeffs.values():
            g = int_gcd(g, abs(c))
        return g

    def term_count(self) -> int:
        return len(self._coeffs)

    def evaluate(self, point):
        """Exact value at an integer or Fraction point."""
        return sum(c * point ** e for e, c in self._coeffs.items())

    def has_negative_coefficient(self) -> bool:
        return any(c < 0 for c in self._coeffs.values())

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly({e: -c for e, c in self._coeffs.items()})

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
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("IntPoly cannot be raised to a negative power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by u^k."""
        return IntPoly({e + k: c for e, c in self._coeffs.items()})

    # -- equality / hashing / text -----------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return f"IntPoly.parse({str(self)!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "u" if e == 1 else f"u^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    # -- parsing -----------------------------------------------------------

    _TERM_RE = re.compile(
        r"(?P<sign>[+-])(?:"
        r"(?P<coeff>\d+)\*?(?P<var1>u(?:\^(?P<exp1>\d+))?)?"
        r"|(?P<var2>u(?:\^(?P<exp2>\d+))?)"
        r")"
    )

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Inverse of str() for the canonical form; tolerant of spacing
        and of an explicit ``*`` between coefficient and variable."""
        compact = text.replace(" ", "").replace("\t", "")
        if not compact:
            raise ValueError("empty polynomial text")
        if compact[0] not in "+-":
            compact = "+" + compact
        out = {}
        pos = 0
        while pos < len(compact):
            match = cls._TERM_RE.match(compact, pos)
            if not match or match.end() == match.start():
                raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
            sign = -1 if match.group("sign") == "-" else 1
            coeff = match.group("coeff")
            var = match.group("var1") or match.group("var2")
            exp = match.group("exp1") or match.group("exp2")
            value = sign * (int(coeff) if coeff else 1)
            exponent = 0
            if var:
                exponent = int(exp) if exp else 1
            out[exponent] = out.get(exponent, 0) + value
            pos = match.end()
        return cls(out)


# ---------------------------------------------------------------------------
# polynomial division helpers

def exact_divide(num: IntPoly, den: IntPoly) -> IntPoly:
    """Quotient num/den when den divides num over the integers.

    Raises ArithmeticError on a non-exact division; internal callers only
    divide by known factors.
    """
    if den.is_zero():
        raise DivisionByZero("polynomial division by zero")
    quotient = {}
    rest = num
    d = den.degree
    lead = den.leading_coefficient
    while not rest.is_zero() and rest.degree >= d:
        c, rem = divmod(rest.leading_coefficient, lead)
        if rem:
            raise ArithmeticError(f"{num} is not divisible by {den}")
        shift = rest.degree - d
        quotient[shift] = c
        rest = rest - den * IntPoly.monomial(shift, c)
    if not rest.is_zero():
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return IntPoly(quotient)


def _primitive(p: IntPoly) -> IntPoly:
    c = p.content()
    if c in (0, 1):
        return p
    return IntPoly({e: v // c for e, v in p.coefficients.items()})


def _pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    # lc(b)^k * a mod b, eliminating the lead of a without leaving Z
    d = b.degree
    lead = b.leading_coefficient
    rest = a
    while not rest.is_zero() and rest.degree >= d:
        shift = rest.degree - d
        rest = rest * lead - b * IntPoly.monomial(shift, rest.leading_coefficient)
    return rest


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd (content stripped, positive leading coefficient).

    Computed by the primitive pseudo-remainder sequence, which never leaves
    the integers.
    """
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero():
        a, b = b, _primitive(_pseudo_remainder(a, b))
    if a.leading_coefficient < 0:
        a = -a
    return a


# ---------------------------------------------------------------------------

class RationalU:
    """A fraction of integer polynomials in u, kept in a unique normal form.

    Normalization: no common polynomial factor, joint integer content 1,
    denominator leading coefficient positive.  Two equal values therefore
    compare equal structurally.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None):
        num = self._as_poly(numerator)
        den = IntPoly.one() if denominator is None else self._as_poly(denominator)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            object.__setattr__(self, "numerator", IntPoly.zero())
            object.__setattr__(self, "denominator", IntPoly.one())
            return
        if den == IntPoly.one():  # already normal; polynomials are common
            object.__setattr__(self, "numerator", num)
            object.__setattr__(self, "denominator", den)
            return
        common = poly_gcd(num, den)
        if common.degree > 0:
            num = exact_divide(num, common)
            den = exact_divide(den, common)
        joint = int_gcd(num.content(), den.content())
        if joint > 1:
            num = IntPoly({e: c // joint for e, c in num.coefficients.items()})
            den = IntPoly({e: c // joint for e, c in den.coefficients.items()})
        if den.leading_coefficient < 0:
            num, den = -num, -den
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    def __setattr__(self, *args):
        raise AttributeError("RationalU is immutable")

    @staticmethod
    def _as_poly(value) -> IntPoly:
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return IntPoly({0: value})
        raise TypeError(f"cannot build RationalU from {type(value).__name__}")

    @classmethod
    def zero(cls) -> "RationalU":
        return cls(0)

    @classmethod
    def one(cls) -> "RationalU":
        return cls(1)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_polynomial(self) -> bool:
        return self.denominator == IntPoly.one()

    @property
    def degree(self):
        """deg(numerator) - deg(denominator); NEG_INFINITY for zero."""
        if self.is_zero():
            return NEG_INFINITY
        return self.numerator.degree - self.denominator.degree

    def eval_at(self, point):
        """Exact value at an integer (or Fraction) point."""
        den = self.denominator.evaluate(point)
        if den == 0:
            raise PoleAtPoint(f"denominator vanishes at u = {point}")
        return Fraction(self.numerator.evaluate(point), den)

    # -- field operations --------------------------------------------------

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RationalU):
            return other
        if isinstance(other, (IntPoly, int)):
            return cls(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalU(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalU(-self.numerator, self.denominator)

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
        return RationalU(self.numerator * other.numerator,
                         self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalU(self.numerator * other.denominator,
                         self.denominator * other.numerator)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            if self.is_zero():
                raise DivisionByZero("negative power of zero")
            return RationalU(self.denominator, self.numerator) ** (-n)
        return RationalU(self.numerator ** n, self.denominator ** n)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    # -- text --------------------------------------------------------------

    def __repr__(self):
        return f"RationalU.parse({str(self)!r})"

    def __str__(self):
        num_s = str(self.numerator)
        if self.is_polynomial():
            return num_s
        den_s = str(self.denominator)
        if self.numerator.term_count() > 1:
            num_s = f"({num_s})"
        if self.denominator.term_count() > 1:
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"

    @classmethod
    def parse(cls, text: str) -> "RationalU":
        """Parse the canonical form ``P`` or ``P/Q`` with optional parens."""
        num_text, den_text = _split_fraction(text)
        num = IntPoly.parse(num_text)
        den = IntPoly.one() if den_text is None else IntPoly.parse(den_text)
        return cls(num, den)


def _split_fraction(text: str):
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        elif ch == "/" and depth == 0:
            return _strip_parens(text[:i]), _strip_parens(text[i + 1:])
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    return _strip_parens(text), None


def _strip_parens(text: str) -> str:
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    return text  # outer parens do not match each other
        text = text[1:-1].strip()
    return text


# ---------------------------------------------------------------------------
# Laurent expansion at u = infinity

@dataclass(frozen=True)
class LaurentWindow:
    """A finite window of the expansion of a rational function at u = infinity.

    ``coefficients[k]`` belongs to exponent ``top_degree - k``.  When
    ``eventually_constant`` is set, every coefficient below the window equals
    exactly that integer; it is only set when that claim is provable.
    """

    top_degree: int
    coefficients: tuple
    eventually_constant: int | None = None

    def coefficient(self, exponent: int) -> int:
        k = self.top_degree - exponent
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        if k >= len(self.coefficients) and self.eventually_constant is not None:
            return self.eventually_constant
        raise IndexError(f"exponent {exponent} outside the computed window")

    def terms(self):
        """Yield (exponent, coefficient) pairs, highest exponent first."""
        for k, c in enumerate(self.coefficients):
            yield self.top_degree - k, c


def laurent_expand(f: RationalU, depth: int) -> LaurentWindow:
    """First ``depth`` coefficients of f at u = infinity, exactly.

    The expansion is the image of f in Z[[u^-1]][u]; coefficients are
    produced by the standard power-series recurrence in v = 1/u and must be
    integers (NonIntegerExpansion otherwise).
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if f.is_zero():
        return LaurentWindow(0, (0,) * depth, 0)
    num, den = f.numerator, f.denominator
    top = num.degree - den.degree
    # coefficient lists in v = 1/u: position k holds the coefficient of u^(deg - k)
    p = [num[num.degree - k] for k in range(num.degree + 1)]
    q = [den[den.degree - k] for k in range(den.degree + 1)]
    lead = q[0]
    values: list[Fraction] = []
    coeffs = []
    for k in range(depth):
        acc = Fraction(p[k] if k < len(p) else 0)
        for j in range(1, min(k, len(q) - 1) + 1):
            acc -= q[j] * values[k - j]
        c = acc / lead
        values.append(c)
        if c.denominator != 1:
            raise NonIntegerExpansion(
                f"coefficient of u^{top - k} in {f} is the non-integer {c}")
        coeffs.append(int(c))
    tail = _detect_constant_tail(f, bottom=top - depth + 1)
    return LaurentWindow(top, tuple(coeffs), tail)


def _detect_constant_tail(f: RationalU, bottom: int):
    """The constant value of all coefficients below the window, if provable.

    Writing f = h + c*u/(u-1) with c = ((u-1)f)(1), the tail is c exactly
    when h is a Laurent polynomial (denominator a power of u) and the window
    already covers every exponent where h or the constant head differ.
    """
    u = IntPoly.u()
    scaled = f * RationalU(u - 1)
    try:
        c_value = scaled.eval_at(1)
    except PoleAtPoint:
        return None  # (u-1) divides the denominator more than once
    if c_value.denominator != 1:
        return None
    c = int(c_value)
    h = f - c * RationalU(u, u - 1)
    den = h.denominator
    if den.term_count() > 1 or den.leading_coefficient != 1:
        return None  # not a Laurent polynomial
    if h.is_zero():
        limit = 1
    else:
        limit = min(1, h.numerator.valuation - den.degree)
    return c if bottom <= limit else None
