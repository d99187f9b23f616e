"""Exact arithmetic in Z[q, q^-1] and in the rational function field Q(q).

LaurentPoly is the coefficient ring for every algebra computation in this
package.  RationalFunction exists so that linear systems can be solved over
a field; solutions are afterwards converted back with ``to_laurent`` which
fails loudly when a coefficient is not integral over Z[q, q^-1].

Coefficients are Python ints, so there is no overflow anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class NotLaurentError(ArithmeticError):
    """Raised when a rational function is not an element of Z[q, q^-1]."""


class LaurentPoly:
    """Sparse Laurent polynomial: map exponent -> nonzero integer coefficient.

    Instances are immutable by convention; all operations return new objects.
    Equality is exact structural equality of the term maps.

    >>> p = LaurentPoly({1: 1, -1: 1})   # q + q^-1
    >>> print(p * Q)
    q^2 + 1
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # internal: terms must already contain no zero coefficients
        self = object.__new__(cls)
        self.terms = terms
        return self

    # -- constructors ------------------------------------------------------

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        if coefficient == 0:
            return ZERO
        return cls._raw({exponent: coefficient})

    @classmethod
    def from_int(cls, k: int) -> "LaurentPoly":
        return cls.monomial(0, k)

    # -- ring structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(out)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self).__add__(other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers only exist for units; use unit_inverse")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure queries ---------------------------------------------------

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def is_unit(self) -> bool:
        """True iff this polynomial is +-q^k for some integer k."""
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return c == 1 or c == -1

    def unit_inverse(self) -> "LaurentPoly":
        """Inverse of a unit +-q^k, namely +-q^-k."""
        if not self.is_unit():
            raise NotLaurentError(f"not a unit in Z[q,q^-1]: {self}")
        ((e, c),) = self.terms.items()
        return LaurentPoly._raw({-e: c})

    def evaluate(self, value: Fraction | int) -> Fraction:
        """Evaluate at a nonzero rational number."""
        x = Fraction(value)
        if x == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at 0")
        return sum((c * x**e for e, c in self.terms.items()), Fraction(0))

    # -- serialization -------------------------------------------------------

    def to_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items())

    def to_json(self) -> list[list]:
        """[[exponent, coefficient-as-decimal-string], ...] sorted by exponent."""
        return [[e, str(c)] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, pairs) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in pairs})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for e, c in sorted(self.terms.items(), reverse=True):
            if e == 0:
                body = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            chunks.append(("- " if c < 0 else "+ ") + body)
        head = chunks[0].replace("+ ", "").replace("- ", "-")
        return " ".join([head] + chunks[1:])


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})
QINV = LaurentPoly._raw({-1: 1})
Q_MINUS_QINV = LaurentPoly._raw({1: 1, -1: -1})


def q_power(k: int) -> LaurentPoly:
    return LaurentPoly._raw({k: 1})


# -- ordinary polynomial helpers (all exponents >= 0) ------------------------
#
# Used only by RationalFunction.  Polynomials are LaurentPoly values whose
# minimum exponent is >= 0.


def _content(p: LaurentPoly) -> int:
    g = 0
    for c in p.terms.values():
        g = _int_gcd(g, c)
    return g


def _leading_coeff(p: LaurentPoly) -> int:
    return p.terms[p.max_exp()]


def _div_int(p: LaurentPoly, k: int) -> LaurentPoly:
    return LaurentPoly._raw({e: c // k for e, c in p.terms.items()})


def _poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder over Q[q]; requires integer quotients to be exact
    only when the caller knows divisibility (checked with an assertion)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = {e: Fraction(c) for e, c in a.terms.items()}
    quo: dict[int, Fraction] = {}
    db = b.max_exp()
    lb = Fraction(_leading_coeff(b))
    while rem:
        dr = max(rem)
        if dr < db:
            break
        f = rem[dr] / lb
        quo[dr - db] = f
        for e, c in b.terms.items():
            ee = e + dr - db
            s = rem.get(ee, Fraction(0)) - f * c
            if s:
                rem[ee] = s
            elif ee in rem:
                del rem[ee]
    # callers divide by known divisors (gcds), so fractions never survive;
    # fail loudly rather than round if that assumption is ever violated
    if any(c.denominator != 1 for c in quo.values()):
        raise ArithmeticError("non-integral quotient in polynomial division")
    if any(c.denominator != 1 for c in rem.values()):
        raise ArithmeticError("non-integral remainder in polynomial division")
    return (LaurentPoly({e: int(c) for e, c in quo.items()}),
            LaurentPoly({e: int(c) for e, c in rem.items()}))


def _poly_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    q, r = _poly_divmod(a, b)
    if r:
        raise ArithmeticError(f"inexact polynomial division: {a} by {b}")
    return q


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd in Z[q] (primitive pseudo-remainder sequence), positive leading
    coefficient, including the integer content."""
    if not a:
        return b if _leading_coeff(b) > 0 else -b if b else ZERO
    if not b:
        return a if _leading_coeff(a) > 0 else -a
    ca, cb = _content(a), _content(b)
    cg = _int_gcd(ca, cb)
    a = _div_int(a, ca)
    b = _div_int(b, cb)
    if a.max_exp() < b.max_exp():
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        rem = dict(a.terms)
        db = b.max_exp()
        lb = _leading_coeff(b)
        while rem and max(rem) >= db:
            dr = max(rem)
            lr = rem[dr]
            # rem <- lb*rem - lr*q^(dr-db)*b
            new: dict[int, int] = {e: lb * c for e, c in rem.items()}
            for e, c in b.terms.items():
                ee = e + dr - db
                s = new.get(ee, 0) - lr * c
                if s:
                    new[ee] = s
                elif ee in new:
                    del new[ee]
            rem = new
        r = LaurentPoly(rem)
        if r:
            r = _div_int(r, _content(r))
        a, b = b, r
    if _leading_coeff(a) < 0:
        a = -a
    return a * cg if cg != 1 else a


class RationalFunction:
    """Element of Q(q) stored as num/den with num, den in Z[q].

    Normal form: den has no factor q in common with num being stripped jointly,
    gcd(num, den) = 1 (content included), and den has positive leading
    coefficient.  Equality is therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = ONE):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        shift = min(num.min_exp(), den.min_exp())
        if shift:
            num = num.shift(-shift)
            den = den.shift(-shift)
        if den != ONE:
            g = _poly_gcd(num, den)
            if g != ONE:
                num = _poly_divexact(num, g)
                den = _poly_divexact(den, g)
            if _leading_coeff(den) < 0:
                num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def _normalized(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFunction":
        self = object.__new__(cls)
        self.num, self.den = num, den
        return self

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RationalFunction":
        if not p:
            return RF_ZERO
        k = p.min_exp()
        if k < 0:
            return cls._normalized(p.shift(-k), q_power(-k))
        return cls._normalized(p, ONE)

    @classmethod
    def from_int(cls, k: int) -> "RationalFunction":
        return cls._normalized(LaurentPoly.from_int(k), ONE)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        """True iff the denominator is exactly q^k (integer content matters:
        1/2 has a one-term denominator but is not Laurent)."""
        if len(self.den.terms) != 1:
            return False
        return next(iter(self.den.terms.values())) == 1

    def to_laurent(self) -> LaurentPoly:
        """The Laurent polynomial equal to this value, when one exists."""
        if not self.num:
            return ZERO
        if not self.is_laurent():
            raise NotLaurentError(f"not in Z[q,q^-1]: ({self.num})/({self.den})")
        return self.num.shift(-self.den.min_exp())

    # -- field structure -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_laurent(other)
        if isinstance(other, int):
            return RationalFunction.from_int(other)
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __bool__(self) -> bool:
        return bool(self.num)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._normalized(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == ONE and other.den == ONE:
            return RationalFunction._normalized(self.num + other.num, ONE)
        if self.is_laurent() and other.is_laurent():
            # both are Laurent: stay in the ring
            return RationalFunction.from_laurent(self.to_laurent() + other.to_laurent())
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return RF_ZERO
        if self.den == ONE and other.den == ONE:
            return RationalFunction._normalized(self.num * other.num, ONE)
        if self.is_laurent() and other.is_laurent():
            return RationalFunction.from_laurent(self.to_laurent() * other.to_laurent())
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return self.__mul__(RationalFunction(other.den, other.num))

    def __repr__(self) -> str:
        if self.den == ONE:
            return repr(self.num)
        return f"({self.num})/({self.den})"


RF_ZERO = RationalFunction._normalized(ZERO, ONE)
RF_ONE = RationalFunction._normalized(ONE, ONE)


def rf_convert(a: RationalFunction) -> LaurentPoly:
    """Convert a rational function to a Laurent polynomial.

    Raises NotLaurentError when the value is not integral over Z[q, q^-1];
    after a linear solve this signals that a coefficient violates integrality.
    """
    return a.to_laurent()
