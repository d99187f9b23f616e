"""The Hecke algebra of the symmetric group in the T_w basis.

Generators T_1..T_{n-1} satisfy the braid relations together with the
quadratic relation (T_i - q)(T_i + q^{-1}) = 0, so right multiplication by a
generator acts on basis elements by

    T_w T_i = T_{w s_i}                          if length goes up,
    T_w T_i = T_{w s_i} + (q - q^{-1}) T_w       if length goes down.

Elements are sparse maps from permutations to Laurent polynomials.  The
degree n is explicit on every element; use ``embed`` to move an element of a
smaller algebra into a larger one before mixing degrees.
"""

from __future__ import annotations

from typing import Iterable

from .exactpoly import ONE, Q_MINUS_QINV, ZERO, LaurentPoly
from .symgroup import (
    DegreeMismatchError,
    Perm,
    ascends_right,
    identity,
    inverse,
    multiply_gen_right,
    reduced_word,
    simple,
)


class HeckeElement:
    """Sparse element sum_w c_w T_w of the degree-n Hecke algebra."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict[Perm, LaurentPoly] | None = None):
        self.degree = degree
        if terms:
            self.terms = {w: c for w, c in terms.items() if c}
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, degree: int, terms: dict[Perm, LaurentPoly]) -> "HeckeElement":
        self = object.__new__(cls)
        self.degree = degree
        self.terms = terms
        return self

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {identity(n): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    # -- module structure ------------------------------------------------------

    def _check_degree(self, other: "HeckeElement"):
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"degrees {self.degree} and {other.degree} differ; embed first")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_degree(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) + c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return HeckeElement._raw(self.degree, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_degree(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, ZERO) - c
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return HeckeElement._raw(self.degree, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._raw(self.degree, {w: -c for w, c in self.terms.items()})

    def scale(self, c: LaurentPoly | int) -> "HeckeElement":
        if isinstance(c, int):
            c = LaurentPoly.from_int(c)
        if not c:
            return HeckeElement.zero(self.degree)
        return HeckeElement._raw(self.degree, {w: x * c for w, x in self.terms.items()})

    def coefficient(self, w: Perm) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def __repr__(self) -> str:
        if not self.terms:
            return f"<0 in H_{self.degree}>"
        bits = [f"({c})*T[{','.join(map(str, w))}]"
                for w, c in sorted(self.terms.items())]
        return " + ".join(bits)


def t_perm(w: Perm) -> HeckeElement:
    """The basis element T_w (independent of any reduced word for w)."""
    return HeckeElement._raw(len(w), {w: ONE})


def t_gen(i: int, n: int) -> HeckeElement:
    if not 1 <= i <= n - 1:
        raise IndexError(f"T_{i} does not exist in H_{n}")
    return t_perm(simple(i, n))


def mul_gen(a: HeckeElement, i: int) -> HeckeElement:
    """Right multiplication a . T_i by the two-case rewriting rule."""
    if not 1 <= i <= a.degree - 1:
        raise IndexError(f"T_{i} does not exist in H_{a.degree}")
    out: dict[Perm, LaurentPoly] = {}
    for w, c in a.terms.items():
        ws = multiply_gen_right(w, i)
        s = out.get(ws, ZERO) + c
        if s:
            out[ws] = s
        elif ws in out:
            del out[ws]
        if not ascends_right(w, i):
            s = out.get(w, ZERO) + c * Q_MINUS_QINV
            if s:
                out[w] = s
            elif w in out:
                del out[w]
    return HeckeElement._raw(a.degree, out)


def mul_word(a: HeckeElement, word: Iterable[int]) -> HeckeElement:
    for i in word:
        a = mul_gen(a, i)
    return a


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the Hecke algebra.

    The right factor is decomposed into basis elements, each rebuilt as a
    product of generators along its canonical reduced word; no multiplication
    table is ever materialized.
    """
    a._check_degree(b)
    out = HeckeElement.zero(a.degree)
    for v, c in sorted(b.terms.items()):
        out = out + mul_word(a, reduced_word(v)).scale(c)
    return out


def star(a: HeckeElement) -> HeckeElement:
    """The algebra involution determined by T_v -> T_{v^{-1}}."""
    return HeckeElement._raw(a.degree, {inverse(w): c for w, c in a.terms.items()})


def t_interval(i: int, j: int, n: int) -> HeckeElement:
    """T_{i,j}: the product T_i T_{i+1} ... T_{j-1} when j >= i, and
    T_{i-1} T_{i-2} ... T_j when i > j; both are single basis elements."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"T_{{{i},{j}}} needs indices in 1..{n}")
    if j >= i:
        word = range(i, j)
    else:
        word = range(i - 1, j - 1, -1)
    return mul_word(HeckeElement.one(n), word)


def gen_inverse(i: int, n: int) -> HeckeElement:
    """T_i^{-1} = T_i - (q - q^{-1}), from the quadratic relation."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"T_{i} does not exist in H_{n}")
    return HeckeElement(n, {simple(i, n): ONE, identity(n): -Q_MINUS_QINV})


def t_interval_inverse(i: int, j: int, n: int) -> HeckeElement:
    """Inverse of t_interval(i, j, n), as the product of generator inverses
    in reverse order."""
    if j >= i:
        word = range(j - 1, i - 1, -1)
    else:
        word = range(j, i)
    out = HeckeElement.one(n)
    for k in word:
        out = mul(out, gen_inverse(k, n))
    return out


def embed(a: HeckeElement, m: int) -> HeckeElement:
    """The image of a under H_n -> H_m, m >= n, extending permutations by
    fixed points."""
    if m < a.degree:
        raise DegreeMismatchError(f"cannot embed degree {a.degree} into {m}")
    if m == a.degree:
        return a
    tail = tuple(range(a.degree + 1, m + 1))
    return HeckeElement._raw(m, {w + tail: c for w, c in a.terms.items()})


# -- serialization -------------------------------------------------------------


def to_json(a: HeckeElement) -> dict:
    return {
        "degree": a.degree,
        "terms": [
            {"perm": ",".join(map(str, w)), "coeff": c.to_json()}
            for w, c in sorted(a.terms.items())
        ],
    }


def from_json(obj: dict) -> HeckeElement:
    terms = {}
    for item in obj["terms"]:
        w = tuple(int(x) for x in item["perm"].split(","))
        terms[w] = LaurentPoly.from_json(item["coeff"])
    return HeckeElement(int(obj["degree"]), terms)
