"""Murphy cellular basis machinery.

The basis elements are m^lambda_{s,t} = T_{w(s)}* m_lambda T_{w(t)} with
m_lambda = sum_{v in S_lambda} q^{l(v)} T_v, indexed by a partition and an
ordered pair of standard tableaux of that shape.

Expansion of arbitrary elements in this basis is done by linear algebra: the
full transition matrix to the T_w basis is assembled once per degree
(memoized) and put in row echelon form.  All pivots turn out to be units of
Z[q, q^-1], so the echelon and every solve stay inside the ring; if a unit
pivot were ever unavailable the build falls back to the generic solver over
Q(q) and converts coefficients back at the end, which fails loudly
(IntegralityFailureError) if a coefficient is not integral.

Cell modules are handled in coordinates: an element of Delta^lambda is a
sparse map from standard tableaux to coefficients, and the generator action
is read off from the expansion of m_lambda T_{w(t)} T_i with all strictly
more dominant shapes discarded.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .exactpoly import (
    ONE,
    RF_ZERO,
    ZERO,
    LaurentPoly,
    NotLaurentError,
    RationalFunction,
    q_power,
    rf_convert,
)
from .hecke import HeckeElement, mul, mul_gen, mul_word, star
from .linalg import Echelon
from .symgroup import Perm, length, reduced_word, young_subgroup
from .tableaux import (
    Node,
    NotRemovableError,
    Partition,
    ShapeMismatchError,
    Tableau,
    dominates,
    garnir_positions,
    garnir_tableau,
    partitions_of,
    removable_nodes,
    row_standard_tableaux,
    shape_of,
    size_of,
    standard_tableaux,
    superstandard,
    tableau_dominates,
    word_of,
)


class IntegralityFailureError(ArithmeticError):
    """A solved expansion coefficient was not a Laurent polynomial.  This
    cannot happen for genuine Hecke algebra elements; it signals a bug."""


class MurphyIndex(NamedTuple):
    shape: Partition
    s: Tableau
    t: Tableau


def _perm_key(w: Perm):
    return (length(w), w)


# -- basic elements ------------------------------------------------------------


@lru_cache(maxsize=None)
def m_poly(nu: tuple[int, ...]) -> HeckeElement:
    """m_nu = sum over the Young subgroup S_nu of q^{l(v)} T_v."""
    n = sum(nu)
    terms = {v: q_power(length(v)) for v in young_subgroup(tuple(nu))}
    return HeckeElement._raw(n, terms)


@lru_cache(maxsize=None)
def m_row(shape: Partition, t: Tableau) -> HeckeElement:
    """m_lambda T_{w(t)} for a (row-)standard tableau t; the T-support is the
    coset S_lambda w(t), with unit coefficient q^{l(v)} on T_{v w(t)}."""
    return mul_word(m_poly(shape), reduced_word(word_of(t)))


def m_st(shape: Partition, s: Tableau, t: Tableau) -> HeckeElement:
    """The Murphy element T_{w(s)}* m_lambda T_{w(t)}."""
    if shape_of(s) != tuple(shape) or shape_of(t) != tuple(shape):
        raise ShapeMismatchError(f"tableaux do not have shape {shape}")
    return mul_word(star(m_row(tuple(shape), s)), reduced_word(word_of(t)))


# -- the transition echelon ------------------------------------------------------


def _sub_scaled_lp(target: dict, alpha: LaurentPoly, row: dict):
    for k, c in row.items():
        delta = alpha * c
        s = target.get(k)
        s = -delta if s is None else s - delta
        if s:
            target[k] = s
        elif k in target:
            del target[k]


class _NoUnitPivot(Exception):
    pass


def _parity(positions: Sequence[int]) -> int:
    inv = 0
    for i in range(len(positions)):
        pi = positions[i]
        for j in range(i + 1, len(positions)):
            if pi > positions[j]:
                inv += 1
    return inv & 1


class MurphyBasis:
    """The full Murphy basis of one degree with its expansion echelon.

    Public index order: shapes lexicographically descending (a linear
    extension of descending dominance), then s and t descending in tableau
    dominance.  The echelon processes rows in this same order and always
    pivots on the longest available term whose coefficient is a unit; on this
    matrix a unit pivot is always available (checked at build time, with a
    generic fallback over Q(q) that has never been needed for n <= 6).
    """

    def __init__(self, n: int):
        self.n = n
        self.indices: list[MurphyIndex] = []
        for shape in partitions_of(n):
            for s in standard_tableaux(shape):
                for t in standard_tableaux(shape):
                    self.indices.append(MurphyIndex(shape, s, t))
        self.position = {idx: k for k, idx in enumerate(self.indices)}
        self.elements = [m_st(idx.shape, idx.s, idx.t) for idx in self.indices]
        self._order = list(range(len(self.indices)))
        self.mode = "ring"
        try:
            self._build_ring_echelon()
        except _NoUnitPivot:
            self.mode = "field"
            self._build_field_echelon()

    # ring-mode echelon: plain Laurent arithmetic, unit pivots only

    def _build_ring_echelon(self):
        pivots: list[Perm] = []
        inv_units: list[LaurentPoly] = []
        rows: list[dict] = []
        combos: list[dict] = []
        for pos in self._order:
            cur = dict(self.elements[pos].terms)
            combo = {pos: ONE}
            for p, inv, row, rcombo in zip(pivots, inv_units, rows, combos):
                c = cur.get(p)
                if c is None:
                    continue
                alpha = c * inv
                _sub_scaled_lp(cur, alpha, row)
                _sub_scaled_lp(combo, alpha, rcombo)
            if not cur:
                raise RuntimeError("Murphy elements are not independent: bug")
            best = None
            for w, c in cur.items():
                if c.is_unit():
                    key = (length(w), w)
                    if best is None or key > best[0]:
                        best = (key, w)
            if best is None:
                raise _NoUnitPivot
            w = best[1]
            pivots.append(w)
            inv_units.append(cur[w].unit_inverse())
            rows.append(cur)
            combos.append(combo)
        self._pivots = pivots
        self._inv_units = inv_units
        self._rows = rows
        self._combos = combos

    def _build_field_echelon(self):
        ech = Echelon(sort_key=_perm_key)
        for pos in self._order:
            independent, _ = ech.insert(self.elements[pos].terms, tag=pos)
            if not independent:
                raise RuntimeError("Murphy elements are not independent: bug")
        self._field_echelon = ech

    # -- expansion ---------------------------------------------------------------

    def expand_raw(self, h: HeckeElement) -> dict[int, LaurentPoly]:
        """Coefficients of h over the basis, keyed by public index position."""
        if h.degree != self.n:
            raise ShapeMismatchError(f"degree {h.degree} element in basis of degree {self.n}")
        if self.mode == "ring":
            cur = dict(h.terms)
            coeffs: dict[int, LaurentPoly] = {}
            for p, inv, row, rcombo in zip(self._pivots, self._inv_units,
                                           self._rows, self._combos):
                c = cur.get(p)
                if c is None:
                    continue
                alpha = c * inv
                _sub_scaled_lp(cur, alpha, row)
                for j, cc in rcombo.items():
                    s = coeffs.get(j)
                    d = alpha * cc
                    s = d if s is None else s + d
                    if s:
                        coeffs[j] = s
                    elif j in coeffs:
                        del coeffs[j]
            if cur:
                raise RuntimeError("expansion failed to terminate: bug")
            return coeffs
        combo = self._field_echelon.membership(h.terms)
        if combo is None:
            raise RuntimeError("expansion failed over Q(q): bug")
        out = {}
        for j, c in combo.items():
            try:
                out[j] = rf_convert(c)
            except NotLaurentError as exc:
                raise IntegralityFailureError(str(exc)) from exc
        return out

    def reassemble(self, coeffs: dict[int, LaurentPoly]) -> HeckeElement:
        out = HeckeElement.zero(self.n)
        for j, c in coeffs.items():
            out = out + self.elements[j].scale(c)
        return out

    # -- transition matrix and determinant -----------------------------------------

    def column_perms(self) -> list[Perm]:
        import itertools
        return [tuple(w) for w in itertools.permutations(range(1, self.n + 1))]

    def transition_matrix(self) -> list[list[LaurentPoly]]:
        """Rows: basis elements in public order; columns: T_w sorted by
        one-line word."""
        perms = self.column_perms()
        pos = {w: k for k, w in enumerate(perms)}
        out = []
        for elt in self.elements:
            row = [ZERO] * len(perms)
            for w, c in elt.terms.items():
                row[pos[w]] = c
            out.append(row)
        return out

    def transition_det(self) -> LaurentPoly:
        """Determinant of the transition matrix in public row/column order."""
        if self.mode != "ring":
            raise RuntimeError("determinant requires the ring-mode echelon")
        det = ONE
        for inv in self._inv_units:
            det = det * inv.unit_inverse()
        perms = self.column_perms()
        colpos = {w: k for k, w in enumerate(perms)}
        sign = _parity(self._order) ^ _parity([colpos[p] for p in self._pivots])
        return -det if sign else det


_basis_cache: dict[int, MurphyBasis] = {}
_basis_lock = threading.Lock()


def murphy_basis(n: int) -> MurphyBasis:
    """The memoized Murphy basis of degree n; construction is serialized so
    concurrent callers never observe a partially built table."""
    basis = _basis_cache.get(n)
    if basis is None:
        with _basis_lock:
            basis = _basis_cache.get(n)
            if basis is None:
                basis = MurphyBasis(n)
                _basis_cache[n] = basis
    return basis


# -- expansions -----------------------------------------------------------------


@dataclass
class MurphyExpansion:
    """Total expansion of an element over the Murphy basis of its degree."""

    n: int
    coeffs: dict[MurphyIndex, LaurentPoly]

    def shapes(self) -> set[Partition]:
        return {idx.shape for idx in self.coeffs}

    def coefficient(self, shape: Partition, s: Tableau, t: Tableau) -> LaurentPoly:
        return self.coeffs.get(MurphyIndex(tuple(shape), s, t), ZERO)

    def reassemble(self) -> HeckeElement:
        out = HeckeElement.zero(self.n)
        for idx, c in self.coeffs.items():
            out = out + m_st(idx.shape, idx.s, idx.t).scale(c)
        return out

    def to_json(self) -> list[dict]:
        items = sorted(self.coeffs.items(),
                       key=lambda kv: murphy_basis(self.n).position[kv[0]])
        return [
            {
                "shape": ",".join(map(str, idx.shape)),
                "s": [list(row) for row in idx.s],
                "t": [list(row) for row in idx.t],
                "coeff": c.to_json(),
            }
            for idx, c in items
        ]


def expand(h: HeckeElement) -> MurphyExpansion:
    """Expand h over the Murphy basis of its degree."""
    basis = murphy_basis(h.degree)
    raw = basis.expand_raw(h)
    return MurphyExpansion(h.degree, {basis.indices[j]: c for j, c in raw.items()})


def ideal_membership(h: HeckeElement, shape: Partition, strict: bool) -> bool:
    """True iff h lies in the span of basis elements whose shape strictly
    dominates `shape` (strict) or dominates-or-equals it."""
    shape = tuple(shape)
    if size_of(shape) != h.degree:
        raise ShapeMismatchError(f"shape {shape} does not have size {h.degree}")
    for idx in expand(h).coeffs:
        mu = idx.shape
        if mu == shape:
            if strict:
                return False
        elif not dominates(mu, shape):
            return False
    return True


# -- Garnir elements and D(alpha) -------------------------------------------------


def h_garnir(shape: Partition, pos: Node) -> HeckeElement:
    """The Garnir element of the (i, j) strip:

        h_g = sum over tau in {g} union {standard tau dominating g} of
              q^{l(w(tau))} m_lambda T_{w(tau)}.

    The q-weights make h_g an element of M^lambda intersect H^{> lambda}
    under the normalization (T_i - q)(T_i + q^{-1}) = 0 used here.
    """
    shape = tuple(shape)
    g = garnir_tableau(shape, pos)
    taus = [g] + [t for t in standard_tableaux(shape) if tableau_dominates(t, g)]
    out = HeckeElement.zero(size_of(shape))
    for tau in taus:
        out = out + m_row(shape, tau).scale(q_power(length(word_of(tau))))
    return out


def d_alpha(shape: Partition, alpha: Node) -> HeckeElement:
    """D(alpha) = 1 + q T_{a-1} + q^2 T_{a-1}T_{a-2} + ... + q^{a-b}
    T_{a-1}...T_b, where b and a are the first and last entries of the row of
    alpha in the superstandard tableau.

    Equals the sum of q^{l(x)} T_x over the distinguished right coset
    representatives of S_{lambda'} in S_lambda, where lambda' splits the row
    of alpha into (row-1, 1).
    """
    shape = tuple(shape)
    if alpha not in removable_nodes(shape):
        raise NotRemovableError(f"{alpha} is not removable from {shape}")
    n = size_of(shape)
    r = alpha[0]
    b = 1 + sum(shape[: r - 1])
    a = b + shape[r - 1] - 1
    out = HeckeElement.one(n)
    piece = HeckeElement.one(n)
    for k in range(1, a - b + 1):
        piece = mul_gen(piece, a - k)
        out = out + piece.scale(q_power(k))
    return out


# -- linear span machinery ---------------------------------------------------------


@dataclass
class SpanResult:
    """Outcome of a span membership test.  `coefficients` align with
    `spanning` and are Laurent polynomials; membership requires an integral
    certificate.  When the solve succeeded only over Q(q), the rational
    solution is kept for diagnostics and `member` is False."""

    member: bool
    coefficients: tuple[LaurentPoly, ...] | None
    spanning: tuple[str, ...]
    rational_coefficients: tuple[RationalFunction, ...] | None = None

    def certificate_json(self) -> list[dict] | None:
        if self.coefficients is None:
            return None
        return [
            {"generator": d, "coeff": c.to_json()}
            for d, c in zip(self.spanning, self.coefficients)
            if c
        ]


class ModuleSpan:
    """A growing Q(q)-span of Hecke elements with membership certificates;
    optionally closed under right multiplication by chosen generators."""

    def __init__(self, n: int):
        self.n = n
        self.echelon = Echelon(sort_key=_perm_key)
        self.spanning: list[HeckeElement] = []
        self.descriptions: list[str] = []
        self._queue: list[int] = []

    def add(self, x: HeckeElement, desc: str) -> bool:
        if x.is_zero():
            return False
        independent, _ = self.echelon.insert(x.terms, tag=len(self.spanning))
        if independent:
            self.spanning.append(x)
            self.descriptions.append(desc)
            self._queue.append(len(self.spanning) - 1)
        return independent

    def close_right(self, gen_indices: Iterable[int]):
        """Close under right multiplication until the rank stops growing."""
        gen_indices = sorted(gen_indices)
        while self._queue:
            k = self._queue.pop(0)
            x, d = self.spanning[k], self.descriptions[k]
            for i in gen_indices:
                self.add(mul_gen(x, i), f"{d}*T{i}")

    def membership(self, h: HeckeElement) -> SpanResult:
        combo = self.echelon.membership(h.terms)
        descs = tuple(self.descriptions)
        if combo is None:
            return SpanResult(False, None, descs)
        rf = tuple(combo.get(j, RF_ZERO) for j in range(len(self.spanning)))
        try:
            lp = tuple(rf_convert(c) for c in rf)
        except NotLaurentError:
            return SpanResult(False, None, descs, rf)
        return SpanResult(True, lp, descs, rf)


def span_membership(
    h: HeckeElement,
    generators: Sequence[HeckeElement],
    *,
    right_module_over: Iterable[int] | None = None,
    descriptions: Sequence[str] | None = None,
) -> SpanResult:
    """Decide h in span(generators), or in the right module they generate
    when `right_module_over` lists algebra generator indices.  Solves over
    Q(q) and accepts only Laurent-integral certificates."""
    span = ModuleSpan(h.degree)
    descs = list(descriptions) if descriptions is not None else [
        f"g{k}" for k in range(len(generators))]
    for x, d in zip(generators, descs):
        span.add(x, d)
    if right_module_over is not None:
        span.close_right(right_module_over)
    return span.membership(h)


# -- M^lambda, M_0^lambda and their intersection with the dominance ideal -----------


def m_module_spanning(shape: Partition) -> tuple[tuple[Tableau, ...], list[HeckeElement]]:
    """The permutation module M^lambda = m_lambda H_n is spanned over the ring
    by m_lambda T_{w(t)} with t row standard (one per coset)."""
    shape = tuple(shape)
    tabs = row_standard_tableaux(shape)
    return tabs, [m_row(shape, t) for t in tabs]


@lru_cache(maxsize=None)
def m0_module(shape: Partition) -> ModuleSpan:
    """The right module generated by all Garnir elements of the shape, closed
    under right multiplication by every T_i."""
    shape = tuple(shape)
    n = size_of(shape)
    span = ModuleSpan(n)
    for pos in garnir_positions(shape):
        span.add(h_garnir(shape, pos), f"h_garnir{pos}")
    span.close_right(range(1, n))
    return span


def _laurent_primitive(coeffs: list[RationalFunction]) -> list[LaurentPoly]:
    """Scale a rational vector by a common factor so the entries become
    Laurent polynomials with no common polynomial divisor."""
    from .exactpoly import _poly_divexact, _poly_gcd
    den = ONE
    for c in coeffs:
        if c.is_zero():
            continue
        g = _poly_gcd(den, c.den)
        den = _poly_divexact(den * c.den, g)
    scaled = [rf_convert(c * den) for c in coeffs]
    g = ZERO
    shift = None
    for c in scaled:
        if not c:
            continue
        shift = c.min_exp() if shift is None else min(shift, c.min_exp())
    for c in scaled:
        if c:
            g = _poly_gcd(g, c.shift(-c.min_exp()))
    if shift:
        scaled = [c.shift(-shift) if c else c for c in scaled]
    if g and g != ONE:
        scaled = [_poly_divexact(c, g) if c else c for c in scaled]
    return scaled


@lru_cache(maxsize=None)
def intersection_basis(shape: Partition) -> tuple[tuple[HeckeElement, ...],
                                                  tuple[tuple[LaurentPoly, ...], ...]]:
    """A basis over Q(q) of M^lambda intersect H^{> lambda}, each element
    scaled to have primitive Laurent coordinates over the row-standard
    spanning set of M^lambda.

    Returns (elements, coordinate vectors)."""
    shape = tuple(shape)
    n = size_of(shape)
    basis = murphy_basis(n)
    tabs, spanning = m_module_spanning(shape)
    # keep only the coordinates that must vanish: shapes not strictly
    # dominating lambda
    kill: list[dict] = []
    for elt in spanning:
        raw = basis.expand_raw(elt)
        vec = {}
        for j, c in raw.items():
            mu = basis.indices[j].shape
            if mu == shape or not dominates(mu, shape):
                vec[j] = c
        kill.append(vec)
    ech = Echelon(sort_key=lambda j: j)
    elements = []
    coords = []
    for k, vec in enumerate(kill):
        independent, combo = ech.insert(vec, tag=k)
        if independent:
            continue
        # vec_k = sum combo[u] vec_u, so x = A_k - sum combo[u] A_u kills all
        # low coordinates
        rf = [RF_ZERO] * len(spanning)
        rf[k] = RationalFunction.from_int(1)
        for u, c in combo.items():
            rf[u] = rf[u] - c
        lp = _laurent_primitive(rf)
        x = HeckeElement.zero(n)
        for c, elt in zip(lp, spanning):
            if c:
                x = x + elt.scale(c)
        elements.append(x)
        coords.append(tuple(lp))
    return tuple(elements), tuple(coords)


# -- cell modules -------------------------------------------------------------------


@dataclass
class CellElement:
    """Element of the cell module Delta^lambda in the basis {m^lambda_t}."""

    shape: Partition
    terms: dict[Tableau, LaurentPoly]

    def __post_init__(self):
        self.shape = tuple(self.shape)
        self.terms = {t: c for t, c in self.terms.items() if c}

    def __eq__(self, other):
        return (isinstance(other, CellElement) and self.shape == other.shape
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, t: Tableau) -> LaurentPoly:
        return self.terms.get(t, ZERO)

    def __add__(self, other: "CellElement") -> "CellElement":
        if self.shape != other.shape:
            raise ShapeMismatchError("cell elements of different shapes")
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t, ZERO) + c
            if s:
                out[t] = s
            elif t in out:
                del out[t]
        return CellElement(self.shape, out)

    def scale(self, c: LaurentPoly | int) -> "CellElement":
        if isinstance(c, int):
            c = LaurentPoly.from_int(c)
        return CellElement(self.shape, {t: x * c for t, x in self.terms.items()})


def cell_unit(shape: Partition, t: Tableau) -> CellElement:
    return CellElement(tuple(shape), {t: ONE})


@lru_cache(maxsize=None)
def cell_action_row(shape: Partition, t: Tableau, i: int) -> tuple:
    """Coordinates of m^lambda_t . T_i in Delta^lambda: expand
    m_lambda T_{w(t)} T_i and discard every shape strictly dominating lambda.

    Returns a tuple of (tableau, coefficient) pairs."""
    shape = tuple(shape)
    n = size_of(shape)
    if not 1 <= i <= n - 1:
        raise IndexError(f"T_{i} does not exist in H_{n}")
    basis = murphy_basis(n)
    h = mul_gen(m_row(shape, t), i)
    raw = basis.expand_raw(h)
    tsuper = superstandard(shape)
    out = []
    for j, c in raw.items():
        idx = basis.indices[j]
        if idx.shape == shape:
            if idx.s != tsuper:
                raise RuntimeError("cell coordinates hit an s-index other than "
                                   "the superstandard tableau: bug")
            out.append((idx.t, c))
        elif not dominates(idx.shape, shape):
            raise RuntimeError("expansion of a permutation-module element left "
                               "the dominance ideal: bug")
    return tuple(out)


def cell_action(x: CellElement, i: int) -> CellElement:
    """Right action of the generator T_i on the cell module."""
    out = CellElement(x.shape, {})
    for t, c in x.terms.items():
        row = CellElement(x.shape, dict(cell_action_row(x.shape, t, i)))
        out = out + row.scale(c)
    return out


def cell_action_matrix(shape: Partition, i: int,
                       basis_tabs: Sequence[Tableau] | None = None) -> list[list[LaurentPoly]]:
    """Matrix of T_i on Delta^lambda: row r lists the coordinates of
    m_{basis[r]} . T_i over the given basis order (default: the standard
    tableaux in dominance-descending order)."""
    shape = tuple(shape)
    tabs = tuple(basis_tabs) if basis_tabs is not None else standard_tableaux(shape)
    pos = {t: k for k, t in enumerate(tabs)}
    out = []
    for t in tabs:
        row = [ZERO] * len(tabs)
        for v, c in cell_action_row(shape, t, i):
            row[pos[v]] = c
        out.append(row)
    return out


def gram_pairing(shape: Partition, s: Tableau, t: Tableau) -> LaurentPoly:
    """The cell module bilinear form <s, t>, defined by

        m_{us} m_{tv}  ==  <s, t> m_{uv}   modulo more dominant shapes,

    computed with u = v = superstandard(shape)."""
    shape = tuple(shape)
    if shape_of(s) != shape or shape_of(t) != shape:
        raise ShapeMismatchError(f"tableaux do not have shape {shape}")
    prod = mul(m_row(shape, s), star(m_row(shape, t)))
    tsuper = superstandard(shape)
    return expand(prod).coefficient(shape, tsuper, tsuper)


def gram_matrix(shape: Partition) -> list[list[LaurentPoly]]:
    tabs = standard_tableaux(tuple(shape))
    return [[gram_pairing(shape, s, t) for t in tabs] for s in tabs]
