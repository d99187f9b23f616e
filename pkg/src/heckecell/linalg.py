"""Incremental row echelon over Q(q) with combination tracking.

Vectors are sparse dicts from hashable keys to RationalFunction (or
LaurentPoly, coerced on the way in).  Each inserted row remembers how it was
formed from the original generators, so membership tests come with
certificates and dependent insertions yield nullspace combinations.

Pivot selection prefers entries that are units of Z[q, q^-1]; with unit
pivots all arithmetic stays inside the ring and stays fast.
"""

from __future__ import annotations

from typing import Callable, Hashable

from .exactpoly import RF_ONE, LaurentPoly, RationalFunction

Vector = dict


def _as_rf(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    if isinstance(c, LaurentPoly):
        return RationalFunction.from_laurent(c)
    return RationalFunction.from_int(c)


def rf_vector(vec: dict) -> Vector:
    return {k: _as_rf(c) for k, c in vec.items() if c}


def _sub_scaled(target: Vector, alpha: RationalFunction, row: Vector):
    for k, c in row.items():
        delta = alpha * c
        s = target.get(k)
        s = -delta if s is None else s - delta
        if s:
            target[k] = s
        elif k in target:
            del target[k]


def is_unit_rf(c: RationalFunction) -> bool:
    """True iff c is a unit +-q^k of Z[q, q^-1]."""
    return c.is_laurent() and c.num.is_unit()


class Echelon:
    """Forward row echelon; rows are reduced against all earlier rows only."""

    def __init__(self, sort_key: Callable[[Hashable], object] | None = None):
        self.sort_key = sort_key or (lambda k: k)
        # parallel lists: pivot key, pivot coeff inverse, row vector, combination
        self.pivots: list[Hashable] = []
        self.inv_coeffs: list[RationalFunction] = []
        self.rows: list[Vector] = []
        self.combos: list[Vector] = []
        self.ntags = 0

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector) -> tuple[Vector, Vector]:
        """Return (residual, combination) with
        vec = residual + sum combination[tag] * generator_tag."""
        cur = dict(vec)
        combo: Vector = {}
        for p, inv, row, rcombo in zip(self.pivots, self.inv_coeffs,
                                       self.rows, self.combos):
            c = cur.get(p)
            if c is None:
                continue
            alpha = c * inv
            _sub_scaled(cur, alpha, row)
            for tag, cc in rcombo.items():
                s = combo.get(tag)
                s = s + alpha * cc if s is not None else alpha * cc
                if s:
                    combo[tag] = s
                elif tag in combo:
                    del combo[tag]
        return cur, combo

    def _choose_pivot(self, vec: Vector) -> Hashable:
        units = [k for k, c in vec.items() if is_unit_rf(c)]
        pool = units or vec.keys()
        return min(pool, key=self.sort_key)

    def insert(self, vec: Vector, tag: Hashable | None = None) -> tuple[bool, Vector]:
        """Insert a generator row.  Returns (independent, combination); for a
        dependent row the combination expresses vec over earlier generators."""
        if tag is None:
            tag = self.ntags
        self.ntags += 1
        residual, combo = self.reduce(rf_vector(vec))
        if not residual:
            return False, combo
        # residual = vec - sum combo[t]*gen_t, so record vec's own tag
        row_combo = {t: -c for t, c in combo.items()}
        row_combo[tag] = RF_ONE
        p = self._choose_pivot(residual)
        self.pivots.append(p)
        self.inv_coeffs.append(RF_ONE / residual[p])
        self.rows.append(residual)
        self.combos.append(row_combo)
        return True, combo

    def membership(self, vec: Vector) -> Vector | None:
        """If vec lies in the span, return {tag: coefficient} over the
        inserted generators; otherwise None."""
        residual, combo = self.reduce(rf_vector(vec))
        if residual:
            return None
        return combo
