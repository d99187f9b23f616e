"""Young diagrams, tableaux, dominance orders, Garnir tableaux, node operations.

A partition is a weakly decreasing tuple of positive ints; a composition is
any tuple of positive ints.  A tableau is a tuple of row tuples whose entries
are exactly 1..n.  A node is a 1-based (row, col) pair.

The symmetric group acts on tableaux on the right through the entries, and
``word_of(t)`` is the unique w with t = superstandard(shape) . w; concretely
its one-line word is the row reading of t.

>>> word_of(((1, 3), (2,)))
(1, 3, 2)
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .symgroup import Perm, act

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Node = tuple[int, int]
Tableau = tuple[tuple[int, ...], ...]


class SizeMismatchError(ValueError):
    """Dominance comparison of shapes of different sizes."""


class ShapeMismatchError(ValueError):
    """Tableau operands do not have the same shape."""


class InvalidGarnirPositionError(ValueError):
    """(i, j) is a Garnir position only when (i+1, j) is also a node."""


class NotAddableError(ValueError):
    pass


class NotRemovableError(ValueError):
    pass


class BadRestrictionIndexError(ValueError):
    pass


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lexicographically descending, so the order is a
    linear extension of descending dominance: (n) first, (1,..,1) last.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n == 0:
        return ((),)
    out = []

    def build(remaining: int, max_part: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(max_part, remaining), 0, -1):
            build(remaining - part, part, prefix + (part,))

    build(n, n, ())
    return tuple(out)


def shape_of(t: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in t)


def size_of(shape: Sequence[int]) -> int:
    return sum(shape)


def superstandard(shape: Composition) -> Tableau:
    """The tableau filled 1..n left to right along the rows.

    >>> superstandard((3, 2, 1))
    ((1, 2, 3), (4, 5), (6,))
    """
    rows = []
    k = 1
    for part in shape:
        rows.append(tuple(range(k, k + part)))
        k += part
    return tuple(rows)


def word_of(t: Tableau) -> Perm:
    """The permutation w with t = superstandard(shape) . w (row reading)."""
    return tuple(x for row in t for x in row)


def act_tableau(t: Tableau, w: Perm) -> Tableau:
    """Apply w to every entry of t."""
    return tuple(tuple(act(w, x) for x in row) for row in t)


def tableau_from_word(shape: Composition, w: Perm) -> Tableau:
    """Inverse of word_of for a fixed shape."""
    rows = []
    pos = 0
    for part in shape:
        rows.append(tuple(w[pos:pos + part]))
        pos += part
    return tuple(rows)


def is_row_standard(t: Tableau) -> bool:
    return all(all(row[i] < row[i + 1] for i in range(len(row) - 1)) for row in t)


def is_standard(t: Tableau) -> bool:
    if not is_row_standard(t):
        return False
    shape = shape_of(t)
    if not is_partition(shape):
        return False
    for r in range(len(t) - 1):
        for c in range(len(t[r + 1])):
            if t[r][c] >= t[r + 1][c]:
                return False
    return True


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Dominance on shapes of equal size: every prefix sum of a is >= that of b.

    >>> dominates((3, 2), (3, 1, 1))
    True
    """
    if sum(a) != sum(b):
        raise SizeMismatchError(f"sizes {sum(a)} and {sum(b)} differ")
    return _prefix_dominates(a, b)


def _prefix_dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    pa = pb = 0
    for i in range(max(len(a), len(b))):
        pa += a[i] if i < len(a) else 0
        pb += b[i] if i < len(b) else 0
        if pa < pb:
            return False
    return True


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of a partition shape, sorted descending in the
    dominance order (superstandard first).

    >>> len(standard_tableaux((3, 2, 1)))
    16
    """
    n = size_of(shape)
    if n == 0:
        return ((),)
    out: list[Tableau] = []
    for node in removable_nodes(shape):
        r, c = node
        smaller = _remove_part(shape, r)
        for t in standard_tableaux(smaller):
            out.append(adjoin(t, node))
    out.sort(key=dominance_key, reverse=True)
    return tuple(out)


def _remove_part(shape: Partition, row: int) -> Partition:
    parts = list(shape)
    parts[row - 1] -= 1
    if parts[row - 1] == 0:
        parts.pop(row - 1)
    return tuple(parts)


@lru_cache(maxsize=None)
def row_standard_tableaux(shape: Composition) -> tuple[Tableau, ...]:
    """All row-standard tableaux (rows increasing; no column condition),
    sorted descending in the dominance order."""
    n = size_of(shape)
    out: list[Tableau] = []

    def distribute(rows: tuple[tuple[int, ...], ...], remaining: frozenset[int], row_idx: int):
        if row_idx == len(shape):
            out.append(rows)
            return
        import itertools
        for chosen in itertools.combinations(sorted(remaining), shape[row_idx]):
            distribute(rows + (chosen,), remaining - set(chosen), row_idx + 1)

    distribute((), frozenset(range(1, n + 1)), 0)
    out.sort(key=dominance_key, reverse=True)
    return tuple(out)


def enumerate_tableaux(shape: Partition, kind: str = "standard") -> tuple[Tableau, ...]:
    if kind == "standard":
        return standard_tableaux(shape)
    if kind == "row_standard":
        return row_standard_tableaux(shape)
    raise ValueError(f"unknown tableau kind: {kind!r}")


def hook_length_count(shape: Partition) -> int:
    """Number of standard tableaux by the hook length formula (independent of
    the enumeration above)."""
    n = size_of(shape)
    if n == 0:
        return 1
    cols = [0] * (shape[0] if shape else 0)
    for part in shape:
        for c in range(part):
            cols[c] += 1
    hooks = 1
    for r, part in enumerate(shape, start=1):
        for c in range(1, part + 1):
            hooks *= (part - c) + (cols[c - 1] - r) + 1
    return math.factorial(n) // hooks


# -- node operations ----------------------------------------------------------


def removable_nodes(shape: Partition) -> tuple[Node, ...]:
    """Removable nodes listed from bottom row to top row.

    >>> removable_nodes((3, 2, 1))
    ((3, 1), (2, 2), (1, 3))
    """
    out = []
    for r in range(len(shape), 0, -1):
        if r == len(shape) or shape[r] < shape[r - 1]:
            out.append((r, shape[r - 1]))
    return tuple(out)


def addable_nodes(shape: Partition) -> tuple[Node, ...]:
    """Addable nodes listed from top row to bottom row."""
    out = []
    for r in range(1, len(shape) + 1):
        if r == 1 or shape[r - 1] < shape[r - 2]:
            out.append((r, shape[r - 1] + 1))
    out.append((len(shape) + 1, 1))
    return tuple(out)


def remove_node(shape: Partition, node: Node) -> Partition:
    if node not in removable_nodes(shape):
        raise NotRemovableError(f"{node} is not removable from {shape}")
    return _remove_part(shape, node[0])


def adjoin(t: Tableau, node: Node) -> Tableau:
    """t with the entry n+1 placed in the addable node."""
    shape = shape_of(t)
    r, c = node
    n = size_of(shape)
    if r == len(shape) + 1 and c == 1:
        return t + ((n + 1,),)
    if not (1 <= r <= len(shape) and c == shape[r - 1] + 1
            and (r == 1 or shape[r - 2] >= c)):
        raise NotAddableError(f"{node} is not addable to shape {shape}")
    rows = list(t)
    rows[r - 1] = rows[r - 1] + (n + 1,)
    return tuple(rows)


def restrict(t: Tableau, k: int) -> Tableau:
    """Delete the entries k+1..n from t."""
    n = size_of(shape_of(t))
    if not 1 <= k < n:
        raise BadRestrictionIndexError(f"need 1 <= k < {n}, got {k}")
    rows = []
    for row in t:
        kept = tuple(x for x in row if x <= k)
        if kept:
            rows.append(kept)
    return tuple(rows)


def row_of_entry(t: Tableau, m: int) -> int:
    for r, row in enumerate(t, start=1):
        if m in row:
            return r
    raise ValueError(f"entry {m} not in tableau")


def node_of_entry(t: Tableau, m: int) -> Node:
    for r, row in enumerate(t, start=1):
        for c, x in enumerate(row, start=1):
            if x == m:
                return (r, c)
    raise ValueError(f"entry {m} not in tableau")


def shape_below(t: Tableau, k: int) -> tuple[int, ...]:
    """Row counts of the nodes holding entries 1..k, trailing zeros trimmed.

    For row-standard tableaux these counts determine the occupied node set,
    since entries <= k sit left-justified in each row.
    """
    counts = [sum(1 for x in row if x <= k) for row in t]
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


# -- dominance on tableaux ------------------------------------------------------


def dominance_key(t: Tableau):
    """Sort key: componentwise larger keys are more dominant, so sorting with
    reverse=True is a linear extension of descending tableau dominance."""
    n = size_of(shape_of(t))
    key = []
    counts = [0] * len(t)
    places = {x: r for r, row in enumerate(t) for x in row}
    for k in range(1, n + 1):
        counts[places[k]] += 1
        acc = 0
        for c in counts:
            acc += c
            key.append(acc)
    return tuple(key)


def tableau_dominates(s: Tableau, t: Tableau) -> bool:
    """Dominance on row-standard tableaux of equal shape: for every k the
    shape of entries 1..k of s dominates that of t, by prefix sums."""
    if shape_of(s) != shape_of(t):
        raise ShapeMismatchError(f"shapes {shape_of(s)} and {shape_of(t)} differ")
    n = size_of(shape_of(s))
    cs = [0] * len(s)
    ct = [0] * len(t)
    ps = {x: r for r, row in enumerate(s) for x in row}
    pt = {x: r for r, row in enumerate(t) for x in row}
    for k in range(1, n + 1):
        cs[ps[k]] += 1
        ct[pt[k]] += 1
        if not _prefix_dominates(cs, ct):
            return False
    return True


# -- Garnir tableaux ------------------------------------------------------------


def garnir_positions(shape: Partition) -> tuple[Node, ...]:
    """Nodes (i, j) such that (i+1, j) is also a node, row-reading order."""
    out = []
    for i in range(1, len(shape)):
        for j in range(1, shape[i] + 1):
            out.append((i, j))
    return tuple(out)


def garnir_strip(shape: Partition, pos: Node) -> tuple[Node, ...]:
    """Nodes of the (i, j)-Garnir strip: row i weakly right of (i, j) and row
    i+1 weakly left of (i+1, j)."""
    i, j = pos
    strip = [(i + 1, c) for c in range(1, j + 1)]
    strip += [(i, c) for c in range(j, shape[i - 1] + 1)]
    return tuple(strip)


def garnir_tableau(shape: Partition, pos: Node) -> Tableau:
    """The (i, j)-Garnir tableau: agrees with the superstandard tableau outside
    the strip; inside, the entries of the strip are written left to right,
    first along row i+1 and then along row i.

    >>> garnir_tableau((3, 2, 1), (1, 1))
    ((2, 3, 4), (1, 5), (6,))
    """
    i, j = pos
    if not (i + 1 <= len(shape) and j <= shape[i]):
        raise InvalidGarnirPositionError(f"({i}, {j}) has no node below in {shape}")
    t = superstandard(shape)
    a = t[i - 1][j - 1]
    rows = [list(row) for row in t]
    fill = iter(range(a, t[i][j - 1] + 1))
    for r, c in garnir_strip(shape, pos):
        rows[r - 1][c - 1] = next(fill)
    return tuple(tuple(row) for row in rows)
