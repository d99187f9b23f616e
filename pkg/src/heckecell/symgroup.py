"""Symmetric group combinatorics with the group acting on the right.

A permutation of {1..n} is a tuple in one-line notation:
``w = (w(1), ..., w(n))``.  Products compose left to right:
``compose(v, w)`` applies v first and then w, so that
``act(compose(v, w), i) == act(w, act(v, i))``.

Under this convention ``s_a s_{a+1} ... s_{n-1}`` (read left to right)
equals the cycle (n, n-1, ..., a) sending a to n and x to x-1 for a < x <= n.

>>> compose(simple(1, 3), simple(2, 3))
(3, 1, 2)
>>> descending_cycle(3, 1)
(3, 1, 2)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Composition = tuple[int, ...]


class DegreeMismatchError(ValueError):
    """Operands live in symmetric groups of different degrees."""


class NotASubgroupError(ValueError):
    """The inner composition does not refine the outer one."""


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_perm(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def simple(i: int, n: int) -> Perm:
    """The adjacent transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"s_{i} does not exist in S_{n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def act(w: Perm, point: int) -> int:
    return w[point - 1]


def compose(v: Perm, w: Perm) -> Perm:
    """The product v.w: apply v first, then w."""
    if len(v) != len(w):
        raise DegreeMismatchError(f"degrees {len(v)} and {len(w)} differ")
    return tuple(w[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def length(w: Perm) -> int:
    """Number of inversions; equals the length of any reduced word for w."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descending_cycle(n: int, a: int) -> Perm:
    """The cycle (n, n-1, ..., a): a -> n and x -> x-1 for a < x <= n.

    >>> descending_cycle(4, 2)
    (1, 4, 2, 3)
    """
    if not 1 <= a <= n:
        raise IndexError(f"cycle (n..{a}) needs 1 <= a <= n = {n}")
    return tuple(range(1, a)) + (n,) + tuple(range(a, n))


def multiply_gen_right(w: Perm, i: int) -> Perm:
    """compose(w, s_i): swaps the values i and i+1 in the one-line word."""
    out = list(w)
    pi, pj = w.index(i), w.index(i + 1)
    out[pi], out[pj] = i + 1, i
    return tuple(out)


def ascends_right(w: Perm, i: int) -> bool:
    """True iff length(compose(w, s_i)) = length(w) + 1."""
    return w.index(i) < w.index(i + 1)


@lru_cache(maxsize=None)
def reduced_word(w: Perm) -> tuple[int, ...]:
    """Canonical reduced word for w: evaluating s_{i1}..s_{ik} left to right
    under ``compose`` gives back w, and k = length(w).

    The word is produced selection-sort style, repeatedly moving the largest
    out-of-place value into place.

    >>> reduced_word(descending_cycle(5, 2))
    (2, 3, 4)
    """
    seq = list(w)
    word = []
    for k in range(len(w), 0, -1):
        p = seq.index(k)
        while p < k - 1:
            seq[p], seq[p + 1] = seq[p + 1], seq[p]
            word.append(p + 1)
            p += 1
    return tuple(word)


def word_to_perm(word: Iterable[int], n: int) -> Perm:
    w = identity(n)
    for i in word:
        w = multiply_gen_right(w, i)
    return w


def random_reduced_word(w: Perm, rng) -> tuple[int, ...]:
    """A uniformly chosen-from-descents (not uniform over all words) reduced
    word for w; useful for testing word independence."""
    word = []
    cur = w
    while cur != identity(len(w)):
        descents = [i for i in range(1, len(w)) if not ascends_right(cur, i)]
        i = rng.choice(descents)
        cur = multiply_gen_right(cur, i)
        word.append(i)
    word.reverse()
    return tuple(word)


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic one-line order."""
    return itertools.permutations(range(1, n + 1))


def composition_blocks(nu: Composition) -> list[range]:
    """Consecutive blocks {1..nu_1}, {nu_1+1..nu_1+nu_2}, ... as ranges."""
    blocks = []
    start = 1
    for part in nu:
        blocks.append(range(start, start + part))
        start += part
    return blocks


@lru_cache(maxsize=None)
def young_subgroup(nu: Composition) -> tuple[Perm, ...]:
    """All elements of S_nu = S_{nu_1} x S_{nu_2} x ... embedded block-wise
    in S_n, n = sum(nu).  Sorted by one-line word.

    >>> len(young_subgroup((3, 2, 1)))
    12
    """
    n = sum(nu)
    blocks = composition_blocks(nu)
    out = []
    for pieces in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = [0] * n
        for block, piece in zip(blocks, pieces):
            for pos, val in zip(block, piece):
                images[pos - 1] = val
        out.append(tuple(images))
    out.sort()
    return tuple(out)


def refines(inner: Composition, outer: Composition) -> bool:
    """True iff S_inner is contained in S_outer, i.e. inner is obtained by
    splitting the parts of outer in order."""
    if sum(inner) != sum(outer):
        return False
    it = iter(inner)
    for part in outer:
        acc = 0
        while acc < part:
            nxt = next(it, None)
            if nxt is None:
                return False
            acc += nxt
        if acc != part:
            return False
    return next(it, None) is None


def distinguished_coset_reps(inner: Composition, outer: Composition) -> tuple[Perm, ...]:
    """Minimal-length representatives of the right cosets {compose(v, x) :
    v in S_inner} of S_inner in S_outer.

    Each representative x satisfies length(compose(v, x)) = length(v) +
    length(x) for every v in the inner subgroup.
    """
    if not refines(inner, outer):
        raise NotASubgroupError(f"{inner} does not refine {outer}")
    inner_elems = young_subgroup(inner)
    outer_elems = young_subgroup(outer)
    reps: dict[Perm, Perm] = {}
    for x in outer_elems:
        coset = min(compose(v, x) for v in inner_elems)
        cur = reps.get(coset)
        if cur is None or (length(x), x) < (length(cur), cur):
            reps[coset] = x
    return tuple(sorted(reps.values(), key=lambda x: (length(x), x)))


# -- text forms ---------------------------------------------------------------


def format_perm(w: Perm) -> str:
    return ",".join(str(x) for x in w)


def parse_perm(text: str, n: int | None = None) -> Perm:
    """Parse "3,1,2" one-line notation, or the cycle shorthand "(n..a)".

    >>> parse_perm("3,1,2")
    (3, 1, 2)
    >>> parse_perm("(4..2)", 4)
    (1, 4, 2, 3)
    """
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        hi, lo = text[1:-1].split("..")
        hi, lo = int(hi), int(lo)
        if n is None:
            n = hi
        cycle = descending_cycle(hi, lo)
        return cycle + tuple(range(hi + 1, n + 1))
    w = tuple(int(x) for x in text.split(","))
    if not is_perm(w):
        raise ValueError(f"not a permutation of 1..{len(w)}: {text!r}")
    if n is not None and len(w) != n:
        raise DegreeMismatchError(f"expected degree {n}, got {len(w)}")
    return w
