"""Tableaux combinatorics.

Standard tableau counts are checked against both the hook length formula and
a brute-force filter over all bijective fillings, so the recursive
enumeration, the product formula and the standardness predicate validate one
another.
"""

import itertools

import pytest

from heckecell.symgroup import all_perms, identity
from heckecell.tableaux import (
    BadRestrictionIndexError,
    InvalidGarnirPositionError,
    NotAddableError,
    ShapeMismatchError,
    SizeMismatchError,
    act_tableau,
    addable_nodes,
    adjoin,
    dominance_key,
    dominates,
    enumerate_tableaux,
    garnir_positions,
    garnir_strip,
    garnir_tableau,
    hook_length_count,
    is_partition,
    is_row_standard,
    is_standard,
    node_of_entry,
    partitions_of,
    remove_node,
    removable_nodes,
    restrict,
    row_of_entry,
    row_standard_tableaux,
    shape_below,
    standard_tableaux,
    superstandard,
    tableau_dominates,
    tableau_from_word,
    word_of,
)


def brute_force_standard(shape):
    """Independent oracle: filter all bijective fillings."""
    n = sum(shape)
    out = []
    for w in itertools.permutations(range(1, n + 1)):
        t = tableau_from_word(shape, w)
        if is_standard(t):
            out.append(t)
    return out


def test_superstandard():
    assert superstandard((3, 2, 1)) == ((1, 2, 3), (4, 5), (6,))
    assert superstandard((1,)) == ((1,),)
    assert superstandard((2, 2)) == ((1, 2), (3, 4))
    assert word_of(superstandard((3, 1))) == identity(4)


def test_word_of():
    assert word_of(((1, 3), (2,))) == (1, 3, 2)
    # round trip through the action on entries
    for shape in partitions_of(4):
        base = superstandard(shape)
        for t in standard_tableaux(shape):
            assert act_tableau(base, word_of(t)) == t


def test_word_of_is_bijection():
    # the action on fillings is free and transitive
    for shape in partitions_of(5):
        words = {word_of(tableau_from_word(shape, w)) for w in all_perms(5)}
        assert len(words) == 120


def test_partitions_of():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions_of(0) == ((),)
    assert all(is_partition(p) for p in partitions_of(7))
    assert len(partitions_of(7)) == 15


def test_dominates():
    assert dominates((3, 2), (3, 1, 1))
    assert dominates((2, 2, 1), (2, 2, 1))
    assert not dominates((2, 2, 1), (3, 1, 1))
    with pytest.raises(SizeMismatchError):
        dominates((2, 1), (2, 2))


def test_partition_order_extends_dominance():
    # lexicographically descending listing is a linear extension
    for n in range(2, 8):
        shapes = partitions_of(n)
        for i, a in enumerate(shapes):
            for b in shapes[i + 1:]:
                assert not (dominates(b, a) and a != b)


def test_standard_counts_match_hook_formula_and_brute_force():
    for n in range(1, 8):
        for shape in partitions_of(n):
            assert len(standard_tableaux(shape)) == hook_length_count(shape)
    for n in range(1, 6):
        for shape in partitions_of(n):
            assert sorted(standard_tableaux(shape)) == sorted(brute_force_standard(shape))


def test_known_counts():
    assert len(standard_tableaux((4,))) == 1
    assert len(standard_tableaux((2, 1))) == 2
    assert len(standard_tableaux((3, 2, 1))) == 16


def test_row_standard_count():
    import math
    for shape in partitions_of(5):
        expected = math.factorial(5)
        for part in shape:
            expected //= math.factorial(part)
        assert len(row_standard_tableaux(shape)) == expected


def test_enumerate_tableaux_dispatch():
    assert enumerate_tableaux((2, 1), "standard") == standard_tableaux((2, 1))
    assert enumerate_tableaux((2, 1), "row_standard") == row_standard_tableaux((2, 1))
    with pytest.raises(ValueError):
        enumerate_tableaux((2, 1), "semistandard")


def test_enumerations_sorted_by_descending_dominance():
    for shape in partitions_of(5):
        for tabs in (standard_tableaux(shape), row_standard_tableaux(shape)):
            keys = [dominance_key(t) for t in tabs]
            assert keys == sorted(keys, reverse=True)
            assert tabs[0] == superstandard(shape)


def test_node_lists():
    assert removable_nodes((3, 2, 1)) == ((3, 1), (2, 2), (1, 3))
    assert addable_nodes((3, 2, 1)) == ((1, 4), (2, 3), (3, 2), (4, 1))
    for n in range(1, 8):
        for shape in partitions_of(n):
            assert len(addable_nodes(shape)) == len(removable_nodes(shape)) + 1
            rows = [r for r, _ in removable_nodes(shape)]
            assert rows == sorted(rows, reverse=True)


def test_adjoin_restrict():
    t = ((1, 2), (3,))
    assert adjoin(t, (1, 3)) == ((1, 2, 4), (3,))
    assert adjoin(t, (2, 2)) == ((1, 2), (3, 4))
    assert adjoin(t, (3, 1)) == ((1, 2), (3,), (4,))
    with pytest.raises(NotAddableError):
        adjoin(t, (1, 4))
    with pytest.raises(NotAddableError):
        adjoin(t, (4, 1))
    assert restrict(superstandard((3, 2, 1)), 3) == superstandard((3,))
    for shape in partitions_of(4):
        for t4 in standard_tableaux(shape):
            for node in addable_nodes(shape):
                assert restrict(adjoin(t4, node), 4) == t4
    with pytest.raises(BadRestrictionIndexError):
        restrict(t, 3)


def test_entry_lookups():
    t = ((1, 3), (2,))
    assert row_of_entry(t, 3) == 1
    assert node_of_entry(t, 2) == (2, 1)
    assert shape_below(t, 1) == (1,)
    assert shape_below(t, 2) == (1, 1)
    assert shape_below(superstandard((3, 2)), 4) == (3, 1)


def test_tableau_dominance_examples():
    g = garnir_tableau((3, 2, 1), (1, 1))
    assert tableau_dominates(superstandard((3, 2, 1)), g)
    assert tableau_dominates(g, g)
    with pytest.raises(ShapeMismatchError):
        tableau_dominates(((1, 2),), ((1,), (2,)))


def test_superstandard_dominates_everything():
    for n in range(2, 6):
        for shape in partitions_of(n):
            top = superstandard(shape)
            for t in row_standard_tableaux(shape):
                assert tableau_dominates(top, t)


def test_tableau_dominance_is_partial_order():
    for shape in partitions_of(5):
        tabs = row_standard_tableaux(shape)
        for a in tabs:
            assert tableau_dominates(a, a)
        for a in tabs:
            for b in tabs:
                if tableau_dominates(a, b) and tableau_dominates(b, a):
                    assert a == b
        import random
        rng = random.Random(0)
        for _ in range(200):
            a, b, c = rng.choice(tabs), rng.choice(tabs), rng.choice(tabs)
            if tableau_dominates(a, b) and tableau_dominates(b, c):
                assert tableau_dominates(a, c)


def test_garnir_examples():
    assert garnir_tableau((3, 2, 1), (1, 1)) == ((2, 3, 4), (1, 5), (6,))
    assert garnir_tableau((3, 2, 1), (2, 1)) == ((1, 2, 3), (5, 6), (4,))
    assert garnir_tableau((3, 2, 1), (1, 2)) == ((1, 4, 5), (2, 3), (6,))
    with pytest.raises(InvalidGarnirPositionError):
        garnir_tableau((3, 2, 1), (3, 1))


def test_garnir_row_standard_not_standard():
    for n in range(2, 7):
        for shape in partitions_of(n):
            for pos in garnir_positions(shape):
                g = garnir_tableau(shape, pos)
                assert is_row_standard(g) and not is_standard(g)


def _agrees_outside_strip(t, shape, pos):
    base = superstandard(shape)
    strip = set(garnir_strip(shape, pos))
    for r, row in enumerate(t, start=1):
        for c, x in enumerate(row, start=1):
            if (r, c) not in strip and x != base[r - 1][c - 1]:
                return False
    return True


def test_garnir_strip_fillings():
    # row-standard fillings of the strip agreeing with the superstandard
    # tableau outside it are standard, apart from the Garnir tableau itself
    for n in range(2, 7):
        for shape in partitions_of(n):
            for pos in garnir_positions(shape):
                g = garnir_tableau(shape, pos)
                agreeing = [t for t in row_standard_tableaux(shape)
                            if _agrees_outside_strip(t, shape, pos)]
                for t in agreeing:
                    assert is_standard(t) or t == g
                # and dominance over g characterizes exactly those tableaux
                stds = [t for t in standard_tableaux(shape)
                        if tableau_dominates(t, g)]
                assert sorted(stds) == sorted(t for t in agreeing if t != g)


def test_row_standard_over_garnir_enumeration():
    # the row-standard tableaux dominating g are g itself plus the standard
    # tableaux strictly dominating it
    for n in range(2, 7):
        for shape in partitions_of(n):
            for pos in garnir_positions(shape):
                g = garnir_tableau(shape, pos)
                over = [t for t in row_standard_tableaux(shape)
                        if tableau_dominates(t, g)]
                expected = [g] + [t for t in standard_tableaux(shape)
                                  if tableau_dominates(t, g)]
                assert sorted(over) == sorted(expected)


def test_remove_node():
    assert remove_node((3, 2, 1), (2, 2)) == (3, 1, 1)
    assert remove_node((1,), (1, 1)) == ()
    from heckecell.tableaux import NotRemovableError
    with pytest.raises(NotRemovableError):
        remove_node((3, 2, 1), (1, 1))
