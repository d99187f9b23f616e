"""Restriction filtration layers, quotient isomorphisms, supporting lemmas."""

from heckecell.exactpoly import Q, QINV
from heckecell.filtration import (
    build_filtration,
    case_identities_all,
    check_invariant_span,
    check_submodule,
    corollary_row_cases,
    corollary_shape_below_cases,
    dimension_accounting,
    quotient_action_matrix,
    verify_adjoin_lemma,
    verify_case_identities,
    verify_conjugation_identity,
    verify_coset_identity,
    verify_iso,
    verify_main_theorem,
    verify_order_preserving,
    verify_phi_factors,
    verify_phi_well_defined,
)
from heckecell.tableaux import (
    hook_length_count,
    partitions_of,
    removable_nodes,
    standard_tableaux,
    superstandard,
)


def test_build_filtration_21():
    layers = build_filtration((2, 1))
    assert [l.alpha for l in layers] == [(2, 1), (1, 2)]
    assert [l.mu for l in layers] == [(2,), (1, 1)]
    assert layers[0].basis == (((1, 2), (3,)),)
    assert layers[1].basis == (((1, 2), (3,)), ((1, 3), (2,)))


def test_build_filtration_single_row():
    layers = build_filtration((4,))
    assert len(layers) == 1
    assert layers[0].mu == (3,)


def test_build_filtration_staircase():
    layers = build_filtration((3, 2, 1))
    assert [l.mu for l in layers] == [(3, 2), (3, 1, 1), (2, 2, 1)]
    assert len(layers[-1].basis) == 16


def test_layer_bases_nested_with_cell_dimensions():
    for n in range(1, 7):
        for shape in partitions_of(n):
            layers = build_filtration(shape)
            assert set(layers[-1].basis) == set(standard_tableaux(shape))
            prev = 0
            for layer in layers:
                assert len(layer.new_tableaux) == hook_length_count(layer.mu)
                assert len(layer.basis) == prev + len(layer.new_tableaux)
                assert set(layer.basis) >= set()
                prev = len(layer.basis)


def test_lifting_preserves_dominance_order():
    # the layer difference in dominance-descending order is exactly the
    # dominance-descending mu-basis with alpha adjoined
    from heckecell.tableaux import adjoin
    for n in range(2, 7):
        for shape in partitions_of(n):
            for layer in build_filtration(shape):
                lifted = tuple(adjoin(s, layer.alpha)
                               for s in standard_tableaux(layer.mu))
                assert lifted == layer.new_tableaux


def test_check_submodule():
    assert check_submodule((2, 1), 1)["verdict"] == "pass"
    for n in range(1, 6):
        for shape in partitions_of(n):
            for layer in build_filtration(shape):
                assert check_submodule(shape, layer.j)["verdict"] == "pass"


def test_quotient_matrices_21():
    assert quotient_action_matrix((2, 1), 1, 1) == [[Q]]
    assert quotient_action_matrix((2, 1), 2, 1) == [[-QINV]]


def test_verify_iso_small():
    res = verify_iso((2, 1), 1)
    assert res["verdict"] == "pass"
    assert res["matrices"][1]["restricted"] == [[Q]]
    res = verify_iso((2, 1), 2)
    assert res["matrices"][1]["restricted"] == [[-QINV]]
    for n in range(1, 6):
        for shape in partitions_of(n):
            for layer in build_filtration(shape):
                assert verify_iso(shape, layer.j)["verdict"] == "pass", (shape, layer.j)


def test_order_preserving():
    assert verify_order_preserving((3, 2, 1))["verdict"] == "pass"
    assert verify_order_preserving((4,))["verdict"] == "pass"
    for n in range(1, 8):
        for shape in partitions_of(n):
            assert verify_order_preserving(shape)["verdict"] == "pass"


def test_dimension_accounting():
    for n in range(1, 9):
        for shape in partitions_of(n):
            assert dimension_accounting(shape)["verdict"] == "pass"


def test_main_theorem_small():
    for n in range(1, 6):
        for shape in partitions_of(n):
            rep = verify_main_theorem(shape)
            assert rep.ok(), (shape, rep.to_json())


def test_report_json_shape():
    rep = verify_main_theorem((2, 1))
    obj = rep.to_json()
    assert obj["lambda"] == "2,1"
    assert obj["order_preserving"] == "pass"
    assert obj["layers"][0] == {"j": 1, "alpha": [2, 1], "mu": "2",
                                "submodule": "pass", "iso": "pass"}
    assert "seed" in obj


# -- adjoin lemma --------------------------------------------------------------------


def test_adjoin_lemma_exhaustive():
    for n in range(2, 6):
        assert verify_adjoin_lemma(n)["verdict"] == "pass"


def test_adjoin_lemma_sampled_deterministic():
    res = verify_adjoin_lemma(6, seed=5, samples=25)
    assert res["verdict"] == "pass"


def test_adjoin_lemma_specific():
    # s = t^mu with alpha = (2,1) in (2,1): the lifted word is the cycle
    from heckecell.symgroup import descending_cycle
    from heckecell.tableaux import adjoin, word_of
    s = superstandard((2,))
    lifted = adjoin(s, (2, 1))
    assert word_of(lifted) == (1, 2, 3)
    assert descending_cycle(3, 3) == (1, 2, 3)


# -- coset identity ------------------------------------------------------------------


def test_coset_identity_exhaustive_small():
    for n in range(2, 6):
        for shape in partitions_of(n):
            for alpha in removable_nodes(shape):
                res = verify_coset_identity(shape, alpha)
                assert res["verdict"] == "pass", (shape, alpha, res)


def test_conjugation_identity():
    for n in range(2, 7):
        assert verify_conjugation_identity(n)["verdict"] == "pass"


def test_phi_well_defined_small():
    for n in range(2, 5):
        for shape in partitions_of(n):
            for alpha in removable_nodes(shape):
                res = verify_phi_well_defined(shape, alpha)
                assert res["verdict"] == "pass", (shape, alpha)


def test_phi_factors_small():
    for n in range(2, 6):
        for shape in partitions_of(n):
            for k in range(1, len(removable_nodes(shape)) + 1):
                res = verify_phi_factors(shape, k)
                assert res["verdict"] == "pass", (shape, k)


# -- case identities -----------------------------------------------------------------


def test_case_identities_both_cases_occur():
    # (2,2) with alpha=(2,2): position (1,1) of mu=(2,1) has alpha outside
    # the strip (case 1); (2,1) with alpha=(2,1): position (1,1) of mu=(2)
    # has alpha inside (case 2)
    from heckecell.tableaux import garnir_strip
    assert (2, 2) not in garnir_strip((2, 2), (1, 1))
    assert verify_case_identities((2, 2), (2, 2))["verdict"] == "pass"
    assert (2, 1) in garnir_strip((2, 1), (1, 1))
    assert verify_case_identities((2, 1), (2, 1))["verdict"] == "pass"


def test_case_identities_small():
    for n in range(2, 6):
        for shape in partitions_of(n):
            assert case_identities_all(shape)["verdict"] == "pass", shape


# -- invariant span lemma ------------------------------------------------------------


def test_invariant_span_trivial_selector():
    for n in range(2, 5):
        for shape in partitions_of(n):
            res = check_invariant_span(shape, lambda t: True, range(1, n), "all")
            assert res["verdict"] == "pass", shape


def test_invariant_span_hypothesis_violation_skips():
    # selecting only the superstandard tableau violates closure under s_i
    shape = (2, 1)
    top = superstandard(shape)
    res = check_invariant_span(shape, lambda t: t == top, range(1, 3), "only-top")
    assert res["verdict"] == "skipped"


def test_corollary_row():
    for n in range(2, 6):
        for shape in partitions_of(n):
            for name, sel, gens in corollary_row_cases(shape):
                res = check_invariant_span(shape, sel, gens, name)
                assert res["verdict"] == "pass", (shape, name)


def test_corollary_shape_below():
    for n in range(2, 6):
        for shape in partitions_of(n):
            for name, sel, gens in corollary_shape_below_cases(shape):
                res = check_invariant_span(shape, sel, gens, name)
                assert res["verdict"] == "pass", (shape, name)
