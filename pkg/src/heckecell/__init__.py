"""Exact computations in the Hecke algebra of the symmetric group.

Everything here is computed symbolically over Z[q, q^-1]: the T_w basis and
its relations, the Murphy cellular basis with its transition matrix, cell
modules with their generator action and bilinear form, Garnir elements, and
the machinery that certifies the cell filtration of restricted cell modules.
"""

from .exactpoly import LaurentPoly, NotLaurentError, RationalFunction, rf_convert
from .hecke import HeckeElement, embed, gen_inverse, mul, star, t_interval, t_perm
from .murphy import (
    CellElement,
    IntegralityFailureError,
    MurphyExpansion,
    MurphyIndex,
    cell_action,
    cell_unit,
    d_alpha,
    expand,
    gram_pairing,
    h_garnir,
    ideal_membership,
    m_poly,
    m_st,
    murphy_basis,
    span_membership,
)
from .filtration import (
    FiltrationLayer,
    RestrictionReport,
    build_filtration,
    check_invariant_span,
    check_submodule,
    verify_adjoin_lemma,
    verify_case_identities,
    verify_iso,
    verify_main_theorem,
    verify_order_preserving,
)

__version__ = "0.1.0"
