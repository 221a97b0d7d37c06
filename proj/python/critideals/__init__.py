"""Critical ideals of trees: generators, Groebner checks and critical groups."""

from ._core import (
    ResourceLimitError,
    Tree,
    all_minor_ideal,
    arithmetical_c5_group,
    certify_gamma,
    critical_group,
    critical_ideal,
    critical_ideal_with_provenance,
    d_of_matching,
    expand_nonminimal,
    groebner_basis,
    is_groebner_basis,
    is_reduced_groebner_basis,
    minimal_matchings,
    normalize,
    nu2,
    reduces_to_zero,
    run_suite,
    smith_normal_form,
    suite_names,
)

__all__ = [name for name in dir() if not name.startswith("_")]
