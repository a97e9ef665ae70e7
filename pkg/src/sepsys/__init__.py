"""Extremal separating set systems: constructions, oracles, bounds, search."""

from .core import (
    CapacityError,
    Family,
    PERMUTATIONS_AND_SWITCHING,
    PERMUTATIONS_ONLY,
    SeparatorWitness,
    canonical_form,
    dual,
    family_from_words,
    is_proper,
    is_sperner,
    new_family,
    relabel,
    switch,
)
from .verify import (
    Certificate,
    check_separator_witness,
    find_separator,
    is_completely_separating,
    is_k_hypercompletely_separating,
    is_k_hyperseparating,
    is_nice,
    is_separating,
    pair_family_valid,
    recheck_certificate,
)
from .construct import (
    ReductionOutcome,
    antichain_lift,
    binary_separating,
    hyperseparating_minimal_2,
    k_hcs_minimal,
    nice_small_m,
    proof_step_reduction,
    spencer_completely_separating,
)
from .bounds import (
    BoundPair,
    binom,
    f2_exact,
    f_bounds,
    k_prime,
    min_m_hcs,
    separating_min,
    spencer_min,
)
from .search import (
    ExistenceResult,
    SearchReport,
    exists_nice_of_size,
    max_nice_size,
    max_pair_family,
    max_unique_subset_family,
    min_m_hyperseparating,
)

__all__ = [
    "CapacityError",
    "Family",
    "PERMUTATIONS_AND_SWITCHING",
    "PERMUTATIONS_ONLY",
    "SeparatorWitness",
    "Certificate",
    "BoundPair",
    "ReductionOutcome",
    "SearchReport",
    "ExistenceResult",
    "new_family",
    "family_from_words",
    "dual",
    "switch",
    "relabel",
    "canonical_form",
    "is_proper",
    "is_sperner",
    "is_separating",
    "is_completely_separating",
    "is_k_hypercompletely_separating",
    "is_k_hyperseparating",
    "is_nice",
    "find_separator",
    "pair_family_valid",
    "check_separator_witness",
    "recheck_certificate",
    "binary_separating",
    "spencer_completely_separating",
    "k_hcs_minimal",
    "nice_small_m",
    "hyperseparating_minimal_2",
    "antichain_lift",
    "proof_step_reduction",
    "binom",
    "k_prime",
    "min_m_hcs",
    "separating_min",
    "spencer_min",
    "f2_exact",
    "f_bounds",
    "max_nice_size",
    "exists_nice_of_size",
    "min_m_hyperseparating",
    "max_unique_subset_family",
    "max_pair_family",
]
