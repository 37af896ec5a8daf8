"""Combinatorial objects and procedures underlying the algebras."""

from .cycles import (
    Cycle,
    canonical_cycle_set,
    cstd,
    csupp,
    cycle_decomposition,
    cycle_type,
    cycle_words,
    cyclic_shuffle,
    iterated_matching_product,
    matching_product,
    matchings,
    ordered_cycle_type,
    permutation_from_cycles,
)
from .enumerate import count, enumerate_family, word_array
from .graphs import (
    forest_code,
    forest_representative,
    graph_code,
    graph_representative,
    is_nondecreasing,
    is_parking,
    parking_graph_canonical_code,
    parking_normalize,
)
from .partitions import (
    compositions,
    hook_dimension,
    mn_character,
    partitions,
    refinements,
    set_partitions,
    z,
)
from .words import (
    compose,
    connected_factorization,
    coxeter_length,
    cross_inversions,
    descent_composition,
    format_word,
    identity,
    inverse,
    inversions,
    is_connected,
    is_endofunction,
    is_permutation,
    parse_word,
    shifted_concat,
    shifted_shuffle,
    shuffle,
    standardize,
)
