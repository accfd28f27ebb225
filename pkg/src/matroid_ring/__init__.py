"""Matroids on a labeled ground set and their intersection ring.

Element sets are int bitmasks (element ``i`` is bit ``i - 1``); see
:mod:`matroid_ring.matroid`.
"""
from .cyclic import (
    AxiomReport,
    CyclicFlat,
    CyclicFlatList,
    cyclic_flats,
    cyclic_part,
    free_part,
    free_rank,
    from_cyclic_flats,
    is_nested,
    transversal,
    validate_cyclic_axioms,
)
from .errors import *  # noqa: F401,F403
from .generators import RandomMatroidSpec, all_matroids, random_matroid, random_matroids
from .invariants import (
    GInvariant,
    TuttePolynomial,
    chain_count,
    flat_count,
    g_invariant,
    g_invariant_of_combination,
    tutte,
)
from .io import parse_matroid, read_matroids, serialize_matroid
from .matroid import Matroid, elements_of, from_bases, mask_of, uniform
from .nested import (
    SetChain,
    chain_presentation,
    chain_product,
    corank_one,
    count_nested,
    enumerate_nested,
    eulerian,
    nested_from_cyclic_chain,
    transversal_presentation,
)
from .poset import Poset
from .ring import (
    CyclicChainLattice,
    RingElement,
    add,
    boundary_contraction,
    boundary_deletion,
    combination,
    cyclic_chain_lattice,
    decompose_to_nested,
    indicator,
    intersect,
    pairing_matrix,
    product,
    product_elements,
    product_flats_check,
    scale,
    to_nested_coordinates,
    union,
    vanishes_corank_one,
    vanishes_nested,
)
from .verify import run_verify

__version__ = "0.1.0"
