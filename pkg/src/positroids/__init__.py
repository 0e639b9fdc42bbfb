"""Matroid and positroid computation on small ground sets, with an
exhaustive verification harness for the extremal size bound on positroids
without long uniform-line minors."""

from .core import Matroid, MatroidError, from_text, to_text
from .constructions import (
    CATALOG_IDS,
    all_parallel_connection_trees,
    catalog,
    extremal_family,
    parallel_connection,
    principal_extension,
    uniform,
    whirl_like,
    whirl_like_plus,
)
from .isomorphism import are_isomorphic, canonical_form, dedup_by_isomorphism
from .minors import (
    MinorWitness,
    find_catalog_minor,
    has_minor,
    has_uniform_line_minor,
    prop31_hypothesis,
    prop32_hypothesis,
    simple_rank3_matroids,
)
from .oriented import (
    Chirotope,
    chirotope_from_matrix,
    monochromatic_line_minor,
    oriented_contract,
    oriented_delete,
    ramsey_scan,
    underlying_matroid,
)
from .positroid import (
    DecoratedPermutation,
    GrassmannNecklace,
    bonin_check,
    enumerate_positroids,
    is_positroid,
    necklace_from_decorated_permutation,
    positroid_from_decorated_permutation,
    positroid_from_necklace,
    relevant_flats,
)

__version__ = "0.1.0"
