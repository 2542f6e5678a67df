"""Lyndon, inverse Lyndon and canonical inverse Lyndon factorizations of byte strings."""

from .core import (
    NATURAL,
    AlphabetError,
    Cmp,
    EmptyWordError,
    Factorization,
    Order,
    OrderedAlphabet,
    all_borders,
    cmp_lex,
    inverse_order,
    ll,
    shortest_border,
)
from .icfl import (
    CanonicalPair,
    InvariantError,
    PreconditionError,
    canonical_pair,
    has_border_property,
    icfl_linear,
    icfl_recursive,
    is_compact_factorization,
    is_grouping,
    is_inverse_lyndon_factorization,
    longest_il_suffix,
)
from .lyndon import (
    CompactRun,
    ContractError,
    cfl,
    cfl_in,
    chain_decompose,
    compact_factors,
    is_anti_lyndon,
    is_inverse_lyndon,
    is_lyndon,
)

__version__ = "0.1.0"
