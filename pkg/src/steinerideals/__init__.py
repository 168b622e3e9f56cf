"""Exact computations on Steiner systems and their squarefree ideals.

The package validates designs, builds cover and complement prime
decompositions, computes symbolic powers and initial degrees exactly,
decides containments I^(m) <= M^slack * I^r with certified witnesses,
and scans the standard containment conjectures on desk-scale instances.
"""

from .containment import (
    Conjecture,
    ConjectureInstance,
    ConjectureVerdict,
    ContainmentEngine,
    ContainmentQuery,
    ContainmentReport,
    ResurgenceRegion,
    ResurgenceScan,
    check_containment,
    check_els,
    chudnovsky_check,
    demailly_check,
    harbourne_huneke_scan,
    iter_resurgence_cells,
    resurgence_region,
    resurgence_search,
    stable_harbourne_scan,
)
from .designs import (
    Hypergraph,
    Partition,
    SteinerSystem,
    builtin_fano,
    builtin_sqs8,
    chromatic_number,
    complement_blocks,
    is_colourable,
    is_coverable,
    load_design,
    load_hypergraph,
    min_edge_size,
    validate_steiner,
)
from .errors import (
    BlockSizeMismatch,
    ComplementEmpty,
    CountMismatch,
    DegenerateRegion,
    DesignError,
    FormatError,
    InternalInconsistency,
    MixedAmbient,
    ResourceLimit,
    SteinerIdealsError,
    TSubsetMultiplyCovered,
    TSubsetUncovered,
    Uncolourable,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    dump_monomials,
    intersect,
    load_monomials,
    member_of_power,
    minimalize,
    multiply,
    power,
)
from .symbolic import (
    AlphaTable,
    PrimeDecomposition,
    alpha_table,
    complement_alpha_formula,
    complement_ideal,
    cover_ideal,
    initial_degree,
    member_of_symbolic,
    min_degree_generators,
    symbolic_power,
    waldschmidt_exact,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaTable",
    "BlockSizeMismatch",
    "ComplementEmpty",
    "Conjecture",
    "ConjectureInstance",
    "ConjectureVerdict",
    "ContainmentEngine",
    "ContainmentQuery",
    "ContainmentReport",
    "CountMismatch",
    "DegenerateRegion",
    "DesignError",
    "FormatError",
    "Hypergraph",
    "InternalInconsistency",
    "MixedAmbient",
    "Monomial",
    "MonomialIdeal",
    "Partition",
    "PrimeDecomposition",
    "ResourceLimit",
    "ResurgenceRegion",
    "ResurgenceScan",
    "SteinerIdealsError",
    "SteinerSystem",
    "TSubsetMultiplyCovered",
    "TSubsetUncovered",
    "Uncolourable",
    "alpha_table",
    "builtin_fano",
    "builtin_sqs8",
    "check_containment",
    "check_els",
    "chromatic_number",
    "chudnovsky_check",
    "complement_alpha_formula",
    "complement_blocks",
    "complement_ideal",
    "cover_ideal",
    "demailly_check",
    "dump_monomials",
    "harbourne_huneke_scan",
    "initial_degree",
    "intersect",
    "is_colourable",
    "is_coverable",
    "iter_resurgence_cells",
    "load_design",
    "load_hypergraph",
    "load_monomials",
    "member_of_power",
    "member_of_symbolic",
    "min_degree_generators",
    "min_edge_size",
    "minimalize",
    "multiply",
    "power",
    "resurgence_region",
    "resurgence_search",
    "stable_harbourne_scan",
    "symbolic_power",
    "validate_steiner",
    "waldschmidt_exact",
]
