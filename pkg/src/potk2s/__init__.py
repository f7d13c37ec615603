"""Degree-sequence toolkit for potentially K_{2,s}-graphic decisions.

The package decides, for integer degree sequences, graphicality and the
potentially K_{2,4} / K_{2,5}-graphic properties (does some realization
contain the complete bipartite graph?), verifies the characterizations
against a brute-force realization oracle at small lengths, and reproduces
the extremal sum sigma(K_{2,5}, n) supporting arguments.
"""

from .decider import (
    CATALOG,
    K24_EXCEPTIONS,
    K25_EXCEPTIONS,
    ConditionThreeMatch,
    PatternSequence,
    Verdict,
    condition3_decompositions,
    is_potentially_k24,
    is_potentially_k25,
    match_parametric,
    necessary_residual_check,
)
from .extremal import (
    FormulaReport,
    SweepReport,
    WitnessReport,
    enumerate_graphic_sequences,
    run_sweep,
    sigma_extremal_k25,
    sigma_extremal_value,
    sigma_formula_consistency,
    witness_check,
)
from .oracle import (
    DEFAULT_BUDGET,
    OracleResult,
    SimpleGraph,
    contains_k1s,
    contains_k2s,
    enumerate_realizations,
    is_potentially_subgraph,
    realization_exists,
)
from .reduction import k2s_sufficient, rho, rho_prime
from .seqcore import (
    DegreeSequence,
    InvalidInput,
    NotApplicable,
    OutOfScope,
    as_sequence,
    format_sequence,
    is_graphic,
    is_graphic_eg,
    is_graphic_terms_le2,
    is_graphic_terms_le3,
    is_graphic_terms_le4,
    layoff,
    normalize,
    parse_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG", "K24_EXCEPTIONS", "K25_EXCEPTIONS", "ConditionThreeMatch",
    "PatternSequence", "Verdict", "condition3_decompositions",
    "is_potentially_k24", "is_potentially_k25", "match_parametric",
    "necessary_residual_check", "FormulaReport", "SweepReport",
    "WitnessReport", "enumerate_graphic_sequences", "run_sweep",
    "sigma_extremal_k25", "sigma_extremal_value", "sigma_formula_consistency",
    "witness_check", "DEFAULT_BUDGET", "OracleResult", "SimpleGraph",
    "contains_k1s", "contains_k2s", "enumerate_realizations",
    "is_potentially_subgraph", "realization_exists", "k2s_sufficient",
    "rho", "rho_prime", "DegreeSequence", "InvalidInput", "NotApplicable",
    "OutOfScope", "as_sequence", "format_sequence", "is_graphic",
    "is_graphic_eg", "is_graphic_terms_le2", "is_graphic_terms_le3",
    "is_graphic_terms_le4", "layoff", "normalize", "parse_sequence",
]
