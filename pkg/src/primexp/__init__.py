"""Exponents of primitive symmetric companion matrices.

Closed-form exponents, brute-force oracles, run-length counting and
exhaustive censuses for the four classes ``C_n^{alpha,eps}``.
"""

from .companion import (
    ALL_TAGS,
    MULTIPLICITY,
    ClassTag,
    LastRowSpec,
    SymCompanionGraph,
    build_graph,
    companion_matrix,
    enumerate_class,
    graph,
    graph_from_int,
    is_primitive,
    is_primitive_formula,
    symmetric_companion_matrix,
)
from .census import (
    CensusReport,
    ExponentCensus,
    closed_form_report,
    exponent_sets_report,
    run_census,
    table1,
    verify,
)
from .combinatorics import (
    f_count,
    n00_extremal,
    n00_lowest_bounds,
    n01_count,
    n10_extremal,
    n10_lowest,
    n11_count,
    s10_allowed_k,
    t_count,
)
from .errors import (
    CensusTooLargeError,
    FormulaInconsistencyError,
    ImprimitiveError,
    InvalidOrderError,
    InvalidParameterError,
    PrimexpError,
    StructuralError,
)
from .formula import (
    ExponentResult,
    exponent_formula,
    exponent_set_10_by_k,
    exponent_set_formula,
    run_length_clauses,
)
from .oracle import (
    BooleanMatrix,
    ParityDistances,
    exp_pair,
    exp_vertex,
    exponent_oracle_bfs,
    exponent_oracle_power,
    parity_distances,
    wielandt_bound,
)
from .structure import (
    CycleSystem,
    RunDecomposition,
    StructParams,
    VertexPartition,
    association_flag,
    cycle_system,
    debug_dump,
    decompose_runs,
    struct_params,
    vertex_partition,
)

__version__ = "0.1.0"
