"""shallowhit: shallow hitting edge sets in uniform hypergraphs.

A library and CLI for edge subsets that cover every vertex at least once
and at most t times: explicit constructions around the existence
thresholds, exact and randomized solvers, and evaluators for every
threshold formula, all at desk scale.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .augment import codegree_augment_uniform, codegree_augment_partite
from .bounds import (
    CodegreeThresholds,
    ThresholdResult,
    bipartite_sufficient,
    codegree_thresholds,
    girth4_constant,
    lambert_w,
    min_t_general,
    min_t_girth4,
    partition_k,
    rrs_matching_threshold,
    shallow_size_guarantee,
    t_formula_general,
    t_formula_girth4,
)
from .constructions import (
    bipartite_tight_gadget,
    codegree_gadget_partite,
    codegree_gadget_uniform,
    figure1_witness,
    projective_full,
    projective_truncated,
    random_girth4_regular,
    random_regular,
    random_regular_partite,
)
from .designs import (
    Design,
    affine_plane,
    corollary_witness_n,
    design_dual_hypergraph,
    divisibility_ok,
    load_design,
    replication,
    save_design,
    verify_design,
)
from .errors import FormatError, GaveUpError, StuckError
from .flow import HallReport, bipartite_factor, hall_condition_check
from .hypergraph import (
    EdgeSelection,
    Hypergraph,
    SelectionReport,
    StructureStats,
    dual,
    girth_less_than_4,
    isomorphic,
    load_hypergraph,
    neighborhood,
    save_hypergraph,
    selection_to_2coloring,
    short_cycle,
    stats,
    verify_selection,
)
from .solvers import (
    MaxShallowOutcome,
    MonteCarloResult,
    PartitionResult,
    SolveOutcome,
    SolveStatus,
    exact_max_shallow,
    exact_shallow_hitting,
    lll_hitting,
    lll_hitting_girth4,
    monte_carlo_experiment,
    partition_shallow,
)

__version__ = "0.1.0"
