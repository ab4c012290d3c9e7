"""Orienteering on aisle-graphs with unit edge costs."""
from ._kernels import backend
from .full_row import (
    FullRowPlan,
    PlanInfeasibleError,
    RowProfile,
    build_full_row_tour,
    permitted_rows,
    row_profile,
    solve_ofr,
    solve_ofr_i,
)
from .graph import (
    HOME,
    AisleGraph,
    InvalidVertexError,
    SolveResult,
    Tour,
    TourAnnotation,
    ValidationReport,
    Variant,
    annotate_tour,
    neighbors,
    tour_cost,
    tour_reward,
    validate_tour,
)
from .heuristics import (
    DetourPlan,
    residual_detours,
    solve_gfr,
    solve_gpr,
    solve_h1,
    solve_h2,
    solve_h3,
    solve_hgc,
)
from .single_column import DpTables, osc_reward_profile, osc_traceback, prefix_table, solve_osc
from .solvers import SOLVERS, solve

__version__ = "0.1.0"
