"""Name -> solver registry used by the CLI and the benchmark."""
from .full_row import solve_ofr, solve_ofr_i
from .graph import AisleGraph, SolveResult
from .heuristics import solve_gfr, solve_gpr, solve_h1, solve_h2, solve_h3, solve_hgc
from .single_column import solve_osc


def _osc(g, budget):
    return solve_osc(g, budget)[0]


SOLVERS = {
    "ofr": solve_ofr,
    "ofr_i": solve_ofr_i,
    "osc": _osc,
    "h1": solve_h1,
    "h2": solve_h2,
    "h3": solve_h3,
    "hgc": solve_hgc,
    "gfr": solve_gfr,
    "gpr": solve_gpr,
}


def solve(name: str, g: AisleGraph, budget: int) -> SolveResult:
    try:
        fn = SOLVERS[name]
    except KeyError:
        raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(SOLVERS)}") from None
    return fn(g, int(budget))
