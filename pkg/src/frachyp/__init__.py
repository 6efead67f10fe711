"""Fractional (a:b)-colorings of uniform hypergraphs: solvers, exact oracles, constructions, bounds."""

from .alon import AlonParams, RepairLedger, a_prime, expected_recolorings_bound, precondition_alon, solve_alon
from .bounds import BoundReport, bound_report, cherk_kozik_ab_bound, m_bounds_proper, prop2_bound
from .coloring import (ColorSet, FractionalColoring, PanchromaticColoring, from_panchromatic, is_panchromatic,
                       is_proper, monochromatic_pairs, parse_coloring, random_fractional_coloring,
                       serialize_coloring, to_panchromatic)
from .construction import (Certificate, ConstructionParams, bad_prob_inclusion_exclusion, bad_prob_lower_p,
                           edge_count_m, optimal_v, s_sums, sample_and_certify, telescoping_check,
                           thm2_edge_total)
from .errors import (AttemptsExhausted, BudgetExceeded, DivisibilityError, FracHypError, Infeasible,
                     InvalidParams, NotAMinusOne, NotFound, ParseError, RegimeWarning)
from .exact import (brute_force_colorable, chi_f_dual, chi_f_primal, chi_f_via_ab_search, chromatic_number,
                    edge_packing_lp, enumerate_independent_sets)
from .experiment import ExperimentConfig, ExperimentReport, run_experiment, wilson_interval
from .hypergraph import (Hypergraph, gen_complete_uniform, gen_cycle, gen_random_uniform, new_hypergraph,
                         parse_hypergraph, serialize_hypergraph)
from .theorem1 import (SolveOutcome, SolverParams, bad_event_bounds, classify_failure, edge_budget_thm1,
                       next_available_color, solve_theorem1, threshold_p)

__version__ = "0.1.0"
