"""Exact tools for balance-scale proofs that there are f fake coins and not d,
without revealing which coins are fake."""
from .analytic import (
    balanced_count,
    indiscreet_exact_count,
    lincomb_count,
    pyber_bound,
    single_weighing_cap,
    strategy6_X,
    strategy6_X_limit,
    theorem1_bounds,
    theorem2_lower_bound,
    three_family_count,
    unbalanced_count,
)
from .combinatorics import binomial, multisection_sum, multisection_trig
from .model import (
    ObservationalClassing,
    Params,
    Pile,
    SchemaError,
    Strategy,
    StrategyError,
    Weighing,
    expected_syndrome,
    refine,
    validate,
)
from .sensitivity import (
    avg_sensitivity_enum,
    avg_sensitivity_exact,
    avg_sensitivity_trig,
    measurement_bound_order,
    mod_m_star,
    sensitivity_at,
)
from .strategies import (
    GeneratorError,
    LinCombConfig,
    gen_divisibility,
    gen_indiscreet_piles,
    gen_linear_combination,
    gen_shapovalov,
    gen_three_family,
    gen_three_family_augmented,
    search_lincomb,
    solve_solution_vectors,
)
from .verifier import (
    AdmissibleReport,
    admissible_count,
    best_order,
    oracle_admissible_count,
    subset_table,
    verify,
)

__version__ = "0.1.0"
