"""Statevector simulation of multi-match quantum search."""

from qsearch._core import (
    CapacityError,
    InvariantViolation,
    OracleSpec,
    ParseError,
    PolicyError,
    PreparedSearchState,
    StateVector,
    amplitude_ladder,
    average_p_classical,
    average_p_grover,
    average_p_once,
    b0_closed,
    coverage_fraction,
    dispatch_known,
    exact_iterations,
    grover,
    grover_iteration_count,
    grover_sum_identity,
    hybrid_bench,
    hybrid_search,
    iterations_lower_bound,
    min_p_over_upper_range,
    p_grover,
    p_grover_ratio,
    p_success_iterated,
    p_success_iterated_ratio,
    p_success_once,
    p_success_once_ratio,
    parse_marked_spec,
    predict,
    random_oracle,
    simulate,
    sweep,
    table1,
    younes_iterated,
    younes_once,
)

__version__ = "0.1.0"
