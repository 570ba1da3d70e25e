"""Cartesian products of matrices, their identities, and graph distance invariants."""

# Import and re-export the public surface
from .config import (
    CartprodConfig,
    get_config,
    init_config,
    reset_config,
)
from .errors import (
    CapacityError,
    CartprodError,
    ConfigError,
    ConnectivityError,
    ConvergenceError,
    DimensionError,
    GraphError,
    ModeError,
    ParseError,
    ScalarOverflowError,
    SymmetryError,
    UnknownSuiteError,
)
from .scalar import (
    Mode,
    Scalar,
)
from .matrix import (
    Dims,
    Matrix,
)
from .products import (
    add,
    cartesian,
    cartesian_chain,
    cartesian_power,
    commutation_matrix,
    conj_transpose,
    entry_sum,
    hadamard,
    identity,
    kron,
    kron_chain,
    matmul,
    neg,
    ones,
    row_sums,
    scale,
    sub,
    trace,
    transpose,
    zeros,
)
from .identities import (
    FactorGrouping,
    ShiftWitness,
    StructureKind,
    WeightedFactor,
    all_ones_eigenvector_check,
    cartesian_factorize,
    cartesian_row_sums_closed_form,
    commutation_shift,
    constant_row_sum_check,
    diagonal_witness,
    distributivity_residuals,
    entry_sum_cartesian_closed_form,
    entry_sum_kron_closed_form,
    equality_shift,
    hadamard_identity_residual,
    product_identity_residual,
    product_identity_stated_residual,
    skew_shift_witness,
    structure_check,
    sum_cartesian_residual,
    trace_cartesian_closed_form,
    trace_cartesian_of_kron_groups,
    trace_cartesian_power_closed_form,
    trace_kron_closed_form,
    trace_kron_of_cartesian_groups,
    trace_kron_with_cartesian_closed_form,
    trace_pair_closed_form,
    trace_plus_minus_closed_form,
)
from .spectral import (
    InertiaTriple,
    SpectrumResult,
    closed_form_eigenvalues,
    inertia,
    jacobi_eigenvalues,
)
from .graph import (
    Graph,
    SpectralBoundCheck,
    complete_graph,
    cycle_graph,
    distance_cartesian_check,
    distance_matrix,
    distance_spectral_radius,
    graph_cartesian_product,
    inertia_product_check,
    is_transmission_regular,
    path_graph,
    spectral_radius_bound_check,
    spectral_radius_lower_bound,
    transmissions,
    vertex_identification,
    wiener_index,
    wiener_monotonicity_check,
    wiener_product_closed_form,
)
from .parsing import (
    format_edge_list,
    load_graph,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    parse_edge_list,
    parse_matrix_text,
)
from .registry import (
    SUITE_REGISTRY,
    VerifyReport,
    execute_trial,
    run_suite,
    run_suites,
)

__all__ = [
    # Config
    'CartprodConfig',
    'get_config',
    'init_config',
    'reset_config',
    # Errors
    'CapacityError',
    'CartprodError',
    'ConfigError',
    'ConnectivityError',
    'ConvergenceError',
    'DimensionError',
    'GraphError',
    'ModeError',
    'ParseError',
    'ScalarOverflowError',
    'SymmetryError',
    'UnknownSuiteError',
    # Scalars and matrices
    'Mode',
    'Scalar',
    'Dims',
    'Matrix',
    # Matrix core
    'add',
    'cartesian',
    'cartesian_chain',
    'cartesian_power',
    'commutation_matrix',
    'conj_transpose',
    'entry_sum',
    'hadamard',
    'identity',
    'kron',
    'kron_chain',
    'matmul',
    'neg',
    'ones',
    'row_sums',
    'scale',
    'sub',
    'trace',
    'transpose',
    'zeros',
    # Identities
    'FactorGrouping',
    'ShiftWitness',
    'StructureKind',
    'WeightedFactor',
    'all_ones_eigenvector_check',
    'cartesian_factorize',
    'cartesian_row_sums_closed_form',
    'commutation_shift',
    'constant_row_sum_check',
    'diagonal_witness',
    'distributivity_residuals',
    'entry_sum_cartesian_closed_form',
    'entry_sum_kron_closed_form',
    'equality_shift',
    'hadamard_identity_residual',
    'product_identity_residual',
    'product_identity_stated_residual',
    'skew_shift_witness',
    'structure_check',
    'sum_cartesian_residual',
    'trace_cartesian_closed_form',
    'trace_cartesian_of_kron_groups',
    'trace_cartesian_power_closed_form',
    'trace_kron_closed_form',
    'trace_kron_of_cartesian_groups',
    'trace_kron_with_cartesian_closed_form',
    'trace_pair_closed_form',
    'trace_plus_minus_closed_form',
    # Spectral
    'InertiaTriple',
    'SpectrumResult',
    'closed_form_eigenvalues',
    'inertia',
    'jacobi_eigenvalues',
    # Graphs
    'Graph',
    'SpectralBoundCheck',
    'complete_graph',
    'cycle_graph',
    'distance_cartesian_check',
    'distance_matrix',
    'distance_spectral_radius',
    'graph_cartesian_product',
    'inertia_product_check',
    'is_transmission_regular',
    'path_graph',
    'spectral_radius_bound_check',
    'spectral_radius_lower_bound',
    'transmissions',
    'vertex_identification',
    'wiener_index',
    'wiener_monotonicity_check',
    'wiener_product_closed_form',
    # Parsing
    'format_edge_list',
    'load_graph',
    'load_matrix',
    'matrix_from_json',
    'matrix_to_json',
    'parse_edge_list',
    'parse_matrix_text',
    # Verification
    'SUITE_REGISTRY',
    'VerifyReport',
    'execute_trial',
    'run_suite',
    'run_suites',
]
