"""Connection Laplacians of finite simplicial complexes."""

from ._core import (
    Complex,
    ConnspecError,
    __version__,
    betti_numbers,
    characteristic_polynomial,
    connection_matrix,
    eigenvalues,
    euler_characteristic,
    green_function,
    inertia,
    is_isomorphic,
    is_isospectral,
    log_energy,
    product_connection_matrix,
    track_branches,
    verify_reference_pairs,
    wu_characteristic,
)

__all__ = [
    "Complex",
    "ConnspecError",
    "__version__",
    "betti_numbers",
    "characteristic_polynomial",
    "connection_matrix",
    "eigenvalues",
    "euler_characteristic",
    "green_function",
    "inertia",
    "is_isomorphic",
    "is_isospectral",
    "log_energy",
    "product_connection_matrix",
    "track_branches",
    "verify_reference_pairs",
    "wu_characteristic",
]
