"""Numerical radii of truncated adjoint shifts, KMS Toeplitz spectra, and
coefficient bounds for rational functions positive on the torus."""

from .blaschke import (
    BasisFunctionHandle,
    BlaschkeProduct,
    ModelOperator,
    evaluate_basis,
    evaluate_product,
    model_matrix,
    model_matrix_by_quadrature,
    single_zero_product,
)
from .coeffbounds import (
    CoefficientBound,
    FactorizationData,
    RationalTorusFunction,
    TrigPolynomial,
    coefficient_bound_check,
    egervary_bound,
    factorize,
    fejer_extremal,
    haagerup_check,
    random_positive_rational,
    rational_from_modulus_factors,
    taylor_coefficients,
)
from .errors import (
    BracketFailure,
    DomainError,
    InvalidZero,
    NoConvergence,
    NotCoprime,
    NotHermitian,
    PairingViolation,
    PoleHit,
    PoleOnTorus,
    RetryExhausted,
    TruncshiftError,
    ZeroOnTorus,
)
from .kms import (
    BoundsTriple,
    KmsParams,
    KmsSpectrum,
    bound_quantities,
    characteristic_value,
    first_root_bounds,
    kms_eigenvalues,
    kms_matrix,
    kms_roots,
    kms_upper_part,
    poisson_kernel,
    top_eigenvalue_bounds,
    upper_part_radius_closed_form,
)
from .linalg import (
    Polynomial,
    as_complex_matrix,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    matrix_power,
    polynomial_roots,
    random_unit_vector,
)
from .numrange import (
    NumericalRangeResult,
    numerical_radius,
    radius_lower_oracle,
    range_boundary,
    real_part,
    rotation_invariance_check,
)
from .verify import CheckResult, run_suites

__version__ = "0.1.0"
