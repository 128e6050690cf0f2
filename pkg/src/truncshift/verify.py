"""Named verification suites behind the ``verify`` CLI subcommand.

Each check re-states one module invariant as an executable pass/fail test
with a reported worst deviation. Randomized checks derive their generator
from ``(seed, check index)`` so runs are reproducible and independent of
execution order; ``trials`` scales the randomized instance counts while
grid-based checks keep their fixed grids.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import coeffbounds
from .blaschke import (
    BasisFunctionHandle,
    BlaschkeProduct,
    evaluate_basis,
    model_matrix,
    model_matrix_by_quadrature,
    single_zero_product,
)
from .kms import (
    KmsParams,
    bound_quantities,
    characteristic_value,
    kms_eigenvalues,
    kms_matrix,
    kms_upper_part,
    poisson_kernel,
)
from .linalg import hermitian_eigenvalues, matrix_power
from .numrange import (
    numerical_radius,
    radius_lower_oracle,
    real_part,
)

__all__ = ["CheckResult", "SUITE_NAMES", "run_suites"]

_ALPHA_GRID = np.arange(1, 20) * 0.05  # 0.05 .. 0.95
_ALPHA_GRID_COARSE = np.arange(0, 10) * 0.1  # 0.0 .. 0.9


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    detail: str = ""


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def _random_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def _random_product(rng: np.random.Generator, max_degree: int = 10) -> BlaschkeProduct:
    degree = int(rng.integers(1, max_degree + 1))
    moduli = 0.9 * rng.random(degree)
    angles = 2.0 * np.pi * rng.random(degree)
    return BlaschkeProduct(moduli * np.exp(1j * angles))


def _shift_adjoint(n: int) -> np.ndarray:
    return model_matrix(single_zero_product(0.0, n)).matrix


# ---------------------------------------------------------------------------
# kms suite


def _check_root_interlacing(seed: int, trials: int) -> CheckResult:
    worst = np.inf
    for n in range(1, 51):
        grid = np.arange(1, n + 1) * np.pi / (n + 1)
        lower = np.concatenate(([0.0], grid[:-1]))
        for alpha in _ALPHA_GRID:
            roots = kms_eigenvalues(KmsParams(n, alpha)).angles
            worst = min(worst, float(np.min(grid - roots)), float(np.min(roots - lower)))
        exact = kms_eigenvalues(KmsParams(n, 0.0)).angles
        if np.any(exact != grid):
            worst = -1.0
    return CheckResult(
        name="kms.root_interlacing",
        passed=worst > 0.0,
        max_deviation=max(0.0, -worst),
        detail=f"smallest strict margin {worst:.3e} for alpha > 0",
    )


def _check_spectrum_equivalence(seed: int, trials: int) -> CheckResult:
    worst = 0.0
    for n in range(1, 31):
        for alpha in _ALPHA_GRID_COARSE:
            params = KmsParams(n, alpha)
            from_roots = kms_eigenvalues(params).eigenvalues
            from_matrix = hermitian_eigenvalues(kms_matrix(params))
            worst = max(worst, float(np.max(np.abs(from_roots - from_matrix))))
    return CheckResult(
        name="kms.spectrum_equivalence",
        passed=worst <= 1e-9,
        max_deviation=worst,
        detail="trig-root spectrum vs Hermitian eigensolver, n <= 30",
    )


def _check_trig_identity(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 3)
    worst = 0.0
    for _ in range(1000):
        n = int(rng.integers(1, 41))
        alpha = 0.99 * rng.random()
        t = 0.05 + (np.pi - 0.1) * rng.random()
        raw = (
            np.sin((n + 1) * t)
            - 2.0 * alpha * np.sin(n * t)
            + alpha * alpha * np.sin((n - 1) * t)
        ) / np.sin(t)
        factored = characteristic_value(KmsParams(n, alpha), t)
        scale = 4.0 * (n + 1) / np.sin(t)
        worst = max(worst, abs(raw - factored) / scale)
    return CheckResult(
        name="kms.trig_identity",
        passed=worst <= 1e-10,
        max_deviation=worst,
        detail="three-term quotient vs factored form at 1000 random points",
    )


def _check_upper_part_radius(seed: int, trials: int) -> CheckResult:
    worst = 0.0
    alphas = np.concatenate(([0.0], _ALPHA_GRID))
    for n in range(2, 16):
        for alpha in alphas:
            params = KmsParams(n, alpha)
            swept = numerical_radius(kms_upper_part(params)).radius
            closed = bound_quantities(params).s
            worst = max(worst, abs(swept - closed))
    return CheckResult(
        name="kms.upper_part_radius",
        passed=worst <= 1e-8,
        max_deviation=worst,
        detail="theta-sweep radius vs extreme-root expression, n <= 15",
    )


def _check_centered_trace(seed: int, trials: int) -> CheckResult:
    worst = 0.0
    for n in range(1, 31):
        for alpha in _ALPHA_GRID:
            spectrum = kms_eigenvalues(KmsParams(n, alpha))
            worst = max(worst, abs(float(np.sum(spectrum.upper_part_eigenvalues))))
    return CheckResult(
        name="kms.centered_trace",
        passed=worst <= 1e-10,
        max_deviation=worst,
        detail="shifted eigenvalues sum to the zero trace of the upper part",
    )


def _check_symbol_monotone(seed: int, trials: int) -> CheckResult:
    t = np.linspace(0.0, np.pi, 1000)
    worst = -np.inf
    for alpha in _ALPHA_GRID_COARSE[1:]:
        diffs = np.diff(poisson_kernel(alpha, t))
        worst = max(worst, float(np.max(diffs)))
    return CheckResult(
        name="kms.symbol_monotone",
        passed=worst < 0.0,
        max_deviation=max(0.0, worst),
        detail="kernel strictly decreasing on a 1000-point grid of [0, pi]",
    )


# ---------------------------------------------------------------------------
# blaschke suite


def _check_basis_orthonormality(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 11)
    worst = 0.0
    points = np.exp(2j * np.pi * np.arange(4096) / 4096)
    for _ in range(trials):
        product = _random_product(rng)
        columns = [
            evaluate_basis(BasisFunctionHandle(product, k), points)
            for k in range(1, product.degree + 1)
        ]
        stacked = np.column_stack(columns)
        gram = stacked.conj().T @ stacked / points.size
        worst = max(
            worst, float(np.max(np.abs(gram - np.eye(product.degree))))
        )
    return CheckResult(
        name="blaschke.basis_orthonormality",
        passed=worst <= 1e-8,
        max_deviation=worst,
        detail="4096-point quadrature Gram matrix vs identity",
    )


def _check_table_vs_quadrature(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 12)
    worst = 0.0
    for _ in range(trials):
        product = _random_product(rng)
        table = model_matrix(product).matrix
        quad = model_matrix_by_quadrature(product)
        worst = max(worst, float(np.max(np.abs(table - quad))))
    return CheckResult(
        name="blaschke.table_vs_quadrature",
        passed=worst <= 1e-8,
        max_deviation=worst,
        detail="entry table vs 4096-point circle quadrature",
    )


def _check_minimal_function(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 13)
    worst = 0.0
    for _ in range(trials):
        product = _random_product(rng)
        matrix = model_matrix(product).matrix
        eye = np.eye(product.degree)
        image = eye.astype(np.complex128)
        for zero in product.zeros:
            factor = np.linalg.inv(eye - np.conj(zero) * matrix) @ (matrix - zero * eye)
            image = image @ factor
        worst = max(worst, float(np.linalg.norm(image, 2)))
    return CheckResult(
        name="blaschke.minimal_function",
        passed=worst <= 1e-8,
        max_deviation=worst,
        detail="the product evaluated on its own model matrix vanishes",
    )


def _check_triangular_spectrum(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 14)
    worst = 0.0
    for _ in range(trials):
        product = _random_product(rng)
        matrix = model_matrix(product).matrix
        worst = max(
            worst,
            float(np.max(np.abs(np.diag(matrix) - np.conj(product.zeros)))),
            float(np.max(np.abs(np.tril(matrix, -1)))),
        )
    return CheckResult(
        name="blaschke.triangular_spectrum",
        passed=worst <= 1e-12,
        max_deviation=worst,
        detail="diagonal equals conjugated zeros, strict lower part vanishes",
    )


# ---------------------------------------------------------------------------
# numrange suite


def _check_support_consistency(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 21)
    worst = 0.0
    for index in range(2 * trials):
        n = int(rng.integers(1, 9))
        matrix = _random_matrix(rng, n)
        radius = numerical_radius(matrix).radius
        oracle = radius_lower_oracle(matrix, samples=32, ascent_steps=30, seed=index)
        norm = float(np.linalg.norm(matrix, 2))
        mean_diag = abs(np.trace(matrix)) / n
        worst = max(
            worst,
            oracle - radius - 1e-9,
            radius - norm - 1e-10,
            mean_diag - radius - 1e-10,
        )
    return CheckResult(
        name="numrange.support_consistency",
        passed=worst <= 0.0,
        max_deviation=max(0.0, worst),
        detail="oracle <= radius <= norm and radius >= |trace|/n",
    )


def _check_real_part_bound(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 22)
    worst = 0.0
    for _ in range(trials):
        matrix = _random_matrix(rng, int(rng.integers(1, 9)))
        full = numerical_radius(matrix).radius
        hermitian = numerical_radius(real_part(matrix)).radius
        worst = max(worst, hermitian - full)
    return CheckResult(
        name="numrange.real_part_bound",
        passed=worst <= 1e-10,
        max_deviation=max(0.0, worst),
        detail="radius of the Hermitian part never exceeds the full radius",
    )


def _check_unitary_invariance(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 23)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 9))
        matrix = _random_matrix(rng, n)
        unitary, _ = np.linalg.qr(_random_matrix(rng, n))
        rotated = unitary.conj().T @ matrix @ unitary
        worst = max(
            worst,
            abs(numerical_radius(matrix).radius - numerical_radius(rotated).radius),
        )
    return CheckResult(
        name="numrange.unitary_invariance",
        passed=worst <= 1e-9,
        max_deviation=worst,
        detail="radius unchanged under random unitary conjugation",
    )


def _check_hermitian_radius(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 24)
    worst = 0.0
    for _ in range(trials):
        matrix = real_part(_random_matrix(rng, int(rng.integers(1, 9))))
        radius = numerical_radius(matrix).radius
        extreme = float(np.max(np.abs(hermitian_eigenvalues(matrix))))
        worst = max(worst, abs(radius - extreme))
    return CheckResult(
        name="numrange.hermitian_radius",
        passed=worst <= 1e-10,
        max_deviation=worst,
        detail="Hermitian radius equals the extreme eigenvalue magnitude",
    )


def _check_power_identity(seed: int, trials: int) -> CheckResult:
    worst = 0.0
    for n in range(2, 13):
        shift = _shift_adjoint(n)
        for k in range(1, n):
            swept = numerical_radius(matrix_power(shift, k)).radius
            closed = np.cos(np.pi / ((n - 1) // k + 2))
            worst = max(worst, abs(swept - closed))
    return CheckResult(
        name="numrange.power_identity",
        passed=worst <= 1e-8,
        max_deviation=worst,
        detail="shift-power radius equals the cosine closed form, n <= 12",
    )


# ---------------------------------------------------------------------------
# coeff suite


def _check_rational_bound(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 31)
    worst = -np.inf
    for index in range(trials):
        deg_p = int(rng.integers(0, 5))
        deg_q = int(rng.integers(0, 5))
        instance = coeffbounds.random_positive_rational(
            deg_p, deg_q, seed=int(rng.integers(0, 2 ** 31))
        )
        coefficients = coeffbounds.taylor_coefficients(instance, 6)
        data = coeffbounds.factorize(instance)
        base = model_matrix(data.phi_var).matrix
        c0 = float(coefficients[0].real)
        for k in range(1, 7):
            rhs = c0 * numerical_radius(matrix_power(base, k)).radius
            worst = max(worst, float(np.abs(coefficients[k])) - rhs)
    return CheckResult(
        name="coeff.rational_bound",
        passed=worst <= 1e-9,
        max_deviation=max(0.0, worst),
        detail=f"|c_k| - c_0 * radius over {trials} instances, k <= 6",
    )


def _check_egervary(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 32)
    worst = -np.inf
    for n in range(2, 11):
        for _ in range(trials):
            profile = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            coefficients = np.correlate(profile, profile, mode="full")[n - 1 :]
            c0 = float(coefficients[0].real)
            for k in range(1, n):
                bound = coeffbounds.egervary_bound(n, k)
                worst = max(worst, float(np.abs(coefficients[k])) - c0 * bound)
    return CheckResult(
        name="coeff.egervary",
        passed=worst <= 1e-9,
        max_deviation=max(0.0, worst),
        detail=f"coefficient bounds on {trials} random squared moduli per n in 2..10",
    )


def _check_power_bound_identity(seed: int, trials: int) -> CheckResult:
    worst = 0.0
    for n in range(2, 11):
        shift = _shift_adjoint(n)
        for k in range(1, n):
            swept = numerical_radius(matrix_power(shift, k)).radius
            worst = max(worst, abs(swept - coeffbounds.egervary_bound(n, k)))
    return CheckResult(
        name="coeff.power_bound_identity",
        passed=worst <= 1e-8,
        max_deviation=worst,
        detail="cosine bound equals the swept shift-power radius",
    )


def _check_coefficient_symmetry(seed: int, trials: int) -> CheckResult:
    rng = _rng(seed, 33)
    worst = 0.0
    size = 4096
    points = np.exp(2j * np.pi * np.arange(size) / size)
    for _ in range(max(3, trials // 10)):
        instance = coeffbounds.random_positive_rational(
            int(rng.integers(0, 5)), int(rng.integers(0, 5)),
            seed=int(rng.integers(0, 2 ** 31)),
        )
        spectrum = np.fft.fft(np.atleast_1d(instance(points))) / size
        for k in range(1, 7):
            worst = max(worst, abs(spectrum[size - k] - np.conj(spectrum[k])))
    return CheckResult(
        name="coeff.coefficient_symmetry",
        passed=worst <= 1e-10,
        max_deviation=worst,
        detail="negative-index DFT bins conjugate the positive ones",
    )


def _check_nilpotent_bound(seed: int, trials: int) -> CheckResult:
    worst_ratio = 0.0
    worst_equality = 0.0
    per_dim = max(1, trials // 7)
    for n in range(2, 9):
        worst_ratio = max(
            worst_ratio, coeffbounds.haagerup_check(n, per_dim, seed=seed + n)
        )
        shift = 3.0 * _shift_adjoint(n)
        attained = numerical_radius(shift).radius / (3.0 * np.cos(np.pi / (n + 1)))
        worst_equality = max(worst_equality, abs(attained - 1.0))
    deviation = max(worst_ratio - 1.0, worst_equality)
    return CheckResult(
        name="coeff.nilpotent_bound",
        passed=worst_ratio <= 1.0 + 1e-9 and worst_equality <= 1e-9,
        max_deviation=max(0.0, deviation),
        detail="random nilpotent contractions stay below the bound, the shift attains it",
    )


SUITES = {
    "kms": [
        _check_root_interlacing,
        _check_spectrum_equivalence,
        _check_trig_identity,
        _check_upper_part_radius,
        _check_centered_trace,
        _check_symbol_monotone,
    ],
    "blaschke": [
        _check_basis_orthonormality,
        _check_table_vs_quadrature,
        _check_minimal_function,
        _check_triangular_spectrum,
    ],
    "numrange": [
        _check_support_consistency,
        _check_real_part_bound,
        _check_unitary_invariance,
        _check_hermitian_radius,
        _check_power_identity,
    ],
    "coeff": [
        _check_rational_bound,
        _check_egervary,
        _check_power_bound_identity,
        _check_coefficient_symmetry,
        _check_nilpotent_bound,
    ],
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suites(
    names, seed: int = 42, trials: int = 100, workers: int = 1
) -> list[CheckResult]:
    """Run the requested suites and return one result per named check."""
    checks = []
    for name in names:
        if name == "all":
            for suite in SUITES.values():
                checks.extend(suite)
        elif name in SUITES:
            checks.extend(SUITES[name])
        else:
            raise ValueError(f"unknown suite {name!r}")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda check: check(seed, trials), checks))
    return [check(seed, trials) for check in checks]
