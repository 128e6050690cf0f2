"""Finite Blaschke products and the model matrix of the compressed shift.

A finite Blaschke product with zeros ``a_1, ..., a_n`` in the open unit
disc carries an n-dimensional model space with the orthonormal rational
basis

    e_k(z) = sqrt(1 - |a_k|^2) / (1 - conj(a_k) z)
             * prod_{j<k} (z - a_j) / (1 - conj(a_j) z).

The adjoint shift ``f -> (f(z) - f(0)) / z`` leaves that space invariant,
and its matrix in this basis is upper triangular with a short closed-form
entry table. ``model_matrix`` builds the table; ``model_matrix_by_quadrature``
rebuilds the same matrix from inner products evaluated by uniform circle
quadrature, which serves as an independent oracle for the table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidZero, PoleHit

__all__ = [
    "BasisFunctionHandle",
    "BlaschkeProduct",
    "ModelOperator",
    "evaluate_basis",
    "evaluate_product",
    "model_matrix",
    "model_matrix_by_quadrature",
    "single_zero_product",
]

#: Zeros must keep this margin to the unit circle; the basis denominators
#: 1/(1 - conj(a) z) lose all accuracy as |a| -> 1.
DISC_GUARD = 1e-10

_POLE_GUARD = 1e-12


@dataclass(frozen=True)
class BlaschkeProduct:
    """Ordered zeros in the open unit disc; repetitions encode multiplicity."""

    zeros: np.ndarray

    def __post_init__(self):
        z = np.atleast_1d(np.asarray(self.zeros, dtype=np.complex128)).ravel()
        if z.size < 1:
            raise InvalidZero("a Blaschke product needs at least one zero")
        worst = float(np.max(np.abs(z)))
        if worst > 1.0 - DISC_GUARD:
            raise InvalidZero(
                f"zero of modulus {worst:.12g} is outside the guarded open disc"
            )
        object.__setattr__(self, "zeros", z)

    @property
    def degree(self) -> int:
        return self.zeros.size


@dataclass(frozen=True)
class BasisFunctionHandle:
    """One basis function of the model space, indexed 1-based."""

    product: BlaschkeProduct
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= self.product.degree:
            raise ValueError("basis index must lie in 1..degree")


@dataclass(frozen=True)
class ModelOperator:
    """Upper-triangular matrix of the compressed adjoint shift."""

    matrix: np.ndarray
    product: BlaschkeProduct


def single_zero_product(alpha: complex, n: int) -> BlaschkeProduct:
    """Blaschke product with one zero repeated ``n`` times."""
    if int(n) != n or n < 1:
        raise ValueError("the multiplicity n must be a positive integer")
    if abs(alpha) >= 1.0:
        raise InvalidZero("the zero must lie in the open unit disc")
    return BlaschkeProduct(np.full(int(n), complex(alpha), dtype=np.complex128))


def _factor(a: complex, z: np.ndarray) -> np.ndarray:
    den = 1.0 - np.conj(a) * z
    if np.any(np.abs(den) < _POLE_GUARD):
        raise PoleHit(f"evaluation point hits the pole of the factor with zero {a}")
    return (z - a) / den


def evaluate_product(product: BlaschkeProduct, z):
    """Value of the product at ``z`` (scalar or array).

    Unimodular on the unit circle and of modulus < 1 inside the disc.
    """
    z = np.asarray(z, dtype=np.complex128)
    result = np.ones(z.shape, dtype=np.complex128)
    for a in product.zeros:
        result = result * _factor(a, z)
    return result[()]


def evaluate_basis(handle: BasisFunctionHandle, z):
    """Value of the k-th orthonormal basis function at ``z``."""
    zeros = handle.product.zeros
    k = handle.index
    z = np.asarray(z, dtype=np.complex128)
    a_k = zeros[k - 1]
    den = 1.0 - np.conj(a_k) * z
    if np.any(np.abs(den) < _POLE_GUARD):
        raise PoleHit(f"evaluation point hits the pole of the factor with zero {a_k}")
    value = np.sqrt(1.0 - abs(a_k) ** 2) / den
    for a in zeros[: k - 1]:
        value = value * _factor(a, z)
    return value[()]


def model_matrix(product: BlaschkeProduct) -> ModelOperator:
    """Matrix of the compressed adjoint shift in the orthonormal basis.

    With ``sig_k = sqrt(1 - |a_k|^2)`` the entries are ``conj(a_k)`` on
    the diagonal, ``sig_l sig_k prod_{l<j<k} (-a_j)`` above it and zero
    below, indices 0-based here. When every zero equals the same ``a``
    this collapses to diagonal ``conj(a)``, superdiagonal ``1 - |a|^2``
    and entry ``(1 - |a|^2)(-a)^(k-l-1)`` further out.
    """
    zeros = product.zeros
    n = product.degree
    sig = np.sqrt(1.0 - np.abs(zeros) ** 2)
    matrix = np.zeros((n, n), dtype=np.complex128)
    for l in range(n):
        matrix[l, l] = np.conj(zeros[l])
        run = 1.0 + 0.0j
        for k in range(l + 1, n):
            matrix[l, k] = sig[l] * sig[k] * run
            run *= -zeros[k]
    return ModelOperator(matrix=matrix, product=product)


def model_matrix_by_quadrature(
    product: BlaschkeProduct, num_points: int = 4096
) -> np.ndarray:
    """Same matrix from circle quadrature of the defining inner products.

    Entry ``(l, k)`` is the N-point average of
    ``conj(e_l(z)) * (e_k(z) - e_k(0)) / z`` over the uniform unit-circle
    grid. The integrands are smooth rational functions, so the trapezoidal
    rule converges spectrally; with zeros of modulus <= 0.9 the default
    grid is far below 1e-8 error.
    """
    n = product.degree
    if num_points < 16 * n:
        raise ValueError("need at least 16 quadrature points per degree")
    z = np.exp(2j * np.pi * np.arange(num_points) / num_points)
    handles = [BasisFunctionHandle(product, k) for k in range(1, n + 1)]
    on_circle = np.column_stack([evaluate_basis(h, z) for h in handles])
    at_origin = np.array([evaluate_basis(h, 0.0) for h in handles])
    shifted = (on_circle - at_origin[None, :]) / z[:, None]
    return on_circle.conj().T @ shifted / num_points
