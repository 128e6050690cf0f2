"""Dense complex matrix and polynomial kernel.

Matrices are plain square ``complex128`` numpy arrays and vectors are 1-D
arrays; there is no wrapper type. Every routine is a pure function of its
inputs, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian

__all__ = [
    "Polynomial",
    "as_complex_matrix",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "matrix_power",
    "polynomial_roots",
    "random_unit_vector",
]


def as_complex_matrix(matrix) -> np.ndarray:
    """Coerce the input to a square complex matrix with finite entries."""
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


@dataclass(frozen=True)
class Polynomial:
    """Polynomial stored as coefficients in ascending degree order.

    Trailing zero coefficients are trimmed on construction; the zero
    polynomial is rejected, so the leading coefficient always has positive
    magnitude.
    """

    coefficients: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=np.complex128)).ravel()
        while c.size > 1 and c[-1] == 0:
            c = c[:-1]
        if c.size == 0 or abs(c[-1]) == 0:
            raise ValueError("the zero polynomial has no leading coefficient")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        return self.coefficients.size - 1

    def __call__(self, z):
        """Evaluate at ``z`` (scalar or array) by Horner's scheme."""
        z = np.asarray(z, dtype=np.complex128)
        result = np.full(z.shape, self.coefficients[-1], dtype=np.complex128)
        for c in self.coefficients[-2::-1]:
            result = result * z + c
        return result[()]


def _as_polynomial(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial(p)


def hermitian_eigensystem(matrix, tol: float = 1e-12):
    """Eigen-decomposition of a Hermitian matrix.

    Parameters
    ----------
    matrix : array_like
        Square matrix, Hermitian within ``tol`` (max entry of ``M - M*``).
    tol : float
        Tolerance for the Hermitian pre-check.

    Returns
    -------
    values : ndarray
        Real eigenvalues sorted in descending order.
    vectors : ndarray
        Orthonormal eigenvectors, one per column, matching ``values``.
    """
    a = as_complex_matrix(matrix)
    defect = float(np.max(np.abs(a - a.conj().T)))
    if defect > tol:
        raise NotHermitian(
            f"max |M - M*| entry is {defect:.3e}, above tolerance {tol:.3e}"
        )
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence("Hermitian eigensolver did not converge") from exc
    return values[::-1].copy(), vectors[:, ::-1].copy()


def hermitian_eigenvalues(matrix, tol: float = 1e-12) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted descending."""
    return hermitian_eigensystem(matrix, tol=tol)[0]


def _top_eigenvalue(hermitian: np.ndarray) -> float:
    """Largest eigenvalue of an already-validated Hermitian matrix."""
    try:
        return float(np.linalg.eigvalsh(hermitian)[-1])
    except np.linalg.LinAlgError as exc:
        raise NoConvergence("Hermitian eigensolver did not converge") from exc


def matrix_power(matrix, k: int) -> np.ndarray:
    """k-th power by repeated multiplication; ``k = 0`` gives the identity."""
    a = as_complex_matrix(matrix)
    if int(k) != k or k < 0:
        raise ValueError("the exponent must be a nonnegative integer")
    result = np.eye(a.shape[0], dtype=np.complex128)
    for _ in range(int(k)):
        result = result @ a
    return result


def _cluster_means(values: np.ndarray, tol: float) -> np.ndarray:
    """Replace members of clusters of diameter <= tol by the cluster mean.

    Averaging cancels the leading perturbation of a numerically split
    multiple root, so the returned repeated values are far more accurate
    than any single member.
    """
    out = np.array(values, dtype=np.complex128)
    assigned = np.zeros(out.size, dtype=bool)
    for i in range(out.size):
        if assigned[i]:
            continue
        members = ~assigned & (np.abs(out - out[i]) <= tol)
        out[members] = np.mean(values[members])
        assigned |= members
    return out


def polynomial_roots(p, tol: float = 1e-12, cluster_tol: float = 1e-6) -> np.ndarray:
    """All roots of a polynomial, with multiplicity.

    Roots are computed from the companion matrix, then numerically split
    multiple roots closer than ``cluster_tol`` are collapsed onto their
    cluster mean. Each returned root is validated against the residual
    bound ``|p(root)| <= tol * scale`` with ``scale = sum_i |c_i| |root|^i``.
    """
    poly = _as_polynomial(p)
    if poly.degree < 1:
        raise ValueError("root-finding needs degree >= 1")
    try:
        raw = np.roots(poly.coefficients[::-1])
    except np.linalg.LinAlgError as exc:
        raise NoConvergence("companion-matrix root finder did not converge") from exc
    roots = _cluster_means(raw, cluster_tol)

    abs_coeffs = np.abs(poly.coefficients)
    scale = np.full(roots.shape, abs_coeffs[-1])
    for c in abs_coeffs[-2::-1]:
        scale = scale * np.abs(roots) + c
    residuals = np.abs(poly(roots))
    worst = float(np.max(residuals - tol * np.maximum(scale, 1.0)))
    if worst > 0:
        raise NoConvergence(
            f"root residual exceeds tolerance by {worst:.3e}"
        )
    return roots


def random_unit_vector(n: int, seed: int) -> np.ndarray:
    """Seeded complex unit vector, rotation-invariant in distribution.

    Components are i.i.d. standard complex Gaussians, normalized to unit
    Euclidean norm; the same ``(n, seed)`` always yields the same vector.
    """
    if int(n) != n or n < 1:
        raise ValueError("dimension must be a positive integer")
    rng = np.random.default_rng(seed)
    while True:
        v = rng.standard_normal(int(n)) + 1j * rng.standard_normal(int(n))
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            return v / norm
