"""Kac-Murdock-Szego (KMS) matrices and their trigonometric spectra.

The KMS matrix of size ``n`` with decay rate ``alpha`` has entries
``alpha ** |r - s|``. It is the Toeplitz matrix of the Poisson kernel

    P(t) = (1 - alpha^2) / (1 - 2 alpha cos t + alpha^2),

and its eigenvalues are the kernel values ``P(t_k)`` at the ``n`` roots
``t_k`` of an explicit trigonometric polynomial of degree ``n`` in
``cos t``. Those roots interlace with the uniform grid ``x_k = k pi/(n+1)``,

    0 < t_1 <= x_1 < t_2 <= x_2 < ... < t_n <= x_n < pi,

with equality exactly when ``alpha = 0``. The guaranteed sign alternation
at the grid makes bracketed bisection a complete root finder here, which
is the second, eigensolver-free route to the spectrum.

The module also computes the derived bound quantities used for the
numerical radius of the compressed adjoint shift: the radius ``s`` of the
strictly upper-triangular part of the KMS matrix, and the lower/upper
radius bounds ``m`` and ``M`` for the shift with an n-fold repeated zero.
All three are rational expressions in ``cos t_1`` and ``cos t_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BracketFailure, DomainError

__all__ = [
    "BoundsTriple",
    "KmsParams",
    "KmsSpectrum",
    "bound_quantities",
    "characteristic_value",
    "first_root_bounds",
    "kms_eigenvalues",
    "kms_matrix",
    "kms_roots",
    "kms_upper_part",
    "poisson_kernel",
    "top_eigenvalue_bounds",
    "upper_part_radius_closed_form",
]

#: Left bracket endpoints are nudged right by this amount so the k = 1
#: bracket never evaluates at t = 0, where the sign factor vanishes.
_BRACKET_SHIFT = 1e-12


@dataclass(frozen=True)
class KmsParams:
    """Matrix dimension ``n >= 1`` and decay rate ``0 <= alpha < 1``."""

    n: int
    alpha: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be a positive integer")
        alpha = float(self.alpha)
        if not 0.0 <= alpha < 1.0:
            raise ValueError("alpha must satisfy 0 <= alpha < 1")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "alpha", alpha)


@dataclass(frozen=True)
class KmsSpectrum:
    """Characteristic roots and the two eigenvalue families built on them.

    ``angles`` are the n roots ``t_k``, strictly increasing in (0, pi).
    ``eigenvalues`` are the KMS eigenvalues ``P(t_k)``, strictly decreasing.
    ``upper_part_eigenvalues`` are ``(eigenvalues - 1) / 2``, the spectrum
    of the symmetrized strictly upper-triangular part of the KMS matrix.
    """

    angles: np.ndarray
    eigenvalues: np.ndarray
    upper_part_eigenvalues: np.ndarray


@dataclass(frozen=True)
class BoundsTriple:
    """The three radius quantities attached to one ``(n, alpha)`` pair.

    ``s``  radius of the strictly upper-triangular part of the KMS matrix;
    ``m``  radius of the real part of the repeated-zero compressed shift,
           a lower bound for the radius of the shift itself;
    ``M``  the matching upper bound. The two share their second branch,
           so ``m <= M`` always.
    """

    s: float
    m: float
    M: float


def kms_matrix(params: KmsParams) -> np.ndarray:
    """Symmetric matrix with entries ``alpha ** |r - s|`` (unit diagonal)."""
    idx = np.arange(params.n)
    return params.alpha ** np.abs(idx[:, None] - idx[None, :]).astype(float)


def kms_upper_part(params: KmsParams) -> np.ndarray:
    """Strictly upper-triangular part ``J`` of the KMS matrix.

    Entry ``(r, s)`` is ``alpha ** (s - r)`` for ``s > r`` and zero
    elsewhere, so ``K = J + J^T + I`` holds exactly.
    """
    return np.triu(kms_matrix(params), k=1)


def poisson_kernel(alpha: float, t):
    """Poisson kernel ``(1 - alpha^2) / (1 - 2 alpha cos t + alpha^2)``.

    Positive for ``0 <= alpha < 1`` and strictly decreasing in ``t`` on
    ``[0, pi]`` once ``alpha > 0``. Accepts scalar or array ``t``.
    """
    t = np.asarray(t, dtype=float)
    value = (1.0 - alpha * alpha) / (1.0 - 2.0 * alpha * np.cos(t) + alpha * alpha)
    return value[()]


def _bracket_sign_function(n: int, alpha: float, t: np.ndarray) -> np.ndarray:
    """Numerator of the characteristic value in fully factored form.

    Equals ``sin(t) * p(t) / 2`` where ``p`` is the characteristic value,
    hence has the same sign as ``p`` everywhere on (0, pi). Using it for
    bracketing avoids the removable ``1/sin t`` singularity at the ends.
    """
    half = 0.5 * t
    a = (n + 1) * half
    b = (n - 1) * half
    return (np.sin(a) - alpha * np.sin(b)) * (np.cos(a) - alpha * np.cos(b))


def characteristic_value(params: KmsParams, t):
    """The degree-n characteristic polynomial in ``cos t``, evaluated at t.

    Computed from the factored form

        p(t) = (sin((n+1)t/2) - a sin((n-1)t/2))
               * (cos((n+1)t/2) - a cos((n-1)t/2)) / (sin(t/2) cos(t/2)),

    which stays well conditioned near the interval ends where the raw
    three-term sine quotient cancels. Only ``t`` in the open interval
    (0, pi) is accepted.
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr <= 0.0) or np.any(t_arr >= np.pi):
        raise DomainError("t must lie strictly between 0 and pi")
    half = 0.5 * t_arr
    value = _bracket_sign_function(params.n, params.alpha, t_arr) / (
        np.sin(half) * np.cos(half)
    )
    return value[()]


def kms_roots(params: KmsParams, tol: float = 1e-13) -> np.ndarray:
    """The n characteristic roots, one per grid cell, by bisection.

    The k-th root is bracketed in ``(x_{k-1}, x_k]`` with
    ``x_k = k pi/(n+1)``; the right endpoints are tested first since a
    root can sit exactly on the grid only for ``alpha = 0``, and that case
    short-circuits to the grid itself. ``tol`` bounds the final bracket
    width in ``t``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    n, alpha = params.n, params.alpha
    grid = np.arange(1, n + 1) * (np.pi / (n + 1))
    if alpha == 0.0:
        return grid

    lo = np.concatenate(([0.0], grid[:-1])) + _BRACKET_SHIFT
    hi = grid.copy()
    f_lo = _bracket_sign_function(n, alpha, lo)
    f_hi = _bracket_sign_function(n, alpha, hi)

    on_grid = f_hi == 0.0
    lo[on_grid] = hi[on_grid]
    open_cells = ~on_grid
    if np.any(f_lo[open_cells] * f_hi[open_cells] >= 0.0):
        raise BracketFailure("sign alternation missing from a root bracket")

    while True:
        width = hi - lo
        if np.max(width) <= tol:
            break
        mid = 0.5 * (lo + hi)
        f_mid = _bracket_sign_function(n, alpha, mid)
        same_side = f_mid * f_lo > 0.0
        lo = np.where(same_side, mid, lo)
        f_lo = np.where(same_side, f_mid, f_lo)
        hi = np.where(same_side, hi, mid)
    return 0.5 * (lo + hi)


def kms_eigenvalues(params: KmsParams, tol: float = 1e-13) -> KmsSpectrum:
    """Full spectrum from the trigonometric characteristic equation.

    Independent of any matrix eigensolver: roots come from bisection and
    eigenvalues from the Poisson kernel evaluated at them.
    """
    angles = kms_roots(params, tol=tol)
    eigenvalues = np.asarray(poisson_kernel(params.alpha, angles), dtype=float)
    return KmsSpectrum(
        angles=angles,
        eigenvalues=eigenvalues,
        upper_part_eigenvalues=(eigenvalues - 1.0) / 2.0,
    )


def first_root_bounds(params: KmsParams) -> tuple[float, float]:
    """Enclosure ``[2 arccos(alpha)/(n+1), arccos(alpha)]`` for the first root."""
    if params.n < 2:
        raise DomainError("first-root bounds need n >= 2")
    theta = float(np.arccos(params.alpha))
    return (2.0 / (params.n + 1)) * theta, theta


def top_eigenvalue_bounds(params: KmsParams) -> tuple[float, float]:
    """Sharp enclosure for the largest KMS eigenvalue.

    The lower bound is 1; the upper bound is the Poisson kernel evaluated
    at the lower end of the first-root enclosure, since the kernel
    decreases on ``[0, pi]``.
    """
    if params.n < 2:
        raise DomainError("eigenvalue bounds need n >= 2")
    alpha = params.alpha
    t_low = (2.0 / (params.n + 1)) * np.arccos(alpha)
    upper = (1.0 - alpha * alpha) / (1.0 - 2.0 * alpha * np.cos(t_low) + alpha * alpha)
    return 1.0, float(upper)


def bound_quantities(params: KmsParams, tol: float = 1e-13) -> BoundsTriple:
    """The triple ``(s, m, M)`` evaluated from the extreme roots.

    With ``c1 = cos t_1``, ``cn = cos t_n`` and the symbol transforms

        g(t) = a (cos t - a) / (1 - 2 a cos t + a^2)
        h(t) = ((1 + a^2) cos t - 2 a) / (1 - 2 a cos t + a^2)

    the quantities are ``s = max(g(t_1), -g(t_n))``,
    ``m = max(|h(t_1)|, -h(t_n))`` and
    ``M = max(((1 - 3 a^2) c1 + 2 a^3) / (1 - 2 a c1 + a^2), -h(t_n))``.
    The first M branch equals ``a + (1 - a^2)/a * g(t_1)`` for ``a > 0``
    but is evaluated in the division-free form so ``a = 0`` needs no
    special case.
    """
    if params.n < 2:
        raise DomainError("bound quantities need n >= 2")
    a = params.alpha
    roots = kms_roots(params, tol=tol)
    c1 = float(np.cos(roots[0]))
    cn = float(np.cos(roots[-1]))
    den1 = 1.0 - 2.0 * a * c1 + a * a
    denn = 1.0 - 2.0 * a * cn + a * a

    g1 = a * (c1 - a) / den1
    gn = a * (cn - a) / denn
    h1 = ((1.0 + a * a) * c1 - 2.0 * a) / den1
    hn = ((1.0 + a * a) * cn - 2.0 * a) / denn
    m_first = ((1.0 - 3.0 * a * a) * c1 + 2.0 * a ** 3) / den1

    return BoundsTriple(
        s=float(max(g1, -gn)),
        m=float(max(abs(h1), -hn)),
        M=float(max(m_first, -hn)),
    )


def upper_part_radius_closed_form(params: KmsParams):
    """Closed form for the radius of the strict upper part, when one exists.

    Dimensions 2 and 3 have explicit algebraic values. For ``n >= 4`` the
    first branch of ``s`` wins whenever ``alpha^2 <= cos(2 pi/(n+1))``; in
    that regime the value is ``g(t_1)``. Outside it no closed form is
    claimed and ``None`` is returned (fall back to ``bound_quantities``).
    """
    if params.n < 2:
        raise DomainError("closed form needs n >= 2")
    a = params.alpha
    if params.n == 2:
        return a / 2.0
    if params.n == 3:
        root = float(np.sqrt(a * a + 8.0))
        return a * (root - 3.0 * a) / (4.0 + 2.0 * a * a - 2.0 * a * root)
    threshold = float(np.cos(2.0 * np.pi / (params.n + 1)))
    if a * a > threshold:
        return None
    c1 = float(np.cos(kms_roots(params)[0]))
    return a * (c1 - a) / (1.0 - 2.0 * a * c1 + a * a)
