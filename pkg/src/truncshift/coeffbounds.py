"""Taylor coefficients of rational functions positive on the torus, and
the operator-radius bounds they obey.

A rational function F = P/Q that is real and positive on the unit circle
has nonzero roots paired across the circle: every root ``a`` comes with
``1/conj(a)``. Splitting the inner ones off gives the inner function
``z^r psi(z)`` with ``psi`` built from the inner denominator roots and
``r = max(0, m - d + 1)`` counting the inner numerator surplus. The k-th
Taylor coefficient of F is then bounded by ``c_0`` times the numerical
radius of the k-th power of the compressed shift attached to that inner
function. Specializing to trigonometric polynomials (monomial
denominators) recovers the classical cosine coefficient bounds, and the
nilpotent-contraction bound is exercised by a randomized generator.

Coefficients themselves are computed by FFT on uniform circle samples
with an automatic size-doubling convergence gate, which keeps the route
independent of the root-based factorization it is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeProduct, model_matrix
from .errors import (
    DomainError,
    NoConvergence,
    NotCoprime,
    PairingViolation,
    PoleOnTorus,
    RetryExhausted,
    ZeroOnTorus,
)
from .linalg import Polynomial, matrix_power, polynomial_roots
from .numrange import numerical_radius

__all__ = [
    "CoefficientBound",
    "FactorizationData",
    "RationalTorusFunction",
    "TrigPolynomial",
    "coefficient_bound_check",
    "egervary_bound",
    "factorize",
    "fejer_extremal",
    "haagerup_check",
    "random_positive_rational",
    "rational_from_modulus_factors",
    "taylor_coefficients",
]

#: Validation grid size on the torus.
TORUS_GRID = 4096

#: Roots closer than this to the unit circle are treated as on it.
CIRCLE_TOL = 1e-6

#: Roots closer than this to zero are excluded from Blaschke products.
ORIGIN_TOL = 1e-6

_POLE_SAMPLE_TOL = 1e-10
_REALNESS_TOL = 1e-9
_FFT_GATE = 1e-10
_FFT_CAP = 2 ** 20


def _torus_points(num: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(num) / num)


def _as_polynomial(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial(p)


@dataclass(frozen=True)
class RationalTorusFunction:
    """Ratio P/Q of coprime polynomials, real and nonnegative on the torus.

    Construction samples the ratio on a 4096-point circle grid and rejects
    inputs with denominator zeros at a sample (PoleOnTorus), a nonreal or
    sign-changing restriction (ValueError), or a shared root (NotCoprime).
    Boundary-touching nonnegative functions are accepted; how their torus
    zeros are handled is decided in :func:`factorize`.
    """

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        num = _as_polynomial(self.numerator)
        den = _as_polynomial(self.denominator)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

        z = _torus_points(TORUS_GRID)
        den_values = np.atleast_1d(den(z))
        if float(np.min(np.abs(den_values))) < _POLE_SAMPLE_TOL:
            raise PoleOnTorus("denominator vanishes at a torus sample point")
        values = np.atleast_1d(num(z)) / den_values
        if float(np.max(np.abs(values.imag))) >= _REALNESS_TOL:
            raise ValueError("the ratio is not real on the torus")
        if float(np.min(values.real)) <= -_REALNESS_TOL:
            raise ValueError("the ratio changes sign on the torus")

        if num.degree >= 1 and den.degree >= 1:
            roots_num = polynomial_roots(num)
            roots_den = polynomial_roots(den)
            gap = np.min(np.abs(roots_num[:, None] - roots_den[None, :]))
            if gap <= CIRCLE_TOL:
                raise NotCoprime(
                    f"numerator and denominator share a root (gap {gap:.3e})"
                )

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        return (self.numerator(z) / self.denominator(z))[()]


@dataclass(frozen=True)
class FactorizationData:
    """Inner-root data of a positive rational function.

    ``psi`` is the Blaschke product over the inner nonzero denominator
    roots (None when there are none), ``inner_zeros_numerator`` groups the
    strictly inner nonzero numerator roots with multiplicities, ``m`` and
    ``d`` count inner nonzero roots of numerator and denominator, and
    ``phi_var`` is the inner function with zero set ``{0} * r`` plus the
    ``psi`` zeros, ``r = max(0, m - d + 1)``. ``pairing_defect`` is the
    largest distance between a nonzero root and its best reflected
    partner, relative to the partner magnitude.
    """

    psi: BlaschkeProduct | None
    inner_zeros_numerator: tuple[tuple[complex, int], ...]
    m: int
    d: int
    r: int
    phi_var: BlaschkeProduct
    pairing_defect: float


def _sorted_zeros(values: np.ndarray) -> np.ndarray:
    order = np.lexsort((values.imag, values.real))
    return values[order]


def _group_with_multiplicity(values: np.ndarray, tol: float):
    groups: list[tuple[complex, int]] = []
    for v in _sorted_zeros(values):
        if groups and abs(v - groups[-1][0]) <= tol:
            groups[-1] = (groups[-1][0], groups[-1][1] + 1)
        else:
            groups.append((complex(v), 1))
    return tuple(groups)


def _pairing_defect(roots: np.ndarray, tol: float) -> float:
    """Worst relative distance from a reflected root to the root multiset."""
    nonzero = roots[np.abs(roots) > ORIGIN_TOL]
    if nonzero.size == 0:
        return 0.0
    reflected = 1.0 / np.conj(nonzero)
    distances = np.min(np.abs(nonzero[None, :] - reflected[:, None]), axis=1)
    return float(np.max(distances / np.maximum(1.0, np.abs(reflected))))


def _is_monomial(poly: Polynomial) -> bool:
    if poly.degree == 0:
        return True
    lead = abs(poly.coefficients[-1])
    return float(np.max(np.abs(poly.coefficients[:-1]))) <= 1e-12 * lead


def _factorize_trig(num: Polynomial, den: Polynomial) -> FactorizationData:
    """Monomial-denominator branch: F is a trigonometric polynomial.

    Realness forces the numerator coefficients to be conjugate-reciprocal
    around the monomial degree, so the inner-root count is half the
    numerator degree with no root classification needed. This is the only
    branch that tolerates numerator zeros on the circle itself, which
    nonnegative trigonometric polynomials legitimately have.
    """
    coeffs = num.coefficients
    scale = float(np.max(np.abs(coeffs)))
    symmetric = (
        num.degree == 2 * den.degree
        and float(np.max(np.abs(coeffs - np.conj(coeffs[::-1])))) <= 1e-9 * scale
    )
    if not symmetric:
        raise PairingViolation(
            "numerator is not conjugate-reciprocal over a monomial denominator"
        )
    m = den.degree
    r = m + 1
    phi_var = BlaschkeProduct(np.zeros(r, dtype=np.complex128))
    inner = ()
    if num.degree >= 1:
        roots = polynomial_roots(num)
        keep = (np.abs(roots) > ORIGIN_TOL) & (np.abs(roots) < 1.0 - CIRCLE_TOL)
        inner = _group_with_multiplicity(roots[keep], CIRCLE_TOL)
    return FactorizationData(
        psi=None,
        inner_zeros_numerator=inner,
        m=m,
        d=0,
        r=r,
        phi_var=phi_var,
        pairing_defect=0.0,
    )


def factorize(F: RationalTorusFunction, tol: float = CIRCLE_TOL) -> FactorizationData:
    """Split off the inner function governing the coefficient bound.

    Roots of numerator and denominator are classified against the unit
    circle with tolerance ``tol``; any root that close to the circle is
    rejected (ZeroOnTorus), except through the monomial-denominator branch
    above. Reflection pairing of the nonzero roots is verified and its
    worst defect reported; a failure means the input was not really real
    on the torus.
    """
    num, den = F.numerator, F.denominator
    if _is_monomial(den):
        return _factorize_trig(num, den)

    den_roots = polynomial_roots(den)
    num_roots = (
        polynomial_roots(num) if num.degree >= 1 else np.empty(0, dtype=np.complex128)
    )
    for roots in (num_roots, den_roots):
        if roots.size and float(np.min(np.abs(np.abs(roots) - 1.0))) <= tol:
            raise ZeroOnTorus("a root lies within tolerance of the unit circle")

    defect = max(_pairing_defect(num_roots, tol), _pairing_defect(den_roots, tol))
    if defect > tol:
        raise PairingViolation(
            f"reflection pairing fails with defect {defect:.3e}"
        )

    def inner_nonzero(roots: np.ndarray) -> np.ndarray:
        keep = (np.abs(roots) > ORIGIN_TOL) & (np.abs(roots) < 1.0 - tol)
        return _sorted_zeros(roots[keep])

    num_inner = inner_nonzero(num_roots)
    den_inner = inner_nonzero(den_roots)
    m, d = num_inner.size, den_inner.size
    r = max(0, m - d + 1)
    psi = BlaschkeProduct(den_inner) if d else None
    phi_zeros = np.concatenate([np.zeros(r, dtype=np.complex128), den_inner])
    return FactorizationData(
        psi=psi,
        inner_zeros_numerator=_group_with_multiplicity(num_inner, tol),
        m=m,
        d=d,
        r=r,
        phi_var=BlaschkeProduct(phi_zeros),
        pairing_defect=defect,
    )


def taylor_coefficients(
    F: RationalTorusFunction, kmax: int, fft_size: int | None = None
) -> np.ndarray:
    """Taylor coefficients ``c_0 .. c_kmax`` by FFT of circle samples.

    The sample count starts at a power of two of at least
    ``8 (deg P + deg Q + kmax)`` and doubles until two consecutive sizes
    agree to 1e-10 on every requested coefficient, up to 2**20 points.
    Poles slow the Fourier decay, which is exactly what the gate absorbs.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    minimum = 8 * (F.numerator.degree + F.denominator.degree + kmax)
    size = 256
    while size < minimum:
        size *= 2
    if fft_size is not None:
        if fft_size & (fft_size - 1) or fft_size < max(minimum, 2):
            raise ValueError(
                "fft_size must be a power of two of at least 8*(degP+degQ+kmax)"
            )
        size = fft_size

    previous = None
    while size <= _FFT_CAP:
        z = _torus_points(size)
        den_values = np.atleast_1d(F.denominator(z))
        if float(np.min(np.abs(den_values))) < _POLE_SAMPLE_TOL:
            raise PoleOnTorus("denominator vanishes at a torus sample point")
        spectrum = np.fft.fft(np.atleast_1d(F.numerator(z)) / den_values) / size
        estimate = spectrum[: kmax + 1].copy()
        if previous is not None and float(np.max(np.abs(estimate - previous))) < _FFT_GATE:
            return estimate
        previous = estimate
        size *= 2
    raise NoConvergence("Fourier coefficients did not stabilize below the size cap")


@dataclass(frozen=True)
class CoefficientBound:
    """One verified instance of the coefficient inequality."""

    lhs: float
    rhs: float
    holds: bool


def coefficient_bound_check(F: RationalTorusFunction, k: int) -> CoefficientBound:
    """Compare ``|c_k|`` against ``c_0`` times the shift-power radius.

    The two sides come from independent routes: the left from FFT
    coefficients, the right from the root factorization, the model matrix
    of its inner function, and the support-function sweep.
    """
    if k < 1:
        raise ValueError("the coefficient order k must be at least 1")
    coeffs = taylor_coefficients(F, k)
    data = factorize(F)
    shifted = matrix_power(model_matrix(data.phi_var).matrix, k)
    rhs = float(coeffs[0].real) * numerical_radius(shifted).radius
    lhs = float(np.abs(coeffs[k]))
    return CoefficientBound(lhs=lhs, rhs=rhs, holds=bool(lhs <= rhs + 1e-9))


def egervary_bound(n: int, k: int) -> float:
    """Classical bound ``cos(pi / (floor((n-1)/k) + 2))`` for trig polynomials.

    Valid for a nonnegative trigonometric polynomial of degree ``n - 1``
    and coefficient order ``1 <= k <= n - 1``; equals the radius of the
    k-th power of the n-dimensional nilpotent shift.
    """
    if n < 2 or k < 1 or k > n - 1:
        raise DomainError("need n >= 2 and 1 <= k <= n-1")
    return float(np.cos(np.pi / ((n - 1) // k + 2)))


@dataclass(frozen=True)
class TrigPolynomial:
    """Real-valued trigonometric polynomial stored as ``c_0 .. c_{n-1}``.

    Negative-index coefficients are implied by conjugate symmetry. ``c_0``
    must be real; at least two stored coefficients are required.
    """

    c: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.c, dtype=np.complex128)).ravel()
        if c.size < 2:
            raise ValueError("need at least coefficients c_0 and c_1")
        if abs(c[0].imag) > 1e-12 * max(1.0, abs(c[0])):
            raise ValueError("c_0 must be real")
        c[0] = c[0].real
        object.__setattr__(self, "c", c)

    @property
    def degree(self) -> int:
        return self.c.size - 1

    def values(self, t):
        """Evaluate at angles ``t`` using the conjugate symmetry."""
        t = np.asarray(t, dtype=float)
        total = np.full(t.shape, self.c[0].real)
        for j in range(1, self.c.size):
            total = total + 2.0 * (self.c[j] * np.exp(1j * j * t)).real
        return total[()]

    def as_rational(self) -> RationalTorusFunction:
        """Embed as P/Q with ``P`` the symmetric coefficient window, ``Q = z^degree``."""
        full = np.concatenate([np.conj(self.c[:0:-1]), self.c])
        monomial = np.zeros(self.c.size, dtype=np.complex128)
        monomial[-1] = 1.0
        return RationalTorusFunction(Polynomial(full), Polynomial(monomial))


def fejer_extremal(n: int) -> TrigPolynomial:
    """Nonnegative trig polynomial attaining the first-coefficient bound.

    The squared modulus of the sine-profile polynomial with coefficients
    ``sin((j+1) pi/(n+1))`` has ``c_1 / c_0 = cos(pi/(n+1))``, the largest
    ratio any nonnegative polynomial of that degree allows.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    profile = np.sin(np.arange(1, n + 1) * np.pi / (n + 1))
    autocorrelation = np.correlate(profile, profile, mode="full")[n - 1 :]
    return TrigPolynomial(autocorrelation.astype(np.complex128))


def haagerup_check(n: int, trials: int, seed: int) -> float:
    """Worst radius-to-bound ratio over random nilpotent contractions.

    Each trial draws a strictly upper-triangular matrix with i.i.d.
    complex Gaussian entries (so its n-th power vanishes structurally),
    scales it to unit operator norm, and measures the numerical radius
    against ``cos(pi/(n+1))``. The maximum ratio never exceeds one; the
    plain nilpotent shift attains it.
    """
    if n < 2 or trials < 1:
        raise ValueError("need n >= 2 and trials >= 1")
    rng = np.random.default_rng(seed)
    bound = float(np.cos(np.pi / (n + 1)))
    worst = 0.0
    for _ in range(trials):
        entries = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        nilpotent = np.triu(entries, k=1)
        norm = float(np.linalg.norm(nilpotent, 2))
        if norm < 1e-300:
            continue
        ratio = numerical_radius(nilpotent / norm).radius / bound
        worst = max(worst, ratio)
    return worst


def rational_from_modulus_factors(p, q) -> RationalTorusFunction:
    """Build ``|p(e^{it})|^2 / |q(e^{it})|^2`` as a single ratio in z.

    Uses ``|p|^2 = z^{-deg p} p(z) p~(z)`` on the circle, where ``p~`` has
    the reversed conjugate coefficients; the leftover monomial moves to
    whichever side keeps both parts polynomials.
    """
    p = _as_polynomial(p)
    q = _as_polynomial(q)
    num = np.convolve(p.coefficients, np.conj(p.coefficients[::-1]))
    den = np.convolve(q.coefficients, np.conj(q.coefficients[::-1]))
    shift = q.degree - p.degree
    if shift >= 0:
        num = np.concatenate([np.zeros(shift, dtype=np.complex128), num])
    else:
        den = np.concatenate([np.zeros(-shift, dtype=np.complex128), den])
    return RationalTorusFunction(Polynomial(num), Polynomial(den))


def _random_off_torus_polynomial(rng: np.random.Generator, degree: int) -> Polynomial:
    if degree == 0:
        modulus = 0.5 + rng.random()
        angle = 2.0 * np.pi * rng.random()
        return Polynomial([modulus * np.exp(1j * angle)])
    moduli = 0.15 + 0.65 * rng.random(degree)
    outside = rng.random(degree) < 0.5
    moduli[outside] = 1.0 / moduli[outside]
    angles = 2.0 * np.pi * rng.random(degree)
    roots = moduli * np.exp(1j * angles)
    return Polynomial(np.poly(roots)[::-1])


def random_positive_rational(
    deg_p: int, deg_q: int, seed: int
) -> RationalTorusFunction:
    """Seeded random instance, strictly positive on the torus.

    Positivity comes from the squared-modulus construction; roots are kept
    away from both the circle and the origin. Draws are rejected and
    retried when the two sides fail the coprimality gate, with a budget of
    100 attempts.
    """
    if deg_p < 0 or deg_q < 0:
        raise ValueError("degrees must be nonnegative")
    rng = np.random.default_rng(seed)
    for _ in range(100):
        p = _random_off_torus_polynomial(rng, deg_p)
        q = _random_off_torus_polynomial(rng, deg_q)
        try:
            return rational_from_modulus_factors(p, q)
        except NotCoprime:
            continue
    raise RetryExhausted("could not draw a coprime instance in 100 attempts")
