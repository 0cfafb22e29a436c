"""Truncated density matrices for the example state families, and their moments.

Every constructor records the probability mass lost to truncation as the state's
nominal_trace_deficit instead of renormalizing, so moments computed from the matrix
stay comparable with their untruncated closed forms.
"""
from math import ceil, log

import numpy as np
from scipy.special import gammaln, roots_laguerre

from .densityoperator import DensityOperator
from .faithfulerror import ParameterError
from .fockcore import _check_dim, annihilator, coherent_vector, creator, identity, number_operator, tensor
from .fockoperator import FockOperator, BipartiteOperator
from .gaussianmoments import GaussianMoments
from .logs import log_detail

TRUNCATION_TARGET = 1e-10
MIN_QUAD_POINTS = 64


def _check_fraction(value, operation, field="lambda"):
    value = float(value)
    if not (np.isfinite(value) and 0.0 <= value < 1.0):
        raise ParameterError(operation, "%s = %s outside [0, 1)" % (field, value), field=field)
    return value


def _check_non_negative(value, operation, field):
    value = float(value)
    if not (np.isfinite(value) and value >= 0.0):
        raise ParameterError(operation, "%s = %s is negative" % (field, value), field=field)
    return value


def _geometric_dim(ratio, minimum=2):
    if ratio <= 0.0:
        return minimum
    return max(minimum, int(ceil(log(TRUNCATION_TARGET) / log(ratio))))


def default_dim(family: str, parameter=0.0) -> int:
    """Smallest truncation keeping the family's trace deficit below 1e-10.

    twinbeam: d >= log(1e-10) / (2 log lambda); correlatedfock: d >= log(1e-10) / log lambda;
    splitthermal: d >= 40 sigma2; thermal: geometric tail of nbar / (1 + nbar);
    coherent: |alpha|^2 + 7 |alpha| + 10 covers the Poisson tail.
    """
    if family == "twinbeam":
        return _geometric_dim(_check_fraction(parameter, "default_dim") ** 2)
    elif family == "correlatedfock":
        return _geometric_dim(_check_fraction(parameter, "default_dim"))
    elif family == "splitthermal":
        return max(2, int(ceil(40 * _check_non_negative(parameter, "default_dim", "sigma2"))))
    elif family == "thermal":
        nbar = _check_non_negative(parameter, "default_dim", "nbar")
        return _geometric_dim(nbar / (1.0 + nbar))
    elif family == "coherent":
        amplitude = abs(complex(parameter))
        return max(2, int(ceil(amplitude ** 2 + 7 * amplitude + 10)))
    elif family == "vacuum":
        return 2
    raise ParameterError("default_dim", "unknown family '%s'" % family, field="family")


def vacuum(d: int) -> DensityOperator:
    d = _check_dim(d, "vacuum")
    entries = np.zeros((d, d))
    entries[0, 0] = 1.0
    return DensityOperator(FockOperator(entries), 0.0, {"family": "vacuum", "dim": d})


def thermal(nbar: float, d: int | None = None) -> DensityOperator:
    nbar = _check_non_negative(nbar, "thermal", "nbar")
    d = _check_dim(d if d is not None else default_dim("thermal", nbar), "thermal")
    ratio = nbar / (1.0 + nbar)
    populations = ratio ** np.arange(d) / (1.0 + nbar)
    return DensityOperator(FockOperator(np.diag(populations)), ratio ** d, {"family": "thermal", "nbar": nbar, "dim": d})


def coherent(alpha: complex, d: int | None = None) -> DensityOperator:
    alpha = complex(alpha)
    d = _check_dim(d if d is not None else default_dim("coherent", alpha), "coherent")
    amplitudes = coherent_vector(alpha, d)
    deficit = 1.0 - float(np.sum(np.abs(amplitudes) ** 2))
    spec = {"family": "coherent", "alpha": [alpha.real, alpha.imag], "dim": d}
    return DensityOperator(FockOperator(np.outer(amplitudes, amplitudes.conj())), deficit, spec)


def twin_beam(lmbda: float, d: int | None = None) -> DensityOperator:
    """(1 - lambda^2) sum_{n,m<d} lambda^(n+m) |nn><mm|; trace deficit lambda^(2d)."""
    lmbda = _check_fraction(lmbda, "twin_beam")
    d = _check_dim(d if d is not None else default_dim("twinbeam", lmbda), "twin_beam")
    levels = np.arange(d)
    amplitudes = np.zeros(d * d)
    amplitudes[levels * d + levels] = np.sqrt(1.0 - lmbda ** 2) * lmbda ** levels
    carrier = BipartiteOperator(np.outer(amplitudes, amplitudes), d)
    return DensityOperator(carrier, lmbda ** (2 * d), {"family": "twinbeam", "lambda": lmbda, "dim": d})


def correlated_fock(lmbda: float, d: int | None = None) -> DensityOperator:
    """(1 - lambda) sum_{n<d} lambda^n |nn><nn|."""
    lmbda = _check_fraction(lmbda, "correlated_fock")
    d = _check_dim(d if d is not None else default_dim("correlatedfock", lmbda), "correlated_fock")
    levels = np.arange(d)
    populations = np.zeros(d * d)
    populations[levels * d + levels] = (1.0 - lmbda) * lmbda ** levels
    carrier = BipartiteOperator(np.diag(populations), d)
    return DensityOperator(carrier, lmbda ** d, {"family": "correlatedfock", "lambda": lmbda, "dim": d})


def split_thermal(sigma2: float, d: int | None = None, quad_points: int | None = None) -> DensityOperator:
    """Gaussian mixture of |gamma>|gamma> with variance sigma2, by radial-angular quadrature.

    Substituting u = (1/sigma2 + 2)|gamma|^2 turns the radial integral into a
    Gauss-Laguerre one; the angular integral is a uniform trapezoid rule. Both rules
    use quad_points nodes and are exact on the truncated space once
    quad_points >= 2d - 1.
    """
    sigma2 = _check_non_negative(sigma2, "split_thermal", "sigma2")
    d = _check_dim(d if d is not None else default_dim("splitthermal", sigma2), "split_thermal")
    spec = {"family": "splitthermal", "sigma2": sigma2, "dim": d}
    if sigma2 == 0.0:
        entries = np.zeros((d * d, d * d))
        entries[0, 0] = 1.0
        return DensityOperator(BipartiteOperator(entries, d), 0.0, spec)

    points = quad_points if quad_points is not None else max(MIN_QUAD_POINTS, 2 * d)
    if int(points) != points or points < 2 * d - 1:
        raise ParameterError("split_thermal", "%s quadrature nodes cannot resolve truncation %d (need %d)" % (points, d, 2 * d - 1), field="quad_points")
    points = int(points)
    spec["quad_points"] = points

    kappa = 1.0 / sigma2 + 2.0
    nodes, weights = roots_laguerre(points)
    angles = 2 * np.pi * np.arange(points) / points
    levels = np.arange(d)
    total = (levels[:, None] + levels[None, :]).reshape(-1)
    log_norm = -0.5 * (gammaln(levels + 1)[:, None] + gammaln(levels + 1)[None, :]).reshape(-1)
    prefactor = 1.0 / ((1.0 + 2.0 * sigma2) * points)
    log_detail("split_thermal: %d radial x %d angular nodes, d = %d" % (points, points, d))

    entries = np.zeros((d * d, d * d), dtype=complex)
    for node, weight in zip(nodes, weights):
        radius = np.sqrt(node / kappa)
        magnitude = np.exp(total * np.log(radius) + log_norm + 0.5 * np.log(weight * prefactor))
        vectors = magnitude[None, :] * np.exp(1j * np.outer(angles, total))
        entries += vectors.T @ vectors.conj()
    entries = 0.5 * (entries + entries.conj().T)
    deficit = 1.0 - float(np.trace(entries).real)
    return DensityOperator(BipartiteOperator(entries, d), deficit, spec)


def product_state(rho: DensityOperator, sigma: DensityOperator) -> DensityOperator:
    for name, factor in (("rho", rho), ("sigma", sigma)):
        if factor.modes != 1:
            raise ParameterError("product_state", "%s is not a single-mode state" % name, field=name)
    if rho.dim != sigma.dim:
        raise ParameterError("product_state", "dimension mismatch %d != %d" % (rho.dim, sigma.dim), field="dim")
    deficit = 1.0 - (1.0 - rho.nominal_trace_deficit) * (1.0 - sigma.nominal_trace_deficit)
    spec = {"family": "product", "a": rho.spec, "b": sigma.spec, "dim": rho.dim}
    return DensityOperator(tensor(rho.carrier, sigma.carrier), deficit, spec)


def phase_rotate(R: DensityOperator, theta: float) -> DensityOperator:
    """Conjugation by exp(i theta N), N the total photon number."""
    d = R.dim
    levels = np.arange(d)
    if R.modes == 2:
        phases = np.exp(1j * theta * (levels[:, None] + levels[None, :]).reshape(-1))
        carrier = BipartiteOperator(phases[:, None] * R.entries * phases.conj()[None, :], d)
    else:
        phases = np.exp(1j * theta * levels)
        carrier = FockOperator(phases[:, None] * R.entries * phases.conj()[None, :])
    return DensityOperator(carrier, R.nominal_trace_deficit, R.spec)


def _require_bipartite(R, operation):
    if R.modes != 2:
        raise ParameterError(operation, "state is not a two-mode state", field="R")


def expectation(R, X: FockOperator, Y: FockOperator | None = None) -> complex:
    """Tr[R (X (x) Y)] without forming the Kronecker product; Tr[R X] for a single mode."""
    if Y is None:
        return complex(np.sum(R.entries * X.entries.T))
    tensor4 = R.carrier.as_tensor()
    return complex(np.einsum("ijkl,ki,lj->", tensor4, X.entries, Y.entries))


def moments_of(R: DensityOperator) -> GaussianMoments:
    _require_bipartite(R, "moments_of")
    d = R.dim
    a, ad, one = annihilator(d), creator(d), identity(d)
    a2 = FockOperator(a.entries @ a.entries)
    n = number_operator(d)

    mean_a, mean_ad = expectation(R, a, one), expectation(R, ad, one)
    mean_b, mean_bd = expectation(R, one, a), expectation(R, one, ad)
    return GaussianMoments(
        mean_a=mean_a,
        mean_b=mean_b,
        adag_bdag=expectation(R, ad, ad) - mean_ad * mean_bd,
        ab=expectation(R, a, a) - mean_a * mean_b,
        adag_b=expectation(R, ad, a) - mean_ad * mean_b,
        a_bdag=expectation(R, a, ad) - mean_a * mean_bd,
        adag_a=expectation(R, n, one) - mean_ad * mean_a,
        bdag_b=expectation(R, one, n) - mean_bd * mean_b,
        a2=expectation(R, a2, one) - mean_a ** 2,
        b2=expectation(R, one, a2) - mean_b ** 2,
    )


def photon_number(R: DensityOperator) -> float:
    """<a^dag a + b^dag b> (or <a^dag a> for one mode) from the truncated matrix."""
    n = number_operator(R.dim)
    if R.modes == 1:
        return expectation(R, n).real
    one = identity(R.dim)
    return (expectation(R, n, one) + expectation(R, one, n)).real
