"""Closed-form Wigner functions of the example families and the Gaussian integral identity.

analytic_wigner_split_thermal is the transform of the split thermal mixture
int d^2 gamma exp(-|gamma|^2 / sigma2) / (pi sigma2) |gamma gamma><gamma gamma|.
The older closed form with 1 + 2 sigma2 denominators does not integrate to one for
sigma2 > 1/2; it is kept as published_wigner_split_thermal for comparison only.
"""
import numpy as np
from scipy.special import i0e

from .faithfulerror import GridBoundsError, ParameterError
from .logs import log_detail
from .phasespace import plane, WIGNER_PREFACTOR
from .states import _check_fraction, _check_non_negative

MIN_EXTENT_SIGMAS = 6.0
MAX_SPACING_SIGMAS = 0.5
DEFAULT_EXTENT_SIGMAS = 8.0
DEFAULT_POINTS = 81


def _norms(alpha, beta):
    alpha, beta = complex(alpha), complex(beta)
    return alpha, beta, abs(alpha) ** 2 + abs(beta) ** 2


def analytic_wigner_twin_beam(lmbda: float, alpha: complex, beta: complex) -> float:
    lmbda = _check_fraction(lmbda, "analytic_wigner_twin_beam")
    alpha, beta, norm = _norms(alpha, beta)
    cross = 2.0 * (alpha * beta).real
    exponent = -2.0 * (1 + lmbda ** 2) / (1 - lmbda ** 2) * norm + 4.0 * lmbda / (1 - lmbda ** 2) * cross
    return WIGNER_PREFACTOR * np.exp(exponent)


def analytic_wigner_split_thermal(sigma2: float, alpha: complex, beta: complex) -> float:
    sigma2 = _check_non_negative(sigma2, "analytic_wigner_split_thermal", "sigma2")
    alpha, beta, norm = _norms(alpha, beta)
    cross = 2.0 * (alpha * beta.conjugate()).real
    spread = 1.0 + 4.0 * sigma2
    exponent = -2.0 * (1 + 2 * sigma2) / spread * norm + 4.0 * sigma2 / spread * cross
    return WIGNER_PREFACTOR / spread * np.exp(exponent)


def published_wigner_split_thermal(sigma2: float, alpha: complex, beta: complex) -> float:
    sigma2 = _check_non_negative(sigma2, "published_wigner_split_thermal", "sigma2")
    alpha, beta, norm = _norms(alpha, beta)
    cross = 2.0 * (alpha * beta.conjugate()).real
    spread = 1.0 + 2.0 * sigma2
    return WIGNER_PREFACTOR / spread * np.exp(-2.0 / spread * norm + 4.0 * sigma2 / spread * cross)


def analytic_wigner_correlated_fock(lmbda: float, alpha: complex, beta: complex) -> float:
    """(4/pi^2) exp(-2 (1+lambda)/(1-lambda) (|alpha|^2 + |beta|^2)) I0(8 sqrt(lambda) |alpha beta| / (1-lambda)).

    I0 enters through its exponentially scaled form so large arguments do not overflow.
    """
    lmbda = _check_fraction(lmbda, "analytic_wigner_correlated_fock")
    alpha, beta, norm = _norms(alpha, beta)
    argument = 8.0 * np.sqrt(lmbda) / (1 - lmbda) * abs(alpha) * abs(beta)
    exponent = -2.0 * (1 + lmbda) / (1 - lmbda) * norm + argument
    return WIGNER_PREFACTOR * np.exp(exponent) * i0e(argument)


def gaussian_integral_identity_check(sigma2: float, alpha: complex, gamma: complex, extent: float | None = None, points: int | None = None) -> float:
    """|int d^2 beta exp(-|beta|^2/sigma2 + beta alpha* - beta* gamma) - pi sigma2 exp(-sigma2 alpha* gamma)|.

    The integral is a midpoint sum over |Re beta|, |Im beta| <= extent; the lattice
    must reach 6 sigma and resolve sigma / 2.
    """
    sigma2 = float(sigma2)
    if not (np.isfinite(sigma2) and sigma2 > 0):
        raise ParameterError("gaussian_integral_identity_check", "sigma2 = %s is not positive" % sigma2, field="sigma2")
    alpha, gamma = complex(alpha), complex(gamma)
    sigma = np.sqrt(sigma2)
    extent = extent if extent is not None else DEFAULT_EXTENT_SIGMAS * sigma
    points = points if points is not None else DEFAULT_POINTS
    spacing = 2.0 * extent / points
    if extent < MIN_EXTENT_SIGMAS * sigma:
        raise GridBoundsError("gaussian_integral_identity_check", "extent %.4g < %g sigma = %.4g" % (extent, MIN_EXTENT_SIGMAS, MIN_EXTENT_SIGMAS * sigma))
    if spacing > MAX_SPACING_SIGMAS * sigma:
        raise GridBoundsError("gaussian_integral_identity_check", "spacing %.4g > sigma / 2 = %.4g" % (spacing, MAX_SPACING_SIGMAS * sigma))

    betas, area = plane(extent, points)
    integrand = np.exp(-np.abs(betas) ** 2 / sigma2 + betas * alpha.conjugate() - betas.conjugate() * gamma)
    numeric = complex(np.sum(integrand) * area)
    exact = np.pi * sigma2 * np.exp(-sigma2 * alpha.conjugate() * gamma)
    log_detail("gaussian_integral_identity_check: numeric %s, exact %s" % (numeric, exact))
    return float(abs(numeric - exact))
