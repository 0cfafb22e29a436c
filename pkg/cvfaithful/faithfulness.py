"""Faithfulness of two-mode states: the check operator, its spectrum and the Gaussian criterion.

For R with entries <nm|R|pq>, the check operator (E R)^{t2} E has entries
<nm|check|pq> = <pn|R|qm>, so for a product A (x) B it is |B>><<A*|, and for a state supported on the
correlated levels |kk> it is the state itself.
"""
import numpy as np
from scipy.linalg import pinv

from .checkoperator import CheckOperator, DEFAULT_RANK_TOLERANCE, FaithfulnessReport, GaussianCoefficients
from .densityoperator import DensityOperator
from .faithfulerror import NotInvertibleError, NumericalError, ParameterError
from .fockcore import partial_transpose, swap_apply
from .fockoperator import BipartiteOperator
from .gaussianmoments import CONJUGACY_TOLERANCE, GaussianMoments
from .gridworker import map_chunks
from .logs import log_detail, log_progress
from .parsedspec import ParsedSpec
from .phasespace import characteristic_point
from .state import State
from .states import moments_of

FORMULA_TOLERANCE = 1e-12
QUADRATURE_FORM_TOLERANCE = 1e-10
MOMENT_CROSSCHECK_TOLERANCE = 1e-6
DEFAULT_STEP = 1e-3
MIN_STEP, MAX_STEP = 1e-5, 1e-1
GAUSSIAN_TOLERANCE = 1e-10


def _bipartite_carrier(R, operation):
    carrier = R.carrier if isinstance(R, DensityOperator) else R
    if not isinstance(carrier, BipartiteOperator):
        raise ParameterError(operation, "%r is not a two-mode operator" % (R,), field="R")
    return carrier


def check_operator(R, rank_tolerance: float = DEFAULT_RANK_TOLERANCE) -> CheckOperator:
    """(E R)^{t2} E, cross-checked against (R^{t2} E)^{t1}."""
    carrier = _bipartite_carrier(R, "check_operator")
    first = swap_apply(partial_transpose(swap_apply(carrier, "left"), 2), "right")
    second = partial_transpose(swap_apply(partial_transpose(carrier, 2), "right"), 1)
    scale = max(1.0, float(np.max(np.abs(carrier.entries))))
    mismatch = float(np.max(np.abs(first.entries - second.entries)))
    if mismatch > FORMULA_TOLERANCE * scale:
        raise NumericalError("check_operator", "the two check-operator formulas differ by %.3g" % mismatch)
    return CheckOperator(first, rank_tolerance)


def check_from_decomposition(terms, rank_tolerance: float = DEFAULT_RANK_TOLERANCE) -> CheckOperator:
    """Check operator of sum_i A_i (x) B_i, assembled as sum_i |B_i>><<A_i*|."""
    terms = list(terms)
    if not terms:
        raise ParameterError("check_from_decomposition", "empty term list", field="terms")
    d = terms[0][0].dim
    entries = np.zeros((d * d, d * d), dtype=complex)
    for A, B in terms:
        if A.dim != d or B.dim != d:
            raise ParameterError("check_from_decomposition", "dimension mismatch in terms", field="dim")
        entries += np.outer(B.entries.reshape(-1), A.entries.reshape(-1))
    return CheckOperator(BipartiteOperator(entries, d), rank_tolerance)


def _check_tolerance(tol, operation):
    tol = DEFAULT_RANK_TOLERANCE if tol is None else float(tol)
    if not 0.0 < tol < 1.0:
        raise ParameterError(operation, "tolerance %s outside (0, 1)" % tol, field="tol")
    return tol


def classify(checkop: CheckOperator, tol: float | None = None, moments: GaussianMoments | None = None, method: str = "svd", chi_value: float | None = None) -> FaithfulnessReport:
    tol = _check_tolerance(tol if tol is not None else checkop.rank_tolerance, "classify")
    if chi_value is None and moments is not None:
        chi_value = chi(moments)
    report = FaithfulnessReport(
        numerical_rank=checkop.numerical_rank(tol),
        dim=checkop.dim,
        sigma_min=checkop.singular_values[-1],
        sigma_max=checkop.singular_values[0],
        chi=chi_value,
        method=method,
        tol=tol,
    )
    log_detail("classify: %r" % report)
    return report


def invert_check(checkop: CheckOperator, tol: float | None = None) -> BipartiteOperator:
    """SVD pseudo-inverse of a full-rank check operator."""
    report = classify(checkop, tol)
    if not report.full_rank:
        raise NotInvertibleError("invert_check", report)
    return BipartiteOperator(pinv(checkop.entries, atol=0.0, rtol=report.tol), checkop.dim)


def chi_quadrature(moments: GaussianMoments) -> complex:
    """2 (<dXa Xb>^2 + <dYa Yb>^2 + <dXa Yb>^2 + <dYa Xb>^2) with X = (c + c^dag)/2, Y = (c - c^dag)/2i."""
    p, q, r, s = moments.ab, moments.adag_bdag, moments.adag_b, moments.a_bdag
    xx = (p + q + r + s) / 4
    yy = -(p + q - r - s) / 4
    xy = (p - q + r - s) / 4j
    yx = (p - q - r + s) / 4j
    return 2 * (xx ** 2 + yy ** 2 + xy ** 2 + yx ** 2)


def chi(moments: GaussianMoments, tol: float = CONJUGACY_TOLERANCE) -> float:
    """<Delta a^dag b^dag><Delta a b> + <Delta a^dag b><Delta a b^dag>."""
    moments.check_conjugacy(tol)
    value = moments.adag_bdag * moments.ab + moments.adag_b * moments.a_bdag
    quadrature = chi_quadrature(moments)
    if abs(value - quadrature) > QUADRATURE_FORM_TOLERANCE * max(1.0, abs(value)):
        raise NumericalError("chi", "quadrature form %s disagrees with %s" % (quadrature, value))
    return float(value.real)


def _wirtinger_at_origin(R, h):
    """First and mixed second Wirtinger derivatives of Gamma at the origin, central differences of step h."""
    def gamma(alpha, beta):
        return characteristic_point(R, alpha, beta)

    d_x = (gamma(h, 0) - gamma(-h, 0)) / (2 * h)
    d_y = (gamma(1j * h, 0) - gamma(-1j * h, 0)) / (2 * h)
    d_u = (gamma(0, h) - gamma(0, -h)) / (2 * h)
    d_v = (gamma(0, 1j * h) - gamma(0, -1j * h)) / (2 * h)

    def mixed(first, second):
        return (gamma(first, second) - gamma(first, -second) - gamma(-first, second) + gamma(-first, -second)) / (4 * h * h)

    d_xu, d_xv = mixed(h, h), mixed(h, 1j * h)
    d_yu, d_yv = mixed(1j * h, h), mixed(1j * h, 1j * h)
    return {
        "alpha": (d_x - 1j * d_y) / 2,
        "beta": (d_u - 1j * d_v) / 2,
        "beta_conj": (d_u + 1j * d_v) / 2,
        "alpha_beta": (d_xu - 1j * d_xv - 1j * d_yu - d_yv) / 4,
        "alpha_beta_conj": (d_xu + 1j * d_xv - 1j * d_yu + d_yv) / 4,
    }


def ab_coefficients(R: DensityOperator, h: float = DEFAULT_STEP) -> GaussianCoefficients:
    """A = d2Gamma/da db - dGamma/da dGamma/db and B = d2Gamma/da db* - dGamma/da dGamma/db* at 0.

    Derivatives are Wirtinger combinations of central differences, refined by one
    Richardson step, then matched against A = <Delta a^dag b^dag>, B = -<Delta a^dag b>.
    """
    h = float(h)
    if not MIN_STEP <= h <= MAX_STEP:
        raise ParameterError("ab_coefficients", "step %s outside [%g, %g]" % (h, MIN_STEP, MAX_STEP), field="h")
    coarse = _wirtinger_at_origin(R, h)
    fine = _wirtinger_at_origin(R, h / 2)
    derivative = {key: (4 * fine[key] - coarse[key]) / 3 for key in coarse}
    A = derivative["alpha_beta"] - derivative["alpha"] * derivative["beta"]
    B = derivative["alpha_beta_conj"] - derivative["alpha"] * derivative["beta_conj"]

    moments = moments_of(R)
    for name, numeric, exact in (("A", A, moments.adag_bdag), ("B", B, -moments.adag_b)):
        if abs(numeric - exact) > MOMENT_CROSSCHECK_TOLERANCE * max(1.0, abs(exact)):
            raise NumericalError("ab_coefficients", "finite-difference %s = %s disagrees with moments %s" % (name, numeric, exact))
    log_detail("ab_coefficients: A = %s, B = %s (h = %g)" % (A, B, h))
    return GaussianCoefficients(A, B)


def gaussian_faithful(coeffs: GaussianCoefficients, tol: float = GAUSSIAN_TOLERANCE) -> bool:
    return abs(coeffs.discriminant()) > tol


def assess(R: DensityOperator, tol: float | None = None, method: str = "svd", h: float = DEFAULT_STEP) -> FaithfulnessReport:
    """Check operator, spectrum and chi of a state.

    method 'svd' takes chi from the exact moments, 'gaussian' from the finite-difference
    A and B coefficients (chi = |A|^2 + |B|^2); the rank fields always come from the SVD.
    """
    if method not in ("svd", "gaussian"):
        raise ParameterError("assess", "unknown method '%s'" % method, field="method")
    checkop = check_operator(R)
    if method == "gaussian":
        coeffs = ab_coefficients(R, h)
        return classify(checkop, tol, method=method, chi_value=abs(coeffs.A) ** 2 + abs(coeffs.B) ** 2)
    return classify(checkop, tol, moments=moments_of(R), method=method)


def sweep_dims(spec, dims, tol: float | None = None, threads: int | None = None) -> list:
    """One FaithfulnessReport per truncation, same state family and parameters."""
    parsed = spec if isinstance(spec, ParsedSpec) else ParsedSpec(spec)
    if parsed.family == "file":
        raise ParameterError("sweep_dims", "a stored state has a fixed truncation", field="family")
    document = parsed.to_dict()
    log_progress("sweep_dims: %s over d in %s" % (parsed.family, list(dims)))

    def run(d):
        return assess(State(dict(document, dim=int(d))), tol)

    return map_chunks(run, list(dims), threads)
