import numpy as np
from pytest import mark, raises

from cvfaithful import GridBoundsError, ParameterError, twin_beam, split_thermal, correlated_fock
from cvfaithful.analytic import analytic_wigner_twin_beam, analytic_wigner_split_thermal, published_wigner_split_thermal, \
    analytic_wigner_correlated_fock, gaussian_integral_identity_check
from cvfaithful.phasespace import plane, wigner_grid, wigner_point

rng = np.random.default_rng(31)

def max_deviation(R, analytic):
    samples, area = plane(1.0, 3)
    grid = wigner_grid(R, samples, samples, area, area)
    expected = np.array([[analytic(alpha, beta) for beta in samples] for alpha in samples])
    return float(np.max(np.abs(grid.values.real - expected)))

###################################################################################################

@mark.parametrize("lmbda", [0.2, 0.5])
def test_twin_beam_closed_form_on_grid(lmbda):
    deviation = max_deviation(twin_beam(lmbda, 35), lambda alpha, beta: analytic_wigner_twin_beam(lmbda, alpha, beta))
    assert deviation <= 1e-6

@mark.parametrize("sigma2", [0.25, 0.5])
def test_split_thermal_closed_form_on_grid(sigma2):
    deviation = max_deviation(split_thermal(sigma2, 25), lambda alpha, beta: analytic_wigner_split_thermal(sigma2, alpha, beta))
    assert deviation <= 1e-6

def test_correlated_fock_closed_form_on_grid():
    deviation = max_deviation(correlated_fock(0.4, 40), lambda alpha, beta: analytic_wigner_correlated_fock(0.4, alpha, beta))
    assert deviation <= 1e-6

###################################################################################################

def test_twin_beam_closed_form_at_origin():
    assert abs(analytic_wigner_twin_beam(0.5, 0, 0) - 4 / np.pi ** 2) <= 1e-15

def test_split_thermal_closed_form_at_origin():
    assert abs(analytic_wigner_split_thermal(0.5, 0, 0) - 4 / (3 * np.pi ** 2)) <= 1e-15

def test_split_thermal_closed_form_at_zero_variance_is_vacuum():
    for alpha, beta in [(0.3, -0.2j), (0.5 + 0.5j, 0.1)]:
        vacuum_value = 4 / np.pi ** 2 * np.exp(-2 * (abs(alpha) ** 2 + abs(beta) ** 2))
        assert abs(analytic_wigner_split_thermal(0.0, alpha, beta) - vacuum_value) <= 1e-15
        assert abs(published_wigner_split_thermal(0.0, alpha, beta) - vacuum_value) <= 1e-15

def test_published_split_thermal_form_disagrees_with_the_state():
    R = split_thermal(0.5, 25)
    assert abs(wigner_point(R, 0, 0) - analytic_wigner_split_thermal(0.5, 0, 0)) <= 1e-6
    assert abs(wigner_point(R, 0, 0) - published_wigner_split_thermal(0.5, 0, 0)) > 1e-2

def test_correlated_fock_closed_form_ignores_phases():
    reference = analytic_wigner_correlated_fock(0.4, 0.5, 0.3)
    for theta, phi in [(0.4, 1.1), (np.pi, -2.0)]:
        rotated = analytic_wigner_correlated_fock(0.4, 0.5 * np.exp(1j * theta), 0.3 * np.exp(1j * phi))
        assert abs(rotated - reference) <= 1e-15

def test_correlated_fock_closed_form_survives_large_arguments():
    value = analytic_wigner_correlated_fock(0.95, 20.0, 20.0)
    assert np.isfinite(value) and value >= 0

@mark.parametrize("function", [analytic_wigner_twin_beam, analytic_wigner_correlated_fock])
def test_closed_forms_reject_lambda_outside_unit_interval(function):
    with raises(ParameterError):
        function(1.0, 0, 0)

###################################################################################################

@mark.parametrize("sigma2,alpha,gamma", [(1.0, 0, 0), (0.5, 0.3 + 0.2j, -0.1j), (2.0, 0.5, 0.5)])
def test_gaussian_integral_identity(sigma2, alpha, gamma):
    assert gaussian_integral_identity_check(sigma2, alpha, gamma) <= 1e-10

def test_gaussian_integral_identity_random_draws():
    for _ in range(10):
        sigma2 = rng.uniform(0.1, 2.0)
        alpha = complex(*rng.uniform(-0.7, 0.7, 2))
        gamma = complex(*rng.uniform(-0.7, 0.7, 2))
        assert gaussian_integral_identity_check(sigma2, alpha, gamma) <= 1e-10

def test_gaussian_integral_identity_rejects_short_extent():
    with raises(GridBoundsError):
        gaussian_integral_identity_check(1.0, 0.1, 0.1, extent=5.0)

def test_gaussian_integral_identity_rejects_coarse_lattice():
    with raises(GridBoundsError):
        gaussian_integral_identity_check(1.0, 0.1, 0.1, extent=8.0, points=20)

def test_gaussian_integral_identity_rejects_non_positive_variance():
    with raises(ParameterError) as e:
        gaussian_integral_identity_check(0.0, 0.1, 0.1)
    assert e.value.field() == "sigma2"
