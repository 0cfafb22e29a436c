from math import factorial
import numpy as np
from pytest import mark, raises
from statetester import AbstractStateTester
from cvfaithful import ParameterError, twin_beam, split_thermal, correlated_fock, product_state, vacuum, thermal, \
    coherent, moments_of, photon_number
from cvfaithful.states import default_dim, phase_rotate
from cvfaithful.fockcore import number_operator, identity, tensor

def vacuum_projector(d):
    expected = np.zeros((d * d, d * d))
    expected[0, 0] = 1.0
    return expected

###################################################################################################

class TestTwinBeam(AbstractStateTester):

    def instanciate_new_state(self, *args, **kwargs):
        return twin_beam(0.5, 20)


class TestSplitThermal(AbstractStateTester):

    def instanciate_new_state(self, *args, **kwargs):
        return split_thermal(0.5, 25)


class TestCorrelatedFock(AbstractStateTester):

    def instanciate_new_state(self, *args, **kwargs):
        return correlated_fock(0.4, 30)


class TestProductState(AbstractStateTester):

    def instanciate_new_state(self, *args, **kwargs):
        return product_state(thermal(1.0, 40), coherent(0.3 + 0.2j, 40))

###################################################################################################

def test_twin_beam_at_zero_is_vacuum():
    assert np.array_equal(twin_beam(0.0, 4).entries, vacuum_projector(4))

def test_twin_beam_trace_and_photon_number():
    R = twin_beam(0.5, 20)
    assert abs(R.trace() - 0.75 * sum(0.25 ** n for n in range(20))) <= 1e-15
    assert abs(photon_number(R) - 2 / 3) <= 1e-9

@mark.parametrize("lmbda", [0.2, 0.5, 0.8])
@mark.parametrize("d", [4, 10, 25])
def test_twin_beam_deficit_is_the_geometric_tail(lmbda, d):
    R = twin_beam(lmbda, d)
    assert abs(R.nominal_trace_deficit - lmbda ** (2 * d)) <= 1e-15
    assert abs(1 - R.trace() - lmbda ** (2 * d)) <= 1e-12

def test_twin_beam_moments():
    moments = moments_of(twin_beam(0.5, 20))
    assert abs(moments.ab - 2 / 3) <= 1e-9
    assert abs(moments.adag_bdag - 2 / 3) <= 1e-9
    assert abs(moments.adag_b) <= 1e-15
    assert abs(moments.mean_a) <= 1e-15 and abs(moments.mean_b) <= 1e-15

@mark.parametrize("lmbda", [-0.1, 1.0, 1.5, float("nan")])
def test_twin_beam_rejects_lambda_outside_unit_interval(lmbda):
    with raises(ParameterError) as e:
        twin_beam(lmbda, 4)
    assert e.value.field() == "lambda"

def test_twin_beam_default_truncation():
    assert default_dim("twinbeam", 0.5) == 17
    assert twin_beam(0.5).nominal_trace_deficit < 1e-10

###################################################################################################

def test_split_thermal_at_zero_is_vacuum():
    assert np.array_equal(split_thermal(0.0, 5).entries, vacuum_projector(5))

def test_split_thermal_moments():
    moments = moments_of(split_thermal(0.5, 25))
    assert abs(moments.adag_b - 0.5) <= 1e-8
    assert abs(moments.a_bdag - 0.5) <= 1e-8
    assert abs(moments.ab) <= 1e-10
    assert abs(moments.adag_bdag) <= 1e-10

def test_split_thermal_photon_number_is_twice_the_variance():
    assert abs(photon_number(split_thermal(0.5, 25)) - 1.0) <= 1e-8

def test_split_thermal_matches_closed_form_entries():
    sigma2, d = 0.7, 5
    kappa = 1 / sigma2 + 2
    expected = np.zeros((d * d, d * d))
    for n in range(d):
        for m in range(d):
            for p in range(d):
                for q in range(d):
                    if n + m == p + q:
                        N = n + m
                        expected[n * d + m, p * d + q] = factorial(N) / (kappa ** N * (1 + 2 * sigma2)) \
                            / np.sqrt(factorial(n) * factorial(m) * factorial(p) * factorial(q))
    assert np.max(np.abs(split_thermal(sigma2, d).entries - expected)) <= 1e-13

def test_split_thermal_quadrature_is_exact_once_resolved():
    coarse = split_thermal(0.5, 6, quad_points=11)
    fine = split_thermal(0.5, 6, quad_points=40)
    assert np.max(np.abs(coarse.entries - fine.entries)) <= 1e-13

def test_split_thermal_rejects_too_few_quadrature_nodes():
    with raises(ParameterError) as e:
        split_thermal(0.5, 10, quad_points=10)
    assert e.value.field() == "quad_points"

def test_split_thermal_rejects_negative_variance():
    with raises(ParameterError) as e:
        split_thermal(-0.1, 5)
    assert e.value.field() == "sigma2"

@mark.parametrize("theta", [0.37, np.pi / 3, 2.0])
def test_split_thermal_is_phase_invariant(theta):
    R = split_thermal(0.5, 12)
    assert np.max(np.abs(phase_rotate(R, theta).entries - R.entries)) <= 1e-12

###################################################################################################

def test_correlated_fock_at_zero_is_vacuum():
    assert np.array_equal(correlated_fock(0.0, 4).entries, vacuum_projector(4))

def test_correlated_fock_is_diagonal():
    entries = correlated_fock(0.4, 30).entries
    assert np.count_nonzero(entries - np.diag(np.diag(entries))) == 0

def test_correlated_fock_commutes_with_photon_number_difference():
    R = correlated_fock(0.4, 10).entries
    n, one = number_operator(10), identity(10)
    difference = tensor(n, one).entries - tensor(one, n).entries
    assert np.array_equal(R @ difference, difference @ R)

def test_correlated_fock_cross_correlations_vanish():
    moments = moments_of(correlated_fock(0.4, 30))
    assert moments.ab == 0 and moments.adag_bdag == 0
    assert moments.adag_b == 0 and moments.a_bdag == 0

###################################################################################################

def test_product_of_vacua():
    R = product_state(vacuum(3), vacuum(3))
    assert np.array_equal(R.entries, vacuum_projector(3))
    moments = moments_of(R)
    assert all(getattr(moments, name) == 0 for name in ("ab", "adag_b", "adag_a", "bdag_b", "a2", "b2"))

def test_product_of_coherent_states_has_no_centered_cross_moments():
    moments = moments_of(product_state(coherent(0.4, 30), coherent(-0.2j, 30)))
    assert abs(moments.mean_a - 0.4) <= 1e-12
    assert abs(moments.mean_b + 0.2j) <= 1e-12
    assert abs(moments.ab) <= 1e-12 and abs(moments.adag_b) <= 1e-12

def test_product_dimension_mismatch():
    with raises(ParameterError) as e:
        product_state(vacuum(3), vacuum(4))
    assert e.value.field() == "dim"

def test_product_rejects_two_mode_factor():
    with raises(ParameterError):
        product_state(twin_beam(0.5, 3), vacuum(3))

###################################################################################################

def test_thermal_populations():
    rho = thermal(1.0, 40)
    assert abs(rho.entries[0, 0] - 0.5) <= 1e-15
    assert abs(rho.entries[3, 3] - 0.0625) <= 1e-15
    assert abs(photon_number(rho) - 1.0) <= 1e-9

def test_coherent_state_records_its_truncation_loss():
    rho = coherent(1.5, 4)
    amplitudes = [np.exp(-1.125) * 1.5 ** n / np.sqrt(factorial(n)) for n in range(4)]
    assert abs(rho.nominal_trace_deficit - (1 - sum(a * a for a in amplitudes))) <= 1e-14
    assert abs(rho.entries[1, 1] - amplitudes[1] ** 2) <= 1e-14

def test_moments_require_two_modes():
    with raises(ParameterError):
        moments_of(vacuum(3))
