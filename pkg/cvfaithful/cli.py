"""cvfaithful command line.

    cvfaithful state  SPEC --out state.json
    cvfaithful wigner STATE --grid-extent 1 --grid-points 5 --out wigner.csv
    cvfaithful char   STATE --grid-points 1
    cvfaithful check  STATE --tol 1e-10 [--sweep 3,4,5]
    cvfaithful chi    STATE [--method gaussian]
    cvfaithful tomo   STATE --channel phase --epsilons 0,1e-6 --trials 100 --seed 1 --out study
    cvfaithful sweep  --lambdas 0.2,0.5,0.8 --channel phase --epsilon 1e-6 --out sweep.csv

STATE is a state specification (URI or JSON) or the path of a saved state. Exit
codes: 0 success, 1 usage or parameter error, 2 numerical failure.
"""
import json
from argparse import ArgumentParser, ArgumentTypeError
from logging import getLevelName
from os import path
import sys

import numpy as np
from termcolor import colored

from . import __version__
from .analytic import analytic_wigner_correlated_fock, analytic_wigner_split_thermal, analytic_wigner_twin_beam
from .channel import channel_by_name
from .container import atomic_write, to_document
from .faithfulerror import FaithfulError, NumericalError, ParameterError
from .faithfulness import ab_coefficients, assess, chi, chi_quadrature, gaussian_faithful, sweep_dims
from .logs import log_progress, set_log_level
from .parsedspec import ParsedSpec
from .phasespace import characteristic_grid, grid_to_frame, plane, wigner_grid
from .runconfig import RunConfig
from .state import State, save_state
from .states import moments_of
from .tomography import apply_channel_first, choi_of, correlation_sweep, forward_map, noise_amplification_study, reconstruct, summarize

TOMO_DEFAULT_DIM = 3


class _ArgumentParser(ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParameterError("cvfaithful", message, field="arguments")


def _float_list(text):
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ArgumentTypeError("'%s' is not a comma-separated list of numbers" % text)


def _int_list(text):
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise ArgumentTypeError("'%s' is not a comma-separated list of integers" % text)


def _log_level(text):
    level = getLevelName(text.upper())
    if not isinstance(level, int):
        raise ArgumentTypeError("unknown log level '%s'" % text)
    return level


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, help="truncation per mode")
    common.add_argument("--tol", type=float, help="relative rank tolerance (default 1e-10)")
    common.add_argument("--grid-extent", type=float, help="half width of each phase-space plane (default 1)")
    common.add_argument("--grid-points", type=int, help="points per real axis of each plane (default 9)")
    common.add_argument("--seed", type=int, help="noise seed (default 0)")
    common.add_argument("--out", help="output file, or output prefix for tomo")
    common.add_argument("--threads", type=int, help="worker threads (default $CVFAITHFUL_THREADS or 1)")
    common.add_argument("--log-level", type=_log_level, help="DEBUG, INFO, WARNING or CRITICAL (default)")

    parser = _ArgumentParser(prog="cvfaithful", description="Tomographic faithfulness of two-mode continuous-variable states.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command", required=True)

    state = commands.add_parser("state", parents=[common], help="build a state and save it")
    state.add_argument("state_spec", metavar="SPEC")

    for name, text in (("wigner", "sample the Wigner function"), ("char", "sample the characteristic function")):
        grid = commands.add_parser(name, parents=[common], help=text)
        grid.add_argument("state_spec", metavar="STATE")

    check = commands.add_parser("check", parents=[common], help="classify faithfulness from the check operator")
    check.add_argument("state_spec", metavar="STATE")
    check.add_argument("--sweep", type=_int_list, help="comma-separated truncations to sweep")

    chi_parser = commands.add_parser("chi", parents=[common], help="Gaussian correlation criterion")
    chi_parser.add_argument("state_spec", metavar="STATE")
    chi_parser.add_argument("--method", choices=("svd", "gaussian"))
    chi_parser.add_argument("--step", type=float, help="finite-difference step (default 1e-3)")

    tomo = commands.add_parser("tomo", parents=[common], help="reconstruct a channel and study noise amplification")
    tomo.add_argument("state_spec", metavar="STATE")
    tomo.add_argument("--channel", help="identity, phase, dephasing, attenuation or unitary")
    tomo.add_argument("--channel-param", type=float, help="phase angle or transmissivity")
    tomo.add_argument("--epsilons", type=_float_list, help="comma-separated noise magnitudes")
    tomo.add_argument("--trials", type=int)

    sweep = commands.add_parser("sweep", parents=[common], help="twin-beam noise study across lambda")
    sweep.add_argument("--lambdas", type=_float_list)
    sweep.add_argument("--channel")
    sweep.add_argument("--channel-param", type=float)
    sweep.add_argument("--epsilon", type=float)
    sweep.add_argument("--trials", type=int)
    return parser


def _emit(target, text):
    if target:
        atomic_write(target, text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parsed_state(config, default_dim=None):
    if path.isfile(config.state_spec):
        if config.dim is not None:
            raise ParameterError("cvfaithful", "--dim cannot change the truncation of a saved state", field="dim")
        return ParsedSpec(family="file", path=config.state_spec)
    parsed = ParsedSpec(config.state_spec, **({"dim": config.dim} if config.dim is not None else {}))
    if parsed.dim is None and default_dim is not None:
        parsed.dim = default_dim
    return parsed


def _analytic_for(R):
    spec = R.spec or {}
    family = spec.get("family")
    if family == "twinbeam":
        return lambda alpha, beta: analytic_wigner_twin_beam(spec["lambda"], alpha, beta)
    elif family == "splitthermal":
        return lambda alpha, beta: analytic_wigner_split_thermal(spec["sigma2"], alpha, beta)
    elif family == "correlatedfock":
        return lambda alpha, beta: analytic_wigner_correlated_fock(spec["lambda"], alpha, beta)
    return None


def cmd_state(config):
    R = State(_parsed_state(config))
    if config.out:
        save_state(config.out, R)
    else:
        _emit(None, json.dumps(to_document(R.carrier, trace_deficit=R.nominal_trace_deficit, spec=R.spec)))
    log_progress("state: %r" % R)


def cmd_grid(config):
    R = State(_parsed_state(config))
    points, area = plane(config.grid_extent, config.grid_points)
    if config.command == "wigner":
        grid = wigner_grid(R, points, points, area, area, config.threads)
        analytic = _analytic_for(R)
    else:
        grid = characteristic_grid(R, points, points, area, area, config.threads)
        analytic = None
    _emit(config.out, grid_to_frame(grid, analytic).to_csv(index=False, float_format="%.17g"))


def _spec_without_dim(spec):
    return {key: value for key, value in spec.items() if key not in ("dim", "quad_points")}


def cmd_check(config):
    R = State(_parsed_state(config))
    if config.sweep:
        if not R.spec or R.spec.get("family") not in ("twinbeam", "splitthermal", "correlatedfock", "product"):
            raise ParameterError("cvfaithful", "--sweep needs a state family, not a stored matrix", field="sweep")
        reports = sweep_dims(_spec_without_dim(R.spec), config.sweep, config.tol, config.threads)
        _emit(config.out, json.dumps([report.to_dict() for report in reports]))
    else:
        _emit(config.out, json.dumps(assess(R, config.tol).to_dict()))


def cmd_chi(config):
    R = State(_parsed_state(config))
    moments = moments_of(R)
    quadrature = chi_quadrature(moments)
    result = {"chi": chi(moments), "chi_quadrature": quadrature.real, "moments": moments.to_dict()}
    if config.method == "gaussian":
        coeffs = ab_coefficients(R, config.step)
        result.update({
            "A": [coeffs.A.real, coeffs.A.imag],
            "B": [coeffs.B.real, coeffs.B.imag],
            "discriminant": coeffs.discriminant(),
            "gaussian_faithful": gaussian_faithful(coeffs, config.tol),
        })
    _emit(config.out, json.dumps(result))


def cmd_tomo(config):
    R = State(_parsed_state(config, TOMO_DEFAULT_DIM))
    E = channel_by_name(config.channel, R.dim, config.channel_param, config.seed)
    fmap = forward_map(R)
    result = reconstruct(R, apply_channel_first(R, E), config.tol, fmap=fmap)
    table = noise_amplification_study(R, E, config.epsilons, config.trials, config.seed, config.tol, fmap)
    summary = summarize(table)
    summary.update(result.to_dict())
    summary["channel"] = E.name
    summary["max_entry_error"] = float(np.max(np.abs(result.choi_estimate.entries - choi_of(E).entries)))
    csv_text = table.to_csv(index=False, float_format="%.17g")
    if config.out:
        atomic_write(config.out + ".csv", csv_text)
        atomic_write(config.out + ".json", json.dumps(summary))
    else:
        _emit(None, json.dumps(summary))


def cmd_sweep(config):
    dim = config.dim or TOMO_DEFAULT_DIM
    table = correlation_sweep(config.lambdas, config.channel, config.epsilon, config.trials, dim, config.seed, config.channel_param, config.threads)
    _emit(config.out, table.to_csv(index=False, float_format="%.17g"))


COMMANDS = {
    "state": cmd_state,
    "wigner": cmd_grid,
    "char": cmd_grid,
    "check": cmd_check,
    "chi": cmd_chi,
    "tomo": cmd_tomo,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    try:
        config = RunConfig.from_arguments(build_parser().parse_args(argv))
        set_log_level(config.log_level)
        COMMANDS[config.command](config)
    except NumericalError as e:
        sys.stderr.write(colored("error: %s\n" % e, "red"))
        return 2
    except (FaithfulError, OSError) as e:
        sys.stderr.write(colored("error: %s\n" % e, "red"))
        return 1
    return 0
