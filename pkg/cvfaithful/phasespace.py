"""Wigner and characteristic functions of truncated states, pointwise and on grids.

W(alpha, beta) = (4/pi^2) Tr[R (D(2 alpha) P) (x) (D(2 beta) P)] with P the parity, and
Gamma(alpha, beta) = Tr[R D(alpha) (x) D(beta)]. Grid evaluations build one stack of
single-mode matrices per plane and contract it with the state tensor, so each grid
costs two tensor contractions instead of one trace per point.
"""
import json

import numpy as np
from pandas import DataFrame

from .container import atomic_write
from .densityoperator import DensityOperator
from .faithfulerror import GridBoundsError, ParameterError
from .fockcore import displacement_entries
from .fockoperator import BipartiteOperator
from .gridworker import map_chunks, thread_count
from .logs import log_detail, log_progress, log_warning
from .phasespacegrid import PhaseSpaceGrid

WIGNER_PREFACTOR = 4.0 / np.pi ** 2
REALITY_TOLERANCE = 1e-10
CSV_COLUMNS = ["alpha_re", "alpha_im", "beta_re", "beta_im", "value_re", "value_im"]


def _check_point(z, operation, field):
    z = complex(z)
    if not np.isfinite(z):
        raise ParameterError(operation, "non-finite %s = %s" % (field, z), field=field)
    return z


def _require_bipartite(R, operation):
    if R.modes != 2:
        raise ParameterError(operation, "state is not a two-mode state", field="R")


def _warn_radius(points, d, operation):
    radius = float(np.max(np.abs(points)))
    if radius > np.sqrt(d) / 2:
        log_warning("%s: |amplitude| up to %.3g exceeds the reliable radius %.3g for d = %d" % (operation, radius, np.sqrt(d) / 2, d))


def _single_mode_matrix(z, d, kind):
    if kind == "wigner":
        return displacement_entries(2 * z, d) * ((-1.0) ** np.arange(d))[None, :]
    return displacement_entries(z, d)


def _matrix_stack(points, d, kind, threads):
    chunks = [chunk for chunk in np.array_split(points, thread_count(threads) * 4) if chunk.size]
    blocks = map_chunks(lambda chunk: np.stack([_single_mode_matrix(z, d, kind) for z in chunk]), chunks, threads)
    return np.concatenate(blocks)


def _contract_point(R, first, second):
    return complex(np.einsum("ijkl,ki,lj->", R.carrier.as_tensor(), first, second))


def wigner_point(R: DensityOperator, alpha: complex, beta: complex) -> float:
    _require_bipartite(R, "wigner_point")
    alpha = _check_point(alpha, "wigner_point", "alpha")
    beta = _check_point(beta, "wigner_point", "beta")
    _warn_radius([alpha, beta], R.dim, "wigner_point")
    value = WIGNER_PREFACTOR * _contract_point(R, _single_mode_matrix(alpha, R.dim, "wigner"), _single_mode_matrix(beta, R.dim, "wigner"))
    if abs(value.imag) > REALITY_TOLERANCE:
        log_warning("wigner_point: imaginary residue %.3g at (%s, %s)" % (value.imag, alpha, beta))
    log_detail("wigner_point(%s, %s) = %.12g (imaginary residue %.3g)" % (alpha, beta, value.real, value.imag))
    return value.real


def characteristic_point(R: DensityOperator, alpha: complex, beta: complex) -> complex:
    _require_bipartite(R, "characteristic_point")
    alpha = _check_point(alpha, "characteristic_point", "alpha")
    beta = _check_point(beta, "characteristic_point", "beta")
    _warn_radius([alpha, beta], R.dim, "characteristic_point")
    return _contract_point(R, displacement_entries(alpha, R.dim), displacement_entries(beta, R.dim))


def single_mode_wigner(rho: DensityOperator, alpha: complex) -> float:
    """(2/pi) Tr[rho D(2 alpha) P] for a single-mode state."""
    if rho.modes != 1:
        raise ParameterError("single_mode_wigner", "state is not a single-mode state", field="rho")
    alpha = _check_point(alpha, "single_mode_wigner", "alpha")
    value = 2.0 / np.pi * np.sum(rho.entries * _single_mode_matrix(alpha, rho.dim, "wigner").T)
    return float(value.real)


def plane(extent: float, points: int):
    """Midpoint lattice over the square |Re z|, |Im z| <= extent.

    Returns the points*points cell centres (real part major) and the cell area.
    """
    if not (np.isfinite(extent) and extent > 0):
        raise ParameterError("plane", "extent %s is not positive" % extent, field="extent")
    if int(points) != points or points < 1:
        raise ParameterError("plane", "%s points per axis" % points, field="points")
    points = int(points)
    spacing = 2.0 * extent / points
    axis = -extent + spacing * (np.arange(points) + 0.5)
    samples = (axis[:, None] + 1j * axis[None, :]).reshape(-1)
    return samples, spacing ** 2


def _grid(R, alphas, betas, kind, alpha_area, beta_area, threads):
    operation = "%s_grid" % kind
    _require_bipartite(R, operation)
    alphas = np.array(alphas, dtype=complex).reshape(-1)
    betas = np.array(betas, dtype=complex).reshape(-1)
    for field, points in (("alphas", alphas), ("betas", betas)):
        if points.size == 0:
            raise ParameterError(operation, "empty list of %s" % field, field=field)
        if not np.all(np.isfinite(points)):
            raise ParameterError(operation, "non-finite %s" % field, field=field)
    d = R.dim
    _warn_radius(np.concatenate([alphas, betas]), d, operation)
    log_progress("%s: %d x %d points at d = %d" % (operation, alphas.size, betas.size, d))

    tensor4 = R.carrier.as_tensor()
    second = _matrix_stack(betas, d, kind, threads).transpose(0, 2, 1).reshape(betas.size, d * d)

    def rows(chunk):
        first = np.stack([_single_mode_matrix(z, d, kind) for z in chunk])
        partial = np.tensordot(first, tensor4, axes=([1, 2], [2, 0])).reshape(chunk.size, d * d)
        return partial @ second.T

    chunks = [chunk for chunk in np.array_split(alphas, thread_count(threads) * 4) if chunk.size]
    values = np.concatenate(map_chunks(rows, chunks, threads))
    if kind == "wigner":
        values = WIGNER_PREFACTOR * values
        residue = float(np.max(np.abs(values.imag)))
        log_detail("%s: max imaginary residue %.3g" % (operation, residue))
        if residue > REALITY_TOLERANCE:
            log_warning("%s: imaginary residue %.3g above %.0e" % (operation, residue, REALITY_TOLERANCE))
    return PhaseSpaceGrid(alphas, betas, values, kind, alpha_area, beta_area)


def wigner_grid(R: DensityOperator, alphas, betas, alpha_area: float | None = None, beta_area: float | None = None, threads: int | None = None) -> PhaseSpaceGrid:
    return _grid(R, alphas, betas, "wigner", alpha_area, beta_area, threads)


def characteristic_grid(R: DensityOperator, alphas, betas, alpha_area: float | None = None, beta_area: float | None = None, threads: int | None = None) -> PhaseSpaceGrid:
    return _grid(R, alphas, betas, "characteristic", alpha_area, beta_area, threads)


def integrate(grid: PhaseSpaceGrid) -> complex:
    """Midpoint quadrature of the sampled function over both planes."""
    return complex(np.sum(grid.values) * grid.cell_area())


def purity_integral(grid: PhaseSpaceGrid) -> float:
    """Midpoint quadrature of W^2; equals Tr[R^2] / pi^2 for a Wigner grid."""
    if grid.kind != "wigner":
        raise ParameterError("purity_integral", "grid of kind '%s' is not a Wigner grid" % grid.kind, field="kind")
    return float(np.sum(grid.values.real ** 2) * grid.cell_area())


def _lattice_geometry(points, area):
    spacing = np.sqrt(area)
    halfwidth = float(np.max(np.maximum(np.abs(points.real), np.abs(points.imag))))
    return spacing, halfwidth


def sampling_bounds(grid: PhaseSpaceGrid, d: int):
    """Violated sampling conditions for reconstructing a truncation-d state, empty when none.

    Each plane needs spacing <= pi / (4 halfwidth) and halfwidth >= sqrt(d), halfwidth
    being the largest sampled coordinate.
    """
    violations = []
    for name, points, area in (("alpha", grid.alphas, grid.alpha_area), ("beta", grid.betas, grid.beta_area)):
        if area is None:
            violations.append("%s plane has no cell area" % name)
            continue
        spacing, halfwidth = _lattice_geometry(points, area)
        if halfwidth < np.sqrt(d):
            violations.append("%s halfwidth %.4g < sqrt(%d) = %.4g" % (name, halfwidth, d, np.sqrt(d)))
        elif spacing > np.pi / (4 * halfwidth):
            violations.append("%s spacing %.4g > pi/(4 * %.4g) = %.4g" % (name, spacing, halfwidth, np.pi / (4 * halfwidth)))
    return violations


def state_from_wigner(grid: PhaseSpaceGrid, d: int, threads: int | None = None) -> DensityOperator:
    """R = 4 int int W(alpha, beta) D(2 alpha) P (x) D(2 beta) P by midpoint quadrature.

    The lost quadrature mass is recorded as the trace deficit; a zero grid yields the
    zero operator.
    """
    if grid.kind != "wigner":
        raise ParameterError("state_from_wigner", "grid of kind '%s' is not a Wigner grid" % grid.kind, field="kind")
    violations = sampling_bounds(grid, d)
    if violations:
        raise GridBoundsError("state_from_wigner", "; ".join(violations))
    log_progress("state_from_wigner: %d x %d points -> d = %d" % (grid.alphas.size, grid.betas.size, d))

    first = _matrix_stack(grid.alphas, d, "wigner", threads)
    second = _matrix_stack(grid.betas, d, "wigner", threads)
    weighted = (grid.values.real @ second.reshape(grid.betas.size, d * d)).reshape(grid.alphas.size, d, d)
    tensor4 = 4.0 * grid.cell_area() * np.tensordot(first, weighted, axes=(0, 0)).transpose(0, 2, 1, 3)
    entries = tensor4.reshape(d * d, d * d)
    entries = 0.5 * (entries + entries.conj().T)
    deficit = 1.0 - float(np.trace(entries).real)
    return DensityOperator(BipartiteOperator(entries, d), deficit, {"family": "reconstructed", "dim": d})


def characteristic_from_wigner(grid: PhaseSpaceGrid, xis, etas) -> PhaseSpaceGrid:
    """Gamma(xi, eta) = int int W(alpha, beta) exp(xi alpha* - xi* alpha) exp(eta beta* - eta* beta)."""
    if grid.kind != "wigner":
        raise ParameterError("characteristic_from_wigner", "grid of kind '%s' is not a Wigner grid" % grid.kind, field="kind")
    xis = np.array(xis, dtype=complex).reshape(-1)
    etas = np.array(etas, dtype=complex).reshape(-1)
    kernel_a = np.exp(np.outer(xis, grid.alphas.conj()) - np.outer(xis.conj(), grid.alphas))
    kernel_b = np.exp(np.outer(etas, grid.betas.conj()) - np.outer(etas.conj(), grid.betas))
    values = kernel_a @ grid.values @ kernel_b.T * grid.cell_area()
    return PhaseSpaceGrid(xis, etas, values, "characteristic")


def grid_to_frame(grid: PhaseSpaceGrid, analytic=None) -> DataFrame:
    """One row per (alpha, beta) pair; analytic, a callable f(alpha, beta), adds an 'analytic' column."""
    alphas = np.repeat(grid.alphas, grid.betas.size)
    betas = np.tile(grid.betas, grid.alphas.size)
    values = grid.values.reshape(-1)
    frame = DataFrame({
        "alpha_re": alphas.real,
        "alpha_im": alphas.imag,
        "beta_re": betas.real,
        "beta_im": betas.imag,
        "value_re": values.real,
        "value_im": values.imag,
    }, columns=CSV_COLUMNS)
    if analytic is not None:
        frame["analytic"] = [analytic(alpha, beta) for alpha, beta in zip(alphas, betas)]
    return frame


def write_grid_csv(target, grid: PhaseSpaceGrid, analytic=None):
    atomic_write(target, grid_to_frame(grid, analytic).to_csv(index=False, float_format="%.17g"))


def write_grid_json(target, grid: PhaseSpaceGrid):
    atomic_write(target, json.dumps(grid.to_dict()))
