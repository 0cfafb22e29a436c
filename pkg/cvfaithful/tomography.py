"""Channel reconstruction from (E (x) I) R, and how measurement noise propagates through it.

Noise of magnitude epsilon is a complex Gaussian direction rescaled to Frobenius norm
epsilon; all draws come from one numpy Generator in (epsilon, trial) order, so a seed
fixes every table bit for bit.
"""
import numpy as np
from pandas import DataFrame
from scipy.linalg import eigh

from .channel import Channel, ChoiMatrix, ReconstructionResult, channel_by_name
from .densityoperator import DensityOperator
from .faithfulerror import MemoryBudgetError, ParameterError
from .faithfulness import chi
from .fockoperator import BipartiteOperator
from .forwardmap import ForwardMap
from .gridworker import map_chunks
from .logs import log_detail, log_progress, log_warning
from .states import moments_of, twin_beam

DEFAULT_MAX_DIM = 6
DEFAULT_TOLERANCE = 1e-10
RELAXED_FACTOR = 10.0
STUDY_COLUMNS = ["lambda_or_sigma2", "d", "epsilon", "trial", "choi_error", "sigma_min", "chi"]


def _require_two_mode(R, operation):
    if R.modes != 2:
        raise ParameterError(operation, "state is not a two-mode state", field="R")


def apply_channel_first(R: DensityOperator, E: Channel) -> DensityOperator:
    """sum_k (K_k (x) I) R (K_k^dag (x) I)."""
    _require_two_mode(R, "apply_channel_first")
    if E.dim != R.dim:
        raise ParameterError("apply_channel_first", "channel dimension %d != state dimension %d" % (E.dim, R.dim), field="dim")
    d = R.dim
    tensor4 = R.carrier.as_tensor()
    output = sum(np.einsum("ab,bmcq,dc->amdq", K.entries, tensor4, K.entries.conj()) for K in E.kraus)
    entries = output.reshape(d * d, d * d)
    entries = 0.5 * (entries + entries.conj().T)
    deficit = 1.0 - float(np.trace(entries).real)
    spec = {"family": "channel-output", "channel": E.name, "input": R.spec, "dim": d}
    return DensityOperator(BipartiteOperator(entries, d), deficit, spec)


def choi_of(E: Channel) -> ChoiMatrix:
    d = E.dim
    entries = sum(np.outer(K.entries.reshape(-1), K.entries.reshape(-1).conj()) for K in E.kraus)
    return ChoiMatrix(BipartiteOperator(entries, d))


def forward_map(R: DensityOperator, d: int | None = None, max_dim: int = DEFAULT_MAX_DIM) -> ForwardMap:
    _require_two_mode(R, "forward_map")
    d = R.dim if d is None else int(d)
    if d != R.dim:
        raise ParameterError("forward_map", "requested dimension %d != state dimension %d" % (d, R.dim), field="dim")
    if d > max_dim:
        raise MemoryBudgetError("forward_map", "d = %d exceeds the budget d <= %d (%d x %d matrix)" % (d, max_dim, d ** 4, d ** 4))
    log_progress("forward_map: building %d x %d" % (d ** 4, d ** 4))
    delta = np.eye(d)
    matrix = np.einsum("np,NP,jmlM->nmNMpjPl", delta, delta, R.carrier.as_tensor()).reshape(d ** 4, d ** 4)
    return ForwardMap(matrix, d)


def _choi_checks(choi, tol):
    relaxed = RELAXED_FACTOR * tol * max(1.0, float(np.max(np.abs(choi.entries))))
    return choi.is_trace_preserving(tol=relaxed) and choi.is_positive(relaxed)


def reconstruct(R: DensityOperator, R_out: DensityOperator, tol: float = DEFAULT_TOLERANCE, positive: bool = False, fmap: ForwardMap | None = None) -> ReconstructionResult:
    """Least-squares Choi estimate from the channel output via the SVD of the forward map.

    recovered requires a full-rank forward map, a residual below tol and an estimate
    that is positive and trace preserving at ten times tol. positive=True projects the
    estimate onto the positive cone afterwards.
    """
    _require_two_mode(R_out, "reconstruct")
    if R_out.dim != R.dim:
        raise ParameterError("reconstruct", "output dimension %d != input dimension %d" % (R_out.dim, R.dim), field="dim")
    if not 0.0 < tol < 1.0:
        raise ParameterError("reconstruct", "tolerance %s outside (0, 1)" % tol, field="tol")
    fmap = fmap or forward_map(R)
    data = R_out.entries.reshape(-1)
    solution = fmap.solve(data, tol)
    residual = float(np.linalg.norm(fmap.matrix @ solution - data))
    d = R.dim
    choi = ChoiMatrix(BipartiteOperator(solution.reshape(d * d, d * d), d))
    rank = fmap.rank(tol)
    full_rank = rank == fmap.size
    recovered = full_rank and residual <= tol * max(1.0, float(np.linalg.norm(data))) and _choi_checks(choi, tol)
    if not full_rank:
        log_warning("reconstruct: forward map has rank %d of %d, the channel is not determined" % (rank, fmap.size))
    if positive:
        choi = project_positive(choi)
    log_detail("reconstruct: rank %d, residual %.3g, recovered %s" % (rank, residual, recovered))
    return ReconstructionResult(choi, residual, recovered, rank, fmap.sigma_min())


def project_positive(choi: ChoiMatrix) -> ChoiMatrix:
    """Nearest positive semidefinite matrix in Frobenius norm (negative eigenvalues clipped)."""
    hermitian = 0.5 * (choi.entries + choi.entries.conj().T)
    values, vectors = eigh(hermitian)
    clipped = (vectors * np.clip(values, 0.0, None)) @ vectors.conj().T
    return ChoiMatrix(BipartiteOperator(clipped, choi.dim))


def _family_parameter(R):
    spec = R.spec or {}
    for key in ("lambda", "sigma2"):
        if key in spec:
            return spec[key]
    return float("nan")


def noise_amplification_study(R: DensityOperator, E: Channel, epsilons, trials: int, seed: int = 0, tol: float = DEFAULT_TOLERANCE, fmap: ForwardMap | None = None) -> DataFrame:
    """Choi error of reconstructions from noisy outputs, one row per (epsilon, trial)."""
    if int(trials) != trials or trials < 1:
        raise ParameterError("noise_amplification_study", "%s trials" % trials, field="trials")
    trials = int(trials)
    fmap = fmap or forward_map(R)
    if not fmap.full_rank(tol):
        log_warning("noise_amplification_study: state is not faithful at tolerance %g" % tol)
    truth = choi_of(E).entries.reshape(-1)
    data = apply_channel_first(R, E).entries.reshape(-1)
    chi_value = chi(moments_of(R))
    rng = np.random.default_rng(seed)
    log_progress("noise_amplification_study: %d noise levels x %d trials" % (len(epsilons), trials))

    rows = []
    for epsilon in epsilons:
        epsilon = float(epsilon)
        noise = rng.standard_normal((trials, data.size)) + 1j * rng.standard_normal((trials, data.size))
        noise *= epsilon / np.linalg.norm(noise, axis=1)[:, None]
        estimates = fmap.solve((data[None, :] + noise).T, tol)
        errors = np.linalg.norm(estimates - truth[:, None], axis=0)
        for trial, error in enumerate(errors):
            rows.append((_family_parameter(R), R.dim, epsilon, trial, float(error), fmap.sigma_min(), chi_value))
    return DataFrame(rows, columns=STUDY_COLUMNS)


def correlation_sweep(lambdas, channel: str = "phase", epsilon: float = 1e-6, trials: int = 100, d: int = 3, seed: int = 0, channel_param: float | None = None, threads: int | None = None) -> DataFrame:
    """Mean and 99th-percentile Choi error of twin-beam inputs as the correlation lambda grows."""
    E = channel_by_name(channel, d, channel_param, seed)

    def run(lmbda):
        R = twin_beam(lmbda, d)
        table = noise_amplification_study(R, E, [epsilon], trials, seed)
        sigma_min = float(table["sigma_min"].iloc[0])
        return {
            "lambda": float(lmbda),
            "d": d,
            "epsilon": epsilon,
            "mean_error": float(table["choi_error"].mean()),
            "p99_error": float(table["choi_error"].quantile(0.99)),
            "bound": epsilon / sigma_min if sigma_min > 0 else float("inf"),
            "sigma_min": sigma_min,
            "chi": float(table["chi"].iloc[0]),
        }

    return DataFrame(map_chunks(run, list(lambdas), threads))


def summarize(table: DataFrame) -> dict:
    """Per-epsilon error statistics, the least-squares slope of error against epsilon and the 1/sigma_min bound."""
    if table.empty:
        raise ParameterError("summarize", "empty study table", field="table")
    sigma_min = float(table["sigma_min"].iloc[0])
    epsilons = table["epsilon"].to_numpy()
    errors = table["choi_error"].to_numpy()
    denominator = float(np.sum(epsilons ** 2))
    per_epsilon = []
    for epsilon, group in table.groupby("epsilon", sort=True):
        per_epsilon.append({
            "epsilon": float(epsilon),
            "mean_error": float(group["choi_error"].mean()),
            "p99_error": float(group["choi_error"].quantile(0.99)),
            "max_error": float(group["choi_error"].max()),
        })
    return {
        "d": int(table["d"].iloc[0]),
        "trials": int(table["trial"].max()) + 1,
        "slope": float(np.sum(errors * epsilons) / denominator) if denominator > 0 else None,
        "inverse_sigma_min": 1.0 / sigma_min if sigma_min > 0 else None,
        "sigma_min": sigma_min,
        "chi": float(table["chi"].iloc[0]),
        "per_epsilon": per_epsilon,
    }
