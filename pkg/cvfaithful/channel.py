import numpy as np
from scipy.linalg import eigvalsh
from scipy.special import gammaln
from scipy.stats import unitary_group

from .faithfulerror import NumericalError, ParameterError
from .fockcore import _check_dim
from .fockoperator import FockOperator, BipartiteOperator

COMPLETENESS_TOLERANCE = 1e-8
POSITIVITY_TOLERANCE = 1e-10


def _window(d, window):
    return max(1, (d + 1) // 2) if window is None else int(window)


class Channel:
    """Kraus representation E(rho) = sum_k K_k rho K_k^dag on one truncated mode."""

    def __init__(self, kraus, name: str | None = None, window: int | None = None):
        self.kraus = [K if isinstance(K, FockOperator) else FockOperator(K) for K in kraus]
        if not self.kraus:
            raise ParameterError("Channel", "empty Kraus list", field="kraus")
        dims = set(K.dim for K in self.kraus)
        if len(dims) != 1:
            raise ParameterError("Channel", "Kraus operators of dimensions %s" % sorted(dims), field="dim")
        self.dim = dims.pop()
        self.name = name or "custom"
        defect = self.completeness_defect(window)
        if defect > COMPLETENESS_TOLERANCE:
            raise NumericalError("Channel", "sum K^dag K differs from I by %.3g on the interior window" % defect)

    def __repr__(self):
        return "%s(name=%s, dim=%d, kraus=%d)" % (self.__class__.__name__, self.name, self.dim, len(self.kraus))

    def completeness_defect(self, window: int | None = None) -> float:
        w = _window(self.dim, window)
        completeness = sum(K.entries.conj().T @ K.entries for K in self.kraus)
        return float(np.max(np.abs(completeness[:w, :w] - np.eye(w))))


class ChoiMatrix:
    """C = sum_k |K_k>><<K_k| (or an estimate of it), entry ((n, m), (p, q)) = sum_k K_k[n, m] K_k[p, q]*."""

    def __init__(self, carrier: BipartiteOperator):
        if not isinstance(carrier, BipartiteOperator):
            raise ParameterError("ChoiMatrix", "carrier %r is not a bipartite operator" % (carrier,), field="carrier")
        self.carrier = carrier
        self.dim = carrier.dim

    def __repr__(self):
        return "%s(dim=%d)" % (self.__class__.__name__, self.dim)

    @property
    def entries(self):
        return self.carrier.entries

    def partial_trace_first(self) -> np.ndarray:
        """Tr_1 C, equal to (sum_k K_k^dag K_k)^T."""
        return np.einsum("nmnq->mq", self.carrier.as_tensor())

    def is_trace_preserving(self, window: int | None = None, tol: float = COMPLETENESS_TOLERANCE) -> bool:
        w = self.dim if window is None else int(window)
        reduced = self.partial_trace_first()[:w, :w]
        return bool(np.max(np.abs(reduced - np.eye(w))) <= tol)

    def is_positive(self, tol: float = POSITIVITY_TOLERANCE) -> bool:
        entries = self.entries
        hermitian = 0.5 * (entries + entries.conj().T)
        if np.max(np.abs(entries - hermitian)) > tol * max(1.0, float(np.max(np.abs(entries)))):
            return False
        return bool(eigvalsh(hermitian, subset_by_index=[0, 0])[0] >= -tol)


class ReconstructionResult:

    def __init__(self, choi_estimate: ChoiMatrix, residual_norm: float, recovered: bool, rank: int, sigma_min: float):
        self.choi_estimate = choi_estimate
        self.residual_norm = float(residual_norm)
        self.recovered = bool(recovered)
        self.rank = int(rank)
        self.sigma_min = float(sigma_min)

    def __repr__(self):
        return "%s(recovered=%s, residual=%.3g, rank=%d)" % (self.__class__.__name__, self.recovered, self.residual_norm, self.rank)

    def to_dict(self):
        return {"recovered": self.recovered, "residual_norm": self.residual_norm, "rank": self.rank, "sigma_min": self.sigma_min}


def identity_channel(d: int) -> Channel:
    d = _check_dim(d, "identity_channel")
    return Channel([np.eye(d)], "identity")


def phase_rotation(theta: float, d: int) -> Channel:
    """exp(i theta a^dag a)."""
    d = _check_dim(d, "phase_rotation")
    return Channel([np.diag(np.exp(1j * float(theta) * np.arange(d)))], "phase")


def dephasing(d: int) -> Channel:
    """Full dephasing, K_n = |n><n|."""
    d = _check_dim(d, "dephasing")
    projectors = []
    for n in range(d):
        projector = np.zeros((d, d))
        projector[n, n] = 1.0
        projectors.append(projector)
    return Channel(projectors, "dephasing")


def attenuation(eta: float, d: int) -> Channel:
    """Beam-splitter loss of transmissivity eta.

    K_k = sum_{n>=k} sqrt(C(n, k)) eta^((n-k)/2) (1-eta)^(k/2) |n-k><n| for k < d; the
    ladder is trace preserving on the whole truncated space.
    """
    d = _check_dim(d, "attenuation")
    eta = float(eta)
    if not (np.isfinite(eta) and 0.0 <= eta <= 1.0):
        raise ParameterError("attenuation", "transmissivity %s outside [0, 1]" % eta, field="eta")
    kraus = []
    for k in range(d):
        K = np.zeros((d, d))
        for n in range(k, d):
            log_binomial = gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1)
            K[n - k, n] = np.exp(0.5 * log_binomial) * eta ** ((n - k) / 2) * (1 - eta) ** (k / 2)
        kraus.append(K)
    return Channel(kraus, "attenuation")


def random_unitary(d: int, seed: int | None = None) -> Channel:
    """Haar-random unitary channel."""
    d = _check_dim(d, "random_unitary")
    return Channel([unitary_group.rvs(d, random_state=np.random.default_rng(seed))], "unitary")


CHANNEL_NAMES = ("identity", "phase", "dephasing", "attenuation", "unitary")


def channel_by_name(name: str, d: int, param: float | None = None, seed: int | None = None) -> Channel:
    """identity | phase (theta, default 0.7) | dephasing | attenuation (eta, default 0.8) | unitary (seed)."""
    if name == "identity":
        return identity_channel(d)
    elif name == "phase":
        return phase_rotation(0.7 if param is None else param, d)
    elif name == "dephasing":
        return dephasing(d)
    elif name == "attenuation":
        return attenuation(0.8 if param is None else param, d)
    elif name == "unitary":
        return random_unitary(d, seed)
    raise ParameterError("channel_by_name", "unknown channel '%s' (expected one of %s)" % (name, ", ".join(CHANNEL_NAMES)), field="channel")
