"""Truncated Fock-space operator algebra.

Every function is pure: it builds a new immutable operator from its arguments.
Conventions: <n|a|n+1> = sqrt(n+1); composite index n*d + m with mode a major;
|A>> carries <n|A|m> at index n*d + m, so (A (x) B)|C>> = |A C B^T>>.
"""
import numpy as np
from scipy.special import eval_genlaguerre, gammaln

from .faithfulerror import ParameterError
from .fockoperator import FockOperator, BipartiteOperator, DoubleKet


def _check_dim(d, operation):
    if int(d) != d or d < 2:
        raise ParameterError(operation, "truncation %s below 2" % d, field="dim")
    return int(d)


def _check_same_dim(operation, *operators):
    dims = set(op.dim for op in operators)
    if len(dims) != 1:
        raise ParameterError(operation, "dimension mismatch %s" % sorted(dims), field="dim")
    return dims.pop()


def identity(d: int) -> FockOperator:
    d = _check_dim(d, "identity")
    return FockOperator(np.eye(d))


def annihilator(d: int) -> FockOperator:
    d = _check_dim(d, "annihilator")
    return FockOperator(np.diag(np.sqrt(np.arange(1, d)), k=1))


def creator(d: int) -> FockOperator:
    d = _check_dim(d, "creator")
    return FockOperator(np.diag(np.sqrt(np.arange(1, d)), k=-1))


def number_operator(d: int) -> FockOperator:
    d = _check_dim(d, "number_operator")
    return FockOperator(np.diag(np.arange(d, dtype=float)))


def parity(d: int) -> FockOperator:
    d = _check_dim(d, "parity")
    return FockOperator(np.diag((-1.0) ** np.arange(d)))


def power_operator(x: complex, d: int) -> FockOperator:
    """x^{a^dag a}, diagonal with entries x^n (0^0 = 1)."""
    d = _check_dim(d, "power_operator")
    return FockOperator(np.diag(complex(x) ** np.arange(d)))


def fock_projector(n: int, d: int) -> FockOperator:
    d = _check_dim(d, "fock_projector")
    if not 0 <= n < d:
        raise ParameterError("fock_projector", "level %d outside 0..%d" % (n, d - 1), field="n")
    projector = np.zeros((d, d))
    projector[n, n] = 1.0
    return FockOperator(projector)


def _check_amplitude(alpha, operation):
    alpha = complex(alpha)
    if not np.isfinite(alpha):
        raise ParameterError(operation, "non-finite amplitude %s" % alpha, field="alpha")
    return alpha


def displacement_entries(alpha: complex, d: int) -> np.ndarray:
    """Matrix <m|D(alpha)|n> from the closed-form Laguerre elements.

    For m >= n: sqrt(n!/m!) alpha^(m-n) exp(-|alpha|^2/2) L_n^(m-n)(|alpha|^2);
    for m < n the element is conj(<n|D(-alpha)|m>).
    """
    if alpha == 0:
        return np.eye(d, dtype=complex)
    x = abs(alpha) ** 2
    levels = np.arange(d)
    rows, cols = np.meshgrid(levels, levels, indexing="ij")
    low = np.minimum(rows, cols)
    offset = np.abs(rows - cols)
    magnitude = np.exp(0.5 * (gammaln(low + 1) - gammaln(low + offset + 1)) + offset * np.log(abs(alpha)) - x / 2)
    unit = alpha / abs(alpha)
    phase = np.where(rows >= cols, unit ** offset, (-np.conj(unit)) ** offset)
    return magnitude * phase * eval_genlaguerre(low, offset, x)


def displacement(alpha: complex, d: int) -> FockOperator:
    d = _check_dim(d, "displacement")
    alpha = _check_amplitude(alpha, "displacement")
    return FockOperator(displacement_entries(alpha, d))


def coherent_vector(alpha: complex, d: int) -> np.ndarray:
    """Fock amplitudes exp(-|alpha|^2/2) alpha^n / sqrt(n!) for n < d, not renormalized."""
    d = _check_dim(d, "coherent_vector")
    alpha = _check_amplitude(alpha, "coherent_vector")
    levels = np.arange(d)
    if alpha == 0:
        return (levels == 0).astype(complex)
    magnitude = np.exp(levels * np.log(abs(alpha)) - 0.5 * gammaln(levels + 1) - abs(alpha) ** 2 / 2)
    return magnitude * (alpha / abs(alpha)) ** levels


def double_ket(A: FockOperator) -> DoubleKet:
    return DoubleKet(A.entries.reshape(-1), A.dim)


def undouble_ket(v: DoubleKet) -> FockOperator:
    return FockOperator(v.entries.reshape(v.dim, v.dim))


def abc_identity_apply(A: FockOperator, B: FockOperator, C: FockOperator) -> DoubleKet:
    """(A (x) B)|C>> evaluated as |A C B^T>>."""
    _check_same_dim("abc_identity_apply", A, B, C)
    return double_ket(FockOperator(A.entries @ C.entries @ B.entries.T))


def tensor(A: FockOperator, B: FockOperator) -> BipartiteOperator:
    d = _check_same_dim("tensor", A, B)
    return BipartiteOperator(np.kron(A.entries, B.entries), d)


def swap_operator(d: int) -> BipartiteOperator:
    d = _check_dim(d, "swap_operator")
    index = np.arange(d * d)
    swap = np.zeros((d * d, d * d))
    swap[index, (index % d) * d + index // d] = 1.0
    return BipartiteOperator(swap, d)


def swap_apply(X: BipartiteOperator, side: str = "left") -> BipartiteOperator:
    """E X (side='left') or X E (side='right') by permuting the composite indices."""
    d = X.dim
    tensor4 = X.as_tensor()
    if side == "left":
        swapped = tensor4.transpose(1, 0, 2, 3)
    elif side == "right":
        swapped = tensor4.transpose(0, 1, 3, 2)
    else:
        raise ParameterError("swap_apply", "side '%s' is neither 'left' nor 'right'" % side, field="side")
    return BipartiteOperator(swapped.reshape(d * d, d * d), d)


def partial_transpose(X: BipartiteOperator, which: int) -> BipartiteOperator:
    d = X.dim
    tensor4 = X.as_tensor()
    if which == 1:
        transposed = tensor4.transpose(2, 1, 0, 3)
    elif which == 2:
        transposed = tensor4.transpose(0, 3, 2, 1)
    else:
        raise ParameterError("partial_transpose", "mode selector %s not in {1, 2}" % (which,), field="which")
    return BipartiteOperator(transposed.reshape(d * d, d * d), d)


def embed_first(A: FockOperator) -> BipartiteOperator:
    """A (x) I."""
    return tensor(A, identity(A.dim))


def embed_second(B: FockOperator) -> BipartiteOperator:
    """I (x) B."""
    return tensor(identity(B.dim), B)
