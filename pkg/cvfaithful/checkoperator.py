import numpy as np
from scipy.linalg import svdvals

from .faithfulerror import ParameterError
from .fockoperator import BipartiteOperator

DEFAULT_RANK_TOLERANCE = 1e-10


class CheckOperator:
    """The operator whose invertibility decides faithfulness, with its singular spectrum.

    singular_values are sorted in descending order; rank_tolerance is relative to the
    largest one.
    """

    def __init__(self, carrier: BipartiteOperator, rank_tolerance: float = DEFAULT_RANK_TOLERANCE):
        if not isinstance(carrier, BipartiteOperator):
            raise ParameterError("CheckOperator", "carrier %r is not a bipartite operator" % (carrier,), field="carrier")
        self.carrier = carrier
        self.dim = carrier.dim
        self.singular_values = svdvals(carrier.entries)
        self.singular_values.setflags(write=False)
        self.rank_tolerance = float(rank_tolerance)

    def __repr__(self):
        return "%s(dim=%d, sigma_max=%.3g)" % (self.__class__.__name__, self.dim, self.singular_values[0])

    @property
    def entries(self):
        return self.carrier.entries

    def numerical_rank(self, tol: float | None = None) -> int:
        tol = self.rank_tolerance if tol is None else tol
        sigma_max = self.singular_values[0]
        if sigma_max == 0.0:
            return 0
        return int(np.count_nonzero(self.singular_values > tol * sigma_max))


class FaithfulnessReport:

    def __init__(self, numerical_rank: int, dim: int, sigma_min: float, sigma_max: float, chi: float | None, method: str, tol: float):
        self.numerical_rank = int(numerical_rank)
        self.dim = int(dim)
        self.full_rank = self.numerical_rank == self.dim ** 2
        self.sigma_min = float(sigma_min)
        self.sigma_max = float(sigma_max)
        self.condition_number = self.sigma_max / self.sigma_min if self.sigma_min > 0 else float("inf")
        self.chi = None if chi is None else float(chi)
        self.method = method
        self.tol = float(tol)

    def __repr__(self):
        return "%s(rank=%d/%d, full_rank=%s, sigma_min=%.3g, chi=%s)" % (self.__class__.__name__, self.numerical_rank, self.dim ** 2, self.full_rank, self.sigma_min, self.chi)

    def to_dict(self):
        return {
            "rank": self.numerical_rank,
            "full_rank": self.full_rank,
            "sigma_min": self.sigma_min,
            "sigma_max": self.sigma_max,
            "cond": self.condition_number if np.isfinite(self.condition_number) else None,
            "chi": self.chi,
            "method": self.method,
            "dim": self.dim,
            "tol": self.tol,
        }


class GaussianCoefficients:
    """Coefficients of alpha beta (A) and alpha beta* (B) in the exponent of a Gaussian Gamma."""

    def __init__(self, A: complex, B: complex):
        self.A = complex(A)
        self.B = complex(B)

    def __repr__(self):
        return "%s(A=%s, B=%s)" % (self.__class__.__name__, self.A, self.B)

    def discriminant(self) -> float:
        return abs(self.A) ** 2 - abs(self.B) ** 2
