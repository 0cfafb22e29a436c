import numpy as np
from scipy.linalg import svd


class ForwardMap:
    """The d^4 x d^4 matrix M with vec((E (x) I) R) = M vec(C_E), and its SVD.

    Row index (n, m, p, q) of vec(R_E), column index (n, j, p, l) of vec(C):
    M = delta_nn' delta_pp' <jm|R|lq>. Up to a permutation M is I (x) check(R), so its
    singular values are those of the check operator, each d^2 times.
    """

    def __init__(self, matrix: np.ndarray, dim: int):
        self.matrix = np.array(matrix, dtype=complex)
        self.matrix.setflags(write=False)
        self.dim = dim
        self._u, self.singular_values, self._vh = svd(self.matrix)
        self.singular_values.setflags(write=False)

    def __repr__(self):
        return "%s(dim=%d, size=%d)" % (self.__class__.__name__, self.dim, self.matrix.shape[0])

    @property
    def size(self):
        return self.matrix.shape[0]

    def rank(self, tol: float) -> int:
        sigma_max = self.singular_values[0]
        if sigma_max == 0.0:
            return 0
        return int(np.count_nonzero(self.singular_values > tol * sigma_max))

    def full_rank(self, tol: float) -> bool:
        return self.rank(tol) == self.size

    def sigma_min(self) -> float:
        return float(self.singular_values[-1])

    def solve(self, data: np.ndarray, tol: float) -> np.ndarray:
        """Minimum-norm least-squares solution(s) of M c = data, singular values below tol * sigma_max dropped.

        data is a vector or a matrix with one right-hand side per column.
        """
        r = self.rank(tol)
        projected = self._u[:, :r].conj().T @ data
        scaled = projected / (self.singular_values[:r][:, None] if projected.ndim == 2 else self.singular_values[:r])
        return self._vh[:r].conj().T @ scaled
