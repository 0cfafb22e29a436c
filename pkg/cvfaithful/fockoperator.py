import numpy as np

from .faithfulerror import ParameterError


def _frozen(entries, operation):
    try:
        array = np.array(entries, dtype=complex)
    except (TypeError, ValueError) as e:
        raise ParameterError(operation, "entries are not a complex array: %s" % e, field="entries")
    if not np.all(np.isfinite(array)):
        raise ParameterError(operation, "non-finite entries", field="entries")
    array.setflags(write=False)
    return array


class FockOperator:
    """Dense operator on the truncated single-mode Fock space, indexed by photon number."""

    kind = "single"

    def __init__(self, entries):
        self.entries = _frozen(entries, "FockOperator")
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise ParameterError("FockOperator", "entries of shape %s are not square" % (self.entries.shape,), field="entries")
        self.dim = self.entries.shape[0]
        if self.dim < 2:
            raise ParameterError("FockOperator", "dimension %d below 2" % self.dim, field="dim")

    def __repr__(self):
        return "%s(dim=%d)" % (self.__class__.__name__, self.dim)

    def dagger(self):
        return FockOperator(self.entries.conj().T)

    def trace(self):
        return complex(np.trace(self.entries))


class BipartiteOperator:
    """Dense operator on two truncated modes.

    The composite index is row-major with mode a major: row n*d + m is |n>_a |m>_b.
    """

    kind = "bipartite"

    def __init__(self, entries, dim: int | None = None):
        self.entries = _frozen(entries, "BipartiteOperator")
        size = self.entries.shape[0]
        if self.entries.ndim != 2 or size != self.entries.shape[1]:
            raise ParameterError("BipartiteOperator", "entries of shape %s are not square" % (self.entries.shape,), field="entries")
        self.dim = dim if dim is not None else int(round(np.sqrt(size)))
        if self.dim < 2 or self.dim ** 2 != size:
            raise ParameterError("BipartiteOperator", "size %d is not the square of a dimension >= 2" % size, field="dim")

    def __repr__(self):
        return "%s(dim=%d)" % (self.__class__.__name__, self.dim)

    def as_tensor(self):
        """Entries as a 4-index array T[n, m, n', m'] = <n m|X|n' m'>."""
        d = self.dim
        return self.entries.reshape(d, d, d, d)

    def dagger(self):
        return BipartiteOperator(self.entries.conj().T, self.dim)

    def trace(self):
        return complex(np.trace(self.entries))


class DoubleKet:
    """Vectorized operator |A>> with component <n|A|m> at index n*d + m."""

    kind = "doubleket"

    def __init__(self, entries, dim: int | None = None):
        self.entries = _frozen(entries, "DoubleKet")
        if self.entries.ndim != 1:
            raise ParameterError("DoubleKet", "entries are not a vector", field="entries")
        size = self.entries.shape[0]
        self.dim = dim if dim is not None else int(round(np.sqrt(size)))
        if self.dim < 2 or self.dim ** 2 != size:
            raise ParameterError("DoubleKet", "length %d is not the square of a dimension >= 2" % size, field="dim")

    def __repr__(self):
        return "%s(dim=%d)" % (self.__class__.__name__, self.dim)
