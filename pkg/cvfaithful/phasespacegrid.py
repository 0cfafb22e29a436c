import numpy as np

from .faithfulerror import ParameterError

KINDS = ("wigner", "characteristic")


def _frozen_points(points, field):
    array = np.array(points, dtype=complex).reshape(-1)
    if array.size == 0:
        raise ParameterError("PhaseSpaceGrid", "empty list of %s" % field, field=field)
    if not np.all(np.isfinite(array)):
        raise ParameterError("PhaseSpaceGrid", "non-finite %s" % field, field=field)
    array.setflags(write=False)
    return array


class PhaseSpaceGrid:
    """Samples of W(alpha, beta) or Gamma(alpha, beta); values[i, j] belongs to (alphas[i], betas[j]).

    alpha_area and beta_area are the quadrature cell areas of the two planes when the
    points come from a uniform lattice, None otherwise.
    """

    def __init__(self, alphas, betas, values, kind: str, alpha_area: float | None = None, beta_area: float | None = None):
        if kind not in KINDS:
            raise ParameterError("PhaseSpaceGrid", "unknown kind '%s'" % kind, field="kind")
        self.alphas = _frozen_points(alphas, "alphas")
        self.betas = _frozen_points(betas, "betas")
        self.values = np.array(values, dtype=complex)
        if self.values.shape != (self.alphas.size, self.betas.size):
            raise ParameterError("PhaseSpaceGrid", "values of shape %s for %d x %d points" % (self.values.shape, self.alphas.size, self.betas.size), field="values")
        self.values.setflags(write=False)
        self.kind = kind
        self.alpha_area = alpha_area
        self.beta_area = beta_area

    def __repr__(self):
        return "%s(kind=%s, points=%dx%d)" % (self.__class__.__name__, self.kind, self.alphas.size, self.betas.size)

    def cell_area(self):
        if self.alpha_area is None or self.beta_area is None:
            raise ParameterError("PhaseSpaceGrid", "grid has no quadrature cell areas", field="area")
        return self.alpha_area * self.beta_area

    def to_dict(self):
        return {
            "kind": self.kind,
            "alphas": [[z.real, z.imag] for z in self.alphas.tolist()],
            "betas": [[z.real, z.imag] for z in self.betas.tolist()],
            "values": [[[z.real, z.imag] for z in row] for row in self.values.tolist()],
            "alpha_area": self.alpha_area,
            "beta_area": self.beta_area,
        }
