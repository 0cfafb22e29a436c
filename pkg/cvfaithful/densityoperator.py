import numpy as np
from scipy.linalg import eigvalsh

from .faithfulerror import ParameterError, NumericalError
from .fockoperator import FockOperator, BipartiteOperator

HERMITIAN_TOLERANCE = 1e-12
TRACE_TOLERANCE = 1e-10
EIGENVALUE_TOLERANCE = 1e-10


class DensityOperator:
    """A truncated one- or two-mode state.

    nominal_trace_deficit is the probability mass lost to truncation; the trace of
    the carrier equals 1 - nominal_trace_deficit. spec, when present, records the
    family and parameters the state was built from.
    """

    def __init__(self, carrier, nominal_trace_deficit: float = 0.0, spec: dict | None = None):
        if not isinstance(carrier, (FockOperator, BipartiteOperator)):
            raise ParameterError("DensityOperator", "carrier %r is not an operator" % (carrier,), field="carrier")
        self.carrier = carrier
        self.nominal_trace_deficit = float(nominal_trace_deficit)
        self.spec = dict(spec) if spec else None
        self.dim = carrier.dim
        self.modes = 2 if isinstance(carrier, BipartiteOperator) else 1
        self._check_hermitian()
        self._check_trace()

    def __repr__(self):
        family = self.spec.get("family") if self.spec else None
        return "%s(modes=%d, dim=%d, family=%s, deficit=%.3g)" % (self.__class__.__name__, self.modes, self.dim, family, self.nominal_trace_deficit)

    @property
    def entries(self):
        return self.carrier.entries

    def _check_hermitian(self):
        entries = self.carrier.entries
        scale = max(1.0, float(np.max(np.abs(entries))))
        asymmetry = float(np.max(np.abs(entries - entries.conj().T)))
        if asymmetry > HERMITIAN_TOLERANCE * scale:
            raise NumericalError("DensityOperator", "non-Hermitian carrier (max |R - R^dag| = %.3g)" % asymmetry)

    def _check_trace(self):
        trace = self.carrier.trace()
        expected = 1.0 - self.nominal_trace_deficit
        if abs(trace.real - expected) > TRACE_TOLERANCE or abs(trace.imag) > TRACE_TOLERANCE:
            raise NumericalError("DensityOperator", "trace %s differs from 1 - deficit = %.12g" % (trace, expected))

    def trace(self):
        return self.carrier.trace().real

    def min_eigenvalue(self):
        return float(eigvalsh(self.carrier.entries, subset_by_index=[0, 0])[0])

    def validate(self):
        lowest = self.min_eigenvalue()
        if lowest < -EIGENVALUE_TOLERANCE:
            raise NumericalError("DensityOperator.validate", "negative eigenvalue %.3g" % lowest)
        return self

    def purity(self):
        entries = self.carrier.entries
        return float(np.real(np.sum(entries * entries.T)))
