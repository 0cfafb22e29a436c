from .container import read_container, write_container
from .densityoperator import DensityOperator
from .faithfulerror import ParameterError
from .parsedspec import ParsedSpec
from .states import coherent, correlated_fock, default_dim, product_state, split_thermal, thermal, twin_beam, vacuum


def _factor(family, parameter, d):
    if family == "thermal":
        return thermal(parameter, d)
    elif family == "coherent":
        return coherent(parameter, d)
    return vacuum(d)


def State(spec: ParsedSpec | dict | str | None = None, **kwargs) -> DensityOperator:
    parsed = spec if isinstance(spec, ParsedSpec) else ParsedSpec(spec, **kwargs)
    params = parsed.params
    if parsed.family == "twinbeam":
        return twin_beam(params["lambda"], parsed.dim)
    elif parsed.family == "splitthermal":
        return split_thermal(params["sigma2"], parsed.dim, params.get("quad_points"))
    elif parsed.family == "correlatedfock":
        return correlated_fock(params["lambda"], parsed.dim)
    elif parsed.family == "product":
        d = parsed.dim or max(default_dim(family, parameter or 0.0) for family, parameter in (params["a"], params["b"]))
        return product_state(_factor(*params["a"], d), _factor(*params["b"], d))
    elif parsed.family == "file":
        operator, header = read_container(params["path"])
        if operator.kind == "doubleket":
            raise ParameterError("State", "'%s' holds a double-ket, not a density matrix" % params["path"], field="kind")
        return DensityOperator(operator, header.get("trace_deficit", 0.0), header.get("spec"))

    raise ParameterError("State", "unknown family '%s'" % parsed.family, field="family")


def save_state(target, R: DensityOperator):
    write_container(target, R.carrier, trace_deficit=R.nominal_trace_deficit, spec=R.spec)
