import json

from uritools import urisplit

from .faithfulerror import ParameterError

FAMILY_ALIASES = {
    "twinbeam": "twinbeam",
    "twin_beam": "twinbeam",
    "splitthermal": "splitthermal",
    "split_thermal": "splitthermal",
    "correlatedfock": "correlatedfock",
    "correlated_fock": "correlatedfock",
    "product": "product",
    "file": "file",
}

PARAMETER_ALIASES = {"lmbda": "lambda"}

REQUIRED = {
    "twinbeam": ("lambda",),
    "splitthermal": ("sigma2",),
    "correlatedfock": ("lambda",),
    "product": ("a", "b"),
    "file": ("path",),
}

OPTIONAL = {
    "twinbeam": ("dim",),
    "splitthermal": ("dim", "quad_points"),
    "correlatedfock": ("dim",),
    "product": ("dim",),
    "file": (),
}

FACTOR_FAMILIES = ("vacuum", "thermal", "coherent")


def parse_factor(factor):
    """Single-mode factor of a product state: 'vacuum', 'thermal:<nbar>', 'coherent:<re>,<im>'
    or the equivalent dict {"family": ..., "nbar" | "alpha": ...}. Returns (family, parameter)."""
    if isinstance(factor, dict):
        family = factor.get("family")
        if family == "thermal":
            return "thermal", _to_float(factor.get("nbar"), "nbar")
        elif family == "coherent":
            alpha = factor.get("alpha", 0.0)
            if isinstance(alpha, (list, tuple)):
                return "coherent", complex(_to_float(alpha[0], "alpha"), _to_float(alpha[1], "alpha"))
            return "coherent", complex(_to_float(alpha, "alpha"))
        elif family == "vacuum":
            return "vacuum", None
        raise ParameterError("ParsedSpec", "unknown factor family '%s'" % family, field="family")

    name, _, argument = str(factor).partition(":")
    if name == "vacuum" and not argument:
        return "vacuum", None
    elif name == "thermal":
        return "thermal", _to_float(argument, "nbar")
    elif name == "coherent":
        real, _, imag = argument.partition(",")
        return "coherent", complex(_to_float(real, "alpha"), _to_float(imag or "0", "alpha"))
    raise ParameterError("ParsedSpec", "malformed factor '%s' (expected one of %s)" % (factor, ", ".join(FACTOR_FAMILIES)), field="factor")


def _to_float(value, field):
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ParameterError("ParsedSpec", "'%s' is not a number" % (value,), field=field)


def _to_int(value, field):
    number = _to_float(value, field)
    if number != int(number):
        raise ParameterError("ParsedSpec", "'%s' is not an integer" % (value,), field=field)
    return int(number)


class ParsedSpec:
    """State specification normalised from a URI, a JSON document (or dict) and keyword arguments.

        twinbeam://?lambda=0.5&dim=10
        product://?a=thermal:1&b=vacuum&dim=15
        {"family": "splitthermal", "sigma2": 0.5, "dim": 25}
        file:///tmp/state.json
    """

    def __init__(self, spec=None, **kwargs):
        self.kwargs = {PARAMETER_ALIASES.get(key, key): value for key, value in kwargs.items()}
        family_from_spec, from_spec = self.parse_spec(spec)
        self.family = self.parse_family(self.get_spec_part("family", family_from_spec))
        self.params = {}
        for name in REQUIRED[self.family] + OPTIONAL[self.family]:
            value = self.get_spec_part(name, from_spec.pop(name, None))
            if value is not None:
                self.params[name] = value
        unknown = sorted(set(from_spec) | set(self.kwargs))
        if unknown:
            raise ParameterError("ParsedSpec", "unknown parameter '%s' for family '%s'" % (unknown[0], self.family), field=unknown[0])
        self.validate()
        self.convert()

    def __repr__(self):
        return "%s(family=%s, params=%s)" % (self.__class__.__name__, self.family, self.params)

    def parse_spec(self, spec):
        if spec is None or spec == "":
            return None, {}
        if isinstance(spec, dict):
            document = dict(spec)
        elif str(spec).lstrip().startswith("{"):
            try:
                document = json.loads(spec)
            except json.JSONDecodeError as e:
                raise ParameterError("ParsedSpec", "malformed JSON: %s" % e, field="spec")
            if not isinstance(document, dict):
                raise ParameterError("ParsedSpec", "JSON specification is not an object", field="spec")
        else:
            return self.parse_uri(str(spec))
        document = {PARAMETER_ALIASES.get(key, key): value for key, value in document.items()}
        return document.pop("family", None), document

    def parse_uri(self, uri):
        parsed_uri = urisplit(uri)
        if not parsed_uri.scheme:
            raise ParameterError("ParsedSpec", "'%s' has no family scheme" % uri, field="family")
        query = {PARAMETER_ALIASES.get(key, key): values[-1] for key, values in parsed_uri.getquerydict().items()}
        if parsed_uri.scheme == "file":
            path_from_uri = (parsed_uri.authority or "") + parsed_uri.getpath()
            if path_from_uri:
                query["path"] = path_from_uri
        return parsed_uri.scheme, query

    def parse_family(self, family):
        if family is None:
            raise ParameterError("ParsedSpec", "no state family given", field="family")
        if family not in FAMILY_ALIASES:
            raise ParameterError("ParsedSpec", "unknown family '%s'" % family, field="family")
        return FAMILY_ALIASES[family]

    def validate(self):
        for name in REQUIRED[self.family]:
            if name not in self.params:
                raise ParameterError("ParsedSpec", "family '%s' requires '%s'" % (self.family, name), field=name)

    def convert(self):
        for name, value in list(self.params.items()):
            if name in ("dim", "quad_points"):
                self.params[name] = _to_int(value, name)
            elif name in ("lambda", "sigma2"):
                self.params[name] = _to_float(value, name)
            elif name in ("a", "b"):
                self.params[name] = parse_factor(value)
            elif name == "path":
                self.params[name] = str(value)
        self.dim = self.params.pop("dim", None)

    def get_spec_part(self, argname, from_spec):
        from_kwargs = self.kwargs.pop(argname, None)
        if from_kwargs is not None and from_spec is not None:
            raise ParameterError("ParsedSpec", "'%s' provided both in specification and as argument" % argname, field=argname)
        return from_spec if from_spec is not None else from_kwargs

    def to_dict(self):
        document = {"family": self.family}
        for name, value in self.params.items():
            if name in ("a", "b"):
                family, parameter = value
                if family == "thermal":
                    document[name] = "thermal:%r" % parameter
                elif family == "coherent":
                    document[name] = "coherent:%r,%r" % (parameter.real, parameter.imag)
                else:
                    document[name] = family
            else:
                document[name] = value
        if self.dim is not None:
            document["dim"] = self.dim
        return document
