from cvfaithful import ParsedSpec, ParameterError
from cvfaithful.parsedspec import parse_factor
from pytest import mark, raises

def test_parse_spec_all_in_uri():
    result = ParsedSpec("twinbeam://?lambda=0.5&dim=10")
    assert result.family == "twinbeam"
    assert result.params == {"lambda": 0.5}
    assert result.dim == 10

def test_parse_spec_family_alias():
    assert ParsedSpec("twin_beam://?lambda=0.5").family == "twinbeam"
    assert ParsedSpec({"family": "split_thermal", "sigma2": 1}).family == "splitthermal"

def test_parse_spec_lambda_keyword_alias():
    result = ParsedSpec("correlatedfock://", lmbda=0.4, dim=30)
    assert result.params == {"lambda": 0.4}
    assert result.dim == 30

def test_parse_spec_no_dim_leaves_default():
    assert ParsedSpec("twinbeam://?lambda=0.5").dim is None

def test_parse_spec_json_string():
    result = ParsedSpec('{"family": "splitthermal", "sigma2": 0.5, "dim": 25, "quad_points": 64}')
    assert result.family == "splitthermal"
    assert result.params == {"sigma2": 0.5, "quad_points": 64}
    assert result.dim == 25

def test_parse_spec_dict():
    result = ParsedSpec({"family": "twinbeam", "lambda": 0.2, "dim": 4})
    assert result.params["lambda"] == 0.2
    assert result.dim == 4

def test_parse_spec_family_as_argument():
    result = ParsedSpec(family="twinbeam", lmbda=0.8)
    assert result.family == "twinbeam"
    assert result.params["lambda"] == 0.8

def test_parse_spec_file_uri():
    result = ParsedSpec("file:///tmp/states/twin.json")
    assert result.family == "file"
    assert result.params["path"] == "/tmp/states/twin.json"

def test_parse_spec_relative_file_uri():
    assert ParsedSpec("file://states/twin.json").params["path"] == "states/twin.json"

def test_parse_spec_file_as_argument():
    assert ParsedSpec(family="file", path="state.json").params["path"] == "state.json"

###################################################################################################

def test_parse_spec_product_uri():
    result = ParsedSpec("product://?a=thermal:1&b=vacuum&dim=15")
    assert result.params["a"] == ("thermal", 1.0)
    assert result.params["b"] == ("vacuum", None)
    assert result.dim == 15

def test_parse_spec_product_dict_factors():
    result = ParsedSpec({"family": "product",
                         "a": {"family": "coherent", "alpha": [0.3, 0.2], "dim": 40},
                         "b": {"family": "thermal", "nbar": 1.0, "dim": 40}})
    assert result.params["a"] == ("coherent", complex(0.3, 0.2))
    assert result.params["b"] == ("thermal", 1.0)

@mark.parametrize("factor,expected", [
    ("vacuum", ("vacuum", None)),
    ("thermal:0.25", ("thermal", 0.25)),
    ("coherent:0.5", ("coherent", 0.5 + 0j)),
    ("coherent:0.5,-1", ("coherent", 0.5 - 1j)),
    ({"family": "coherent", "alpha": 0.7}, ("coherent", 0.7 + 0j)),
])
def test_parse_factor(factor, expected):
    assert parse_factor(factor) == expected

@mark.parametrize("factor", ["squeezed:0.3", "thermal:warm", "vacuum:1"])
def test_parse_factor_rejects_malformed(factor):
    with raises(ParameterError):
        parse_factor(factor)

def test_to_dict_round_trip():
    for spec in ("twinbeam://?lambda=0.5&dim=10", "product://?a=thermal:1&b=coherent:0.5,0.25&dim=15"):
        parsed = ParsedSpec(spec)
        again = ParsedSpec(parsed.to_dict())
        assert again.family == parsed.family
        assert again.params == parsed.params
        assert again.dim == parsed.dim

###################################################################################################

def test_parse_spec_value_in_both_spec_and_argument():
    with raises(ParameterError) as e:
        ParsedSpec("twinbeam://?lambda=0.5", lmbda=0.6)
    assert e.value.field() == "lambda"

def test_parse_spec_dim_in_both_spec_and_argument():
    with raises(ParameterError) as e:
        ParsedSpec({"family": "twinbeam", "lambda": 0.5, "dim": 4}, dim=5)
    assert e.value.field() == "dim"

def test_parse_spec_family_in_both_spec_and_argument():
    with raises(ParameterError) as e:
        ParsedSpec("twinbeam://?lambda=0.5", family="twinbeam")
    assert e.value.field() == "family"

def test_parse_spec_unknown_parameter():
    with raises(ParameterError) as e:
        ParsedSpec("twinbeam://?lambda=0.5&sigma2=1")
    assert e.value.field() == "sigma2"

def test_parse_spec_unknown_family():
    with raises(ParameterError) as e:
        ParsedSpec("squeezed://?r=0.5")
    assert e.value.field() == "family"

def test_parse_spec_no_family():
    with raises(ParameterError) as e:
        ParsedSpec()
    assert e.value.field() == "family"

def test_parse_spec_missing_required_parameter():
    with raises(ParameterError) as e:
        ParsedSpec("splitthermal://?dim=5")
    assert e.value.field() == "sigma2"

@mark.parametrize("spec,field", [
    ("twinbeam://?lambda=half", "lambda"),
    ("twinbeam://?lambda=0.5&dim=2.5", "dim"),
    ('{"family": "twinbeam", "lambda": 0.5', "spec"),
    ("[1, 2]", "family"),
])
def test_parse_spec_malformed_values(spec, field):
    with raises(ParameterError) as e:
        ParsedSpec(spec)
    assert e.value.field() == field
