"""JSON matrix container shared by every module.

    {"format": "cvfaithful-matrix", "version": 1, "dim": d,
     "kind": "single" | "bipartite" | "doubleket",
     "entries": [[re, im], ...],            # row-major
     "trace_deficit": x,                    # optional
     "spec": {...}}                         # optional provenance

Floats go through json's shortest round-trip repr, so a save/load cycle is bit exact.
"""
import json
from os import path, replace, remove
from tempfile import NamedTemporaryFile

import numpy as np

from .faithfulerror import ParameterError
from .fockoperator import FockOperator, BipartiteOperator, DoubleKet

FORMAT = "cvfaithful-matrix"
VERSION = 1

_KINDS = {
    "single": FockOperator,
    "bipartite": BipartiteOperator,
    "doubleket": DoubleKet,
}


def atomic_write(target, text):
    directory = path.dirname(path.abspath(target))
    with NamedTemporaryFile("w", dir=directory, prefix=".cvfaithful-", suffix=".tmp", delete=False) as temp_file:
        temp_file.write(text)
        temp_name = temp_file.name
    try:
        replace(temp_name, target)
    except OSError:
        remove(temp_name)
        raise


def to_document(operator, **header):
    flat = operator.entries.reshape(-1)
    document = {
        "format": FORMAT,
        "version": VERSION,
        "dim": operator.dim,
        "kind": operator.kind,
        "entries": [[float(z.real), float(z.imag)] for z in flat],
    }
    for key, value in header.items():
        if value is not None:
            document[key] = value
    return document


def from_document(document):
    for field in ("format", "dim", "kind", "entries"):
        if field not in document:
            raise ParameterError("read_container", "missing field '%s'" % field, field=field)
    if document["format"] != FORMAT:
        raise ParameterError("read_container", "unknown format '%s'" % document["format"], field="format")
    kind = document["kind"]
    if kind not in _KINDS:
        raise ParameterError("read_container", "unknown kind '%s'" % kind, field="kind")
    d = int(document["dim"])
    try:
        pairs = np.array(document["entries"], dtype=float)
        flat = pairs[:, 0] + 1j * pairs[:, 1]
    except (TypeError, ValueError, IndexError) as e:
        raise ParameterError("read_container", "malformed entries: %s" % e, field="entries")
    size = {"single": d, "bipartite": d * d, "doubleket": d * d}[kind]
    expected = size if kind == "doubleket" else size * size
    if flat.shape[0] != expected:
        raise ParameterError("read_container", "%d entries where %d expected" % (flat.shape[0], expected), field="entries")
    if kind == "doubleket":
        operator = DoubleKet(flat, d)
    elif kind == "bipartite":
        operator = BipartiteOperator(flat.reshape(size, size), d)
    else:
        operator = FockOperator(flat.reshape(size, size))
    header = {key: value for key, value in document.items() if key not in ("format", "version", "dim", "kind", "entries")}
    return operator, header


def write_container(target, operator, **header):
    atomic_write(target, json.dumps(to_document(operator, **header)))


def read_container(source):
    try:
        with open(source, "r") as stream:
            document = json.load(stream)
    except json.JSONDecodeError as e:
        raise ParameterError("read_container", "'%s' is not JSON: %s" % (source, e), field="entries")
    return from_document(document)
