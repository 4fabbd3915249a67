"""Monomial subquotients, associated primes and v-numbers."""

import json
import math

from ._vnumlab import Error, Ideal, Module, ParseError, Ring, command_names
from ._vnumlab import _canonicalize, _run

__all__ = [
    "Error",
    "Ideal",
    "Module",
    "ParseError",
    "Ring",
    "ass",
    "canonicalize",
    "end",
    "command_names",
    "indeg",
    "run",
    "v_number",
]


def _ext_int(value):
    if value == "inf":
        return math.inf
    if value == "-inf":
        return -math.inf
    return value


def ass(module):
    """Associated primes as sorted lists of variable names."""
    return json.loads(module._ass())


def indeg(module):
    """Initial degree, math.inf for the zero module."""
    return _ext_int(json.loads(module._indeg()))


def end(module):
    """Top degree of a finite-length module, -math.inf for the zero module."""
    return _ext_int(json.loads(module._end()))


def v_number(module):
    """Dict with the overall v-number, per-prime values and witnesses."""
    report = json.loads(module._v_number())
    report["v"] = _ext_int(report["v"])
    return report


def canonicalize(document):
    """Canonical form of a problem document given as a dict or JSON text."""
    text = document if isinstance(document, str) else json.dumps(document)
    return json.loads(_canonicalize(text))


def run(command, document=None, cache_dir=None, format="json"):
    """Runs a CLI command on a problem document.

    Returns (result, exit_code); result is a dict for json and text for csv.
    """
    if document is None:
        document = {}
    text = document if isinstance(document, str) else json.dumps(document)
    out, code = _run(text, command, cache_dir, format)
    return (json.loads(out) if format == "json" else out), code
