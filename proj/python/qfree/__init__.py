"""Quadratic equations in free groups: normal forms, certificates, search,
and the bin-packing reduction.

Equations are given as text ("x a x^-1 b = 1") or as dicts in the JSON
encodings of the command-line tool; results come back as dicts.
"""

import json as _json

from . import _qfree
from ._qfree import QfreeError

__all__ = [
    "QfreeError",
    "normalize",
    "verify",
    "solve",
    "direct_search",
    "binpack_solve",
    "binpack_to_exact",
    "to_equation",
    "packing_to_certificate",
    "certificate_to_packing",
]


def _text(x):
    return x if isinstance(x, str) else _json.dumps(x)


def normalize(equation, alphabet="ab"):
    return _json.loads(_qfree.normalize(_text(equation), alphabet))


def verify(equation, certificate, alphabet="ab"):
    return _json.loads(_qfree.verify(_text(equation), _text(certificate), alphabet))


def solve(equation, alphabet="ab", max_n=None, timeout=None, max_nodes=None):
    """Certificate search.  ``decision`` is "SAT", "UNSAT" or "UNKNOWN"."""
    return _json.loads(_qfree.solve(_text(equation), alphabet, max_n, timeout, max_nodes))


def direct_search(equation, alphabet="ab", max_len=3):
    return _json.loads(_qfree.direct_search(_text(equation), alphabet, max_len))


def binpack_solve(instance):
    return _json.loads(_qfree.binpack_solve(_text(instance)))


def binpack_to_exact(instance):
    return _json.loads(_qfree.binpack_to_exact(_text(instance)))


def to_equation(instance):
    return _json.loads(_qfree.to_equation(_text(instance)))


def packing_to_certificate(instance, partition):
    return _json.loads(_qfree.packing_to_certificate(_text(instance), _text(partition)))


def certificate_to_packing(instance, certificate):
    return _json.loads(_qfree.certificate_to_packing(_text(instance), _text(certificate)))
