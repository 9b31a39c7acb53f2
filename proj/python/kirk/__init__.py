"""Link-homotopy invariants of link maps.

Presentations and cross-sections are plain dicts in the same layout as the
command-line JSON files.
"""

import json

from . import _kirk
from ._kirk import (
    ArityMismatch,
    CoefficientOverflow,
    InvalidInput,
    MalformedDiagram,
    NonStabilizing,
    ParseError,
    expand,
    expand_terms,
    is_positive,
    rf_equal,
)

__version__ = "1.0.0"


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def e_invariant(presentation, i):
    return _kirk.e_invariant(_dump(presentation), i)


def kappa_tilde(presentation, i, sequence):
    """(value, modulus) of the residue; modulus 0 means no reduction."""
    return _kirk.kappa_tilde(_dump(presentation), i, list(sequence))


def k_sequence(presentation, i, sequence):
    """{"full": [(rho, value, modulus), ...], "filtered": [...]}"""
    return _kirk.k_sequence(_dump(presentation), i, list(sequence))


def k_multiset(presentation, i):
    return _kirk.k_multiset(_dump(presentation), i)


def sigma(presentation, i):
    return _kirk.sigma(_dump(presentation), i)


def kirk_classical(presentation):
    return _kirk.kirk_classical(_dump(presentation))


def report(presentation, component=None, sequence=None, all=False):
    seq = None if sequence is None else list(sequence)
    return json.loads(_kirk.report(_dump(presentation), component, seq, all))


def compare(a, b):
    return json.loads(_kirk.compare(_dump(a), _dump(b)))


def from_cross_section(cross_section):
    return json.loads(_kirk.from_cross_section(_dump(cross_section)))


def catalog_names():
    return _kirk.catalog_names()


def catalog_emit(name, n=None, reversed=None):
    return json.loads(_kirk.catalog_emit(name, n, reversed))
