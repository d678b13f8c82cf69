"""Parikh automata toolkit.

Machines are JSON documents, passed as ``str`` or ``dict``; constructions
return ``dict`` documents.
"""

import json

from . import _core
from ._core import Error, InvalidArgument, ResourceLimit, Unsupported, corpus_names, hilbert_basis

__all__ = [
    "Error", "InvalidArgument", "ResourceLimit", "Unsupported",
    "corpus_names", "corpus", "member", "is_empty", "cardinality", "subset", "universal",
    "combine", "complement", "comm_closure", "to_ca", "embed_apa", "linearize", "q_to_n",
    "normalize_two_state", "to_rbcm", "parikh_image", "simulate", "pump", "nerode", "hilbert_basis",
]


def _doc(m):
    return m if isinstance(m, str) else json.dumps(m)


def corpus(name):
    return json.loads(_core.corpus(name))


def member(machine, word, fuel=1_000_000):
    return _core.member(_doc(machine), word, fuel)


def is_empty(machine):
    return _core.is_empty(_doc(machine))


def cardinality(machine):
    """``(kind, count)``; count is an int for finite languages when known."""
    kind, count = _core.cardinality(_doc(machine))
    return kind, (int(count) if count is not None else None)


def subset(m1, m2):
    return _core.subset(_doc(m1), _doc(m2))


def universal(machine):
    return _core.universal(_doc(machine))


def combine(m1, m2, op):
    return json.loads(_core.combine(_doc(m1), _doc(m2), op))


def complement(machine):
    return json.loads(_core.complement(_doc(machine)))


def comm_closure(machine):
    return json.loads(_core.comm_closure(_doc(machine)))


def to_ca(machine):
    return json.loads(_core.to_ca(_doc(machine)))


def embed_apa(machine):
    return json.loads(_core.embed_apa(_doc(machine)))


def linearize(machine):
    return json.loads(_core.linearize(_doc(machine)))


def q_to_n(machine):
    return json.loads(_core.q_to_n(_doc(machine)))


def normalize_two_state(machine):
    return json.loads(_core.normalize_two_state(_doc(machine)))


def to_rbcm(machine):
    return json.loads(_core.to_rbcm(_doc(machine)))


def parikh_image(machine):
    return json.loads(_core.parikh_image(_doc(machine)))


def simulate(machine, word, fuel=1_000_000):
    return _core.simulate(_doc(machine), word, fuel)


def pump(machine, word):
    return _core.pump(_doc(machine), word)


def nerode(machine, u, v, bound):
    return _core.nerode(_doc(machine), u, v, bound)
