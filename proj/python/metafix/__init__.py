"""Fixed points of IA-endomorphisms of free metabelian groups.

Thin layer over the C++ extension; reports come back as dicts.
"""

import json

from ._core import (
    BraidWord,
    DimensionError,
    Endomorphism,
    Error,
    InvariantViolation,
    LaurentPoly,
    ParseError,
    PreconditionError,
    Word,
    alexander_vanishes,
    compose,
    det_JmI,
    detect_fixed_in_coset,
    detect_fixed_in_Mprime,
    fox_gradient,
    gassner_reduced,
    gassner_unreduced,
    is_trivial,
    jacobian,
    magnus,
    normality_check,
    rank_JmI,
    selftest,
    verify_fixed,
)
from . import _core


def analyze(phi, bound=2, verify=True):
    """Full report for an endomorphism (an Endomorphism or file text)."""
    if isinstance(phi, str):
        phi = Endomorphism.parse(phi)
    return json.loads(_core.analyze_json(phi, bound, verify))


def analyze_braid(word, strands, bound=2, verify=True):
    if isinstance(word, str):
        word = BraidWord.parse(word, strands)
    return json.loads(_core.analyze_braid_json(word, bound, verify))


def reload(report):
    """Round-trips a report dict through the C++ reader; witnesses are re-verified."""
    return json.loads(_core.reload_json(json.dumps(report)))
