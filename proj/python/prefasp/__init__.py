"""Answer sets and preferred answer sets of prioritized logic programs.

Programs are given as source text; interpretations are sorted lists of literal strings
such as ``["-flies", "bird", "peng"]``.
"""

import json

from ._prefasp import (
    InvalidInput,
    LimitExceeded,
    ParseError,
    PreconditionError,
    answer_sets,
    asset_names,
    asset_text,
    cross_validate,
    demangle,
    emit_facts,
    ground,
    mangle,
    meta_solve,
    optimal_answer_sets,
    preferred,
    pvd,
    weakly_preferred,
)
from ._prefasp import _run

__all__ = [
    "InvalidInput",
    "LimitExceeded",
    "ParseError",
    "PreconditionError",
    "answer_sets",
    "asset_names",
    "asset_text",
    "cross_validate",
    "demangle",
    "emit_facts",
    "ground",
    "mangle",
    "meta_solve",
    "optimal_answer_sets",
    "preferred",
    "pvd",
    "run",
    "weakly_preferred",
]


def run(command, path, semantics="", explain=False, limit_rules=8):
    """Run a tool command on a file and return (result document, exit code)."""
    doc, code = _run(command, str(path), semantics, explain, limit_rules)
    return json.loads(doc), code
