"""Python access to the mvlab matrix-logic engine."""

import json

from ._mvlab import (
    MvlabError,
    canonical,
    check_consequence,
    check_stability,
    check_validity,
    classify,
    closure_size,
    enumerate_tspn,
    evaluate,
    export_logic,
    is_definable,
    logics,
)
from ._mvlab import report as _report


def report(manifest=""):
    """Run the shipped claims (or a manifest file) and return the parsed report."""
    return json.loads(_report(manifest))


__all__ = [
    "MvlabError",
    "canonical",
    "check_consequence",
    "check_stability",
    "check_validity",
    "classify",
    "closure_size",
    "enumerate_tspn",
    "evaluate",
    "export_logic",
    "is_definable",
    "logics",
    "report",
]
