"""Exact rational certificates of global polynomial nonnegativity."""

from ._poscert import (
    canonical_form,
    certify,
    eval,
    run_cli,
    sos_pert_threshold,
    sospert,
    verify,
)

__all__ = [
    "canonical_form",
    "certify",
    "eval",
    "run_cli",
    "sos_pert_threshold",
    "sospert",
    "verify",
]
