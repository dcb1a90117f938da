"""Contact and K-contact structures on Lie algebras, exact where it matters."""

import json as _json

from ._kcontact import (
    InputError,
    InvariantViolation,
    catalog_names,
    contact_check,
    is_kcontact,
    reeb,
    round_trip,
    run,
    skew_normal_form,
)


def report(*args):
    """Run a CLI command with --json and return (exit_code, parsed report)."""
    code, out, _ = run(["--json", *args])
    return code, _json.loads(out)


__all__ = [
    "InputError",
    "InvariantViolation",
    "catalog_names",
    "contact_check",
    "is_kcontact",
    "reeb",
    "report",
    "round_trip",
    "run",
    "skew_normal_form",
]
