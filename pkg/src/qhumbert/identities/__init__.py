"""The identity catalog and its audit runner.

Importing this package registers every identity; the family modules are
private and only fill :data:`REGISTRY`.
"""

from . import _derivatives, _integrals, _limits, _operators, _recursions, _summation  # noqa: F401
from .core import (
    DEFAULT_CHECK_TOL,
    KINDS,
    STATUSES,
    CheckResult,
    Constraint,
    Domain,
    Env,
    IdentitySpec,
    SamplePoint,
    Variant,
)
from .registry import REGISTRY, get, ordered_ids
from .runner import (
    CSV_HEADER,
    VERDICTS,
    IdentityRecord,
    SuiteReport,
    audit_identity,
    check,
    compose_check,
    limit_check,
    residual_pattern,
    run_suite,
)
from .sampling import sample_domain

REGISTRY_SIZE = len(REGISTRY)

__all__ = [
    "DEFAULT_CHECK_TOL", "KINDS", "STATUSES", "CheckResult", "Constraint", "Domain", "Env", "IdentitySpec",
    "SamplePoint", "Variant", "REGISTRY", "REGISTRY_SIZE", "get", "ordered_ids", "CSV_HEADER", "VERDICTS",
    "IdentityRecord", "SuiteReport", "audit_identity", "check", "compose_check", "limit_check",
    "residual_pattern", "run_suite", "sample_domain",
]
