"""Instance generators, claim registry, and executable check suites."""

from hypercenter.verify.claims import CLAIMS
from hypercenter.verify.instances import InstanceSpec, generate, spec
from hypercenter.verify.suites import CheckResult, SUITES, run_suite

__all__ = [
    "CLAIMS",
    "CheckResult",
    "InstanceSpec",
    "SUITES",
    "generate",
    "run_suite",
    "spec",
]
