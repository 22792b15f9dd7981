import logging
from dataclasses import dataclass
from pathlib import Path

import pandas as pd

from ..config import CERTIFICATES_FILE, DEFAULT_RMAX, TABLE_RMAX, VIOLATIONS_FILE
from .case_certificates import run_case_certificates
from .identity_checks import run_identity_checks
from .stage_results import VIOLATION_COLUMNS, merge_stage_violations

logger = logging.getLogger(__name__)


@dataclass
class PipelineResult:
    summary: pd.DataFrame
    certificates: pd.DataFrame
    violations: pd.DataFrame = None

    @property
    def ok(self):
        return self.violations is None or self.violations.empty

    @property
    def exit_code(self):
        return 0 if self.ok else 1


def ensure_directory(report_dir):
    path = Path(report_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def run_pipeline(rmax=DEFAULT_RMAX, report_dir=None, workers=1):
    """Run every identity stage and every case certificate, in order."""
    logger.info("========** Starting verify-paper (r <= %d) **======", rmax)

    identity_summary, identity_violations = run_identity_checks()
    case_summary, case_violations, certificates = run_case_certificates(TABLE_RMAX, rmax, workers=workers)

    identity_summary.insert(0, "pipeline_stage", "identities")
    case_summary.insert(0, "pipeline_stage", "cases")
    summary = pd.concat([identity_summary, case_summary], ignore_index=True)

    violations = merge_stage_violations({
        "identities": identity_violations,
        "cases": case_violations,
    })
    result = PipelineResult(summary, certificates, violations)

    if report_dir is not None:
        path = ensure_directory(report_dir)
        certificates.to_csv(path / CERTIFICATES_FILE, index=False)
        logger.info("** Certificates saved: %s", path / CERTIFICATES_FILE)
        audit = violations if violations is not None else pd.DataFrame(columns=VIOLATION_COLUMNS + ["pipeline_stage"])
        audit.to_csv(path / VIOLATIONS_FILE, index=False)
        logger.info("** Violations saved: %s (%d rows)", path / VIOLATIONS_FILE, len(audit))

    cases = int(summary["cases"].sum())
    failed = int(summary["violations"].sum())
    if result.ok:
        logger.info("========** verify-paper passed: %d checks **======", cases)
    else:
        logger.error("verify-paper found %d violations in %d checks", failed, cases)
    return result
