"""
Per-stage check tallies and the merged violations audit table.
"""

import logging
from collections import Counter

import pandas as pd

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["check", "cases", "violations"]
VIOLATION_COLUMNS = ["check", "operands", "expected", "actual"]


class CheckTally:
    """Counts cases per named check and keeps every failing one."""

    def __init__(self):
        self.cases = Counter()
        self.failed = Counter()
        self.violations = []

    def check(self, name, passed, expected=None, actual=None, **operands):
        self.cases[name] += 1
        if passed:
            return True
        self.failed[name] += 1
        self.violations.append({
            "check": name,
            "operands": ", ".join(f"{key}={value}" for key, value in operands.items()),
            "expected": str(expected),
            "actual": str(actual),
        })
        logger.debug("violation in %s: %s", name, self.violations[-1]["operands"])
        return False

    def summary_frame(self):
        return pd.DataFrame(
            [{"check": name, "cases": count, "violations": self.failed[name]} for name, count in self.cases.items()],
            columns=SUMMARY_COLUMNS,
        )

    def violations_frame(self):
        return pd.DataFrame(self.violations, columns=VIOLATION_COLUMNS)


def merge_stage_violations(stage_frames):
    """
    Merge the violation frames of every stage into one table with a
    pipeline_stage column. Returns None when no stage reported anything.
    """
    frames = []
    for stage, frame in stage_frames.items():
        if frame is not None and not frame.empty:
            frame = frame.copy()
            frame["pipeline_stage"] = stage
            frames.append(frame)

    if not frames:
        logger.info("No violations recorded")
        return None

    return pd.concat(frames, ignore_index=True)
