"""
Logging consumers for monitoring progress and diagnostics.

Everything goes to stderr so stdout only carries the requested report.
"""

import sys

from app.ingest.models.SurveyRecord import SkippedGraph, SurveyRecord, SurveySummary

_QUIET = False


def set_quiet(quiet: bool):
    global _QUIET
    _QUIET = quiet


def _emit(line: str, always: bool = False):
    if _QUIET and not always:
        return
    print(line, file=sys.stderr)


def log_start(message: str):
    _emit(f"🔍 {message}")


def log_ok(message: str):
    _emit(f"✅ {message}")


def log_warning(message: str):
    _emit(f"⚠️ {message}")


def log_failure(message: str):
    """Failures are printed even with --quiet"""
    _emit(f"❌ {message}", always=True)


def log_stat(message: str):
    _emit(f"📊 {message}")


def log_file_written(path: str, rows: int):
    _emit(f"📁 Wrote {rows} rows to {path}")


def separator():
    _emit("---")


def log_record(record: SurveyRecord):
    """Log one processed graph"""
    _emit(f"✅ {record.graph6}: n={record.n} reg={record.reg_cover} deg={record.deg_h_cover} [{record.flags}]")


def log_skipped(skipped: SkippedGraph):
    """Handle a graph the survey could not process"""
    where = f"line {skipped.line}" if skipped.line is not None else "generated"
    _emit(f"⚠️ Skipped {skipped.graph6 or '?'} ({where}): {skipped.reason}")


def log_summary(summary: SurveySummary):
    _emit("📊 Survey summary:")
    _emit(f"  Graphs processed: {summary.processed}")
    _emit(f"  Skipped: {len(summary.skipped)}")
    _emit(f"  Distinct (reg, deg h) pairs: {summary.pair_count()}")
    _emit(f"  Band violations: {len(summary.band_violations)}")
    _emit(f"  Corollary violations: {len(summary.corollary_violations)}")
    _emit(f"  Conjecture conflicts: {summary.conjecture_conflicts()}")
    _emit(f"  Chordal spot checks: {summary.spot_checks} | Oracle samples: {summary.oracle_samples}")
    if summary.hard_failures:
        for failure in summary.hard_failures:
            log_failure(failure)
    separator()
