"""
Verify API
Runs the cross-check suites at a size level.
"""

from pydantic import BaseModel, Field

from app.functions.crosscheck import run_verify
from app.ingest.models import VerifyReport


class VerifyParams(BaseModel):
    level: str = Field("quick", description="'quick' (n <= 6) or 'full' (n <= 7 census, trees n <= 9)")


def get_verify(params: VerifyParams) -> VerifyReport:
    return run_verify(params.level)


def render_verify(report: VerifyReport) -> str:
    lines = [f"verify {report.level}: {'OK' if report.ok else 'FAILED'}"]
    for suite in report.suites:
        status = "ok" if suite.ok else f"{len(suite.failures)} failed"
        lines.append(f"  {suite.name:<12} {suite.checked:>8} checks  {status}")
        lines.extend(f"    {f}" for f in suite.failures)
    return "\n".join(lines)
