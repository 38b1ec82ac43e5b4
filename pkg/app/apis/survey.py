"""
Survey API
Surveys a graph6 corpus or the built-in enumeration and aggregates pairs.
"""

from typing import Optional

from pydantic import BaseModel, Field

from app.errors import GraphFormatError
from app.functions.corpus import generated_connected, read_graph6_file
from app.functions.survey import SurveyOptions, SurveyResult, run_survey, scatter_rows


class SurveyParams(BaseModel):
    """Exactly one of source / n selects the corpus"""
    source: Optional[str] = Field(None, description="graph6 file or '-' for stdin")
    n: Optional[int] = Field(None, description="Survey every connected graph on n vertices (n <= 7)")
    options: SurveyOptions = Field(default_factory=SurveyOptions)


def get_survey(params: SurveyParams) -> SurveyResult:
    if (params.source is None) == (params.n is None):
        raise GraphFormatError("survey needs exactly one of a graph6 source or --n")
    items = read_graph6_file(params.source) if params.source is not None else generated_connected(params.n)
    return run_survey(items, params.options)


def render_survey(result: SurveyResult) -> str:
    s = result.summary
    lines = [f"processed {s.processed} graphs, skipped {len(s.skipped)}"]
    for n, pairs in sorted(s.pairs.items()):
        lines.append(f"n={n}: {len(pairs)} pairs")
        lines.extend(f"  ({r}, {d})  x{count}" for r, d, count in scatter_rows(pairs))
    for k in s.skipped:
        lines.append(f"skipped {k.graph6} (line {k.line}): {k.reason}")
    lines.append(f"band violations: {len(s.band_violations)}; corollary violations: {len(s.corollary_violations)}")
    for report in s.unrealizable:
        if report.lemma_violations:
            lines.append(f"n={report.n}: reg = 1 lemma violated by {report.lemma_violations}")
        if report.conjecture_conflicts:
            lines.append(f"n={report.n}: conjecture predicate conflicts with realized {report.conjecture_conflicts}")
    lines.append(f"spot checks {s.spot_checks}, oracle samples {s.oracle_samples}")
    lines.extend(f"FAILURE: {f}" for f in s.hard_failures)
    return "\n".join(lines)
