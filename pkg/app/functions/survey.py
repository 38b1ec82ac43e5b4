"""
Batch survey over graph corpora: per-graph records, aggregated (reg, deg h)
pair sets, bound checks and output in CSV, JSON lines and scatter TSV.
"""

import csv
import json
from multiprocessing import Pool
from typing import Iterable, Iterator, List, Optional, TextIO, Tuple

from pydantic import BaseModel, Field

from app.config import get_config
from app.functions.corpus import CorpusItem
from app.ingest.models.PairSet import PairSet
from app.ingest.models.SurveyRecord import CSV_COLUMNS, SurveyRecord, SurveySummary, UnrealizableReport
from app.ingest.transforms.graph_to_survey_record import SurveyJob, SurveyOutcome, graph_to_survey_record
from app.ingest.transforms.logging_consumers import log_failure, log_skipped, log_start, log_stat

PROGRESS_EVERY = 10_000


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class SurveyOptions(BaseModel):
    """Run options; unset values fall back to the [survey] and [homology] config sections"""
    field: Optional[str] = None
    confirm_over_q: Optional[bool] = None
    jobs: Optional[int] = None
    spot_check_rate: Optional[float] = None
    oracle_sample_rate: Optional[float] = None
    seed: Optional[int] = None

    def resolved(self) -> "SurveyOptions":
        cfg = get_config()
        return SurveyOptions(
            field=self.field if self.field is not None else cfg.homology.field,
            confirm_over_q=self.confirm_over_q if self.confirm_over_q is not None else cfg.homology.confirm_over_q,
            jobs=self.jobs if self.jobs is not None else cfg.survey.jobs,
            spot_check_rate=self.spot_check_rate if self.spot_check_rate is not None else cfg.survey.spot_check_rate,
            oracle_sample_rate=(
                self.oracle_sample_rate if self.oracle_sample_rate is not None else cfg.survey.oracle_sample_rate
            ),
            seed=self.seed if self.seed is not None else cfg.survey.seed,
        )


class SurveyResult(BaseModel):
    records: List[SurveyRecord] = Field(default_factory=list)
    summary: SurveySummary


# --- checks ----------------------------------------------------------------

def check_band(record: SurveyRecord) -> bool:
    """|reg - deg h_J| <= ceil(n/2) - 2; K_2 alone falls below the bound, so n <= 2 is vacuous"""
    if record.n <= 2:
        return True
    return abs(record.reg_cover - record.deg_h_cover) <= _ceil_div(record.n, 2) - 2


def check_alpha_corollary(record: SurveyRecord) -> bool:
    """alpha <= floor(n/2) + 1 forces reg and deg h_J to be at least ceil(n/2) - 2"""
    if record.alpha > record.n // 2 + 1:
        return True
    bound = _ceil_div(record.n, 2) - 2
    return record.deg_h_cover >= bound and record.reg_cover >= bound


def conjecture_predicate(r: int, d: int) -> bool:
    """Unrealizability predicate as stated; realized pairs it flags are reported, not asserted"""
    return r <= _ceil_div(d, 2) or d >= _ceil_div(2 * r - 1, 3)


def check_unrealizable(pairs: PairSet, n: int) -> UnrealizableReport:
    """
    No connected graph has (1, d) with d >= 2: a violation is a hard failure.
    Observed pairs the conjecture predicate marks unrealizable are only reported.
    """
    report = UnrealizableReport(n=n)
    for r, d in pairs.pairs():
        if r == 1 and d >= 2:
            report.lemma_violations.append((r, d))
        if conjecture_predicate(r, d):
            report.conjecture_conflicts.append((r, d))
    return report


# --- running ---------------------------------------------------------------

def _jobs_for(items: Iterable[CorpusItem], opts: SurveyOptions) -> Iterator[SurveyJob]:
    for item in items:
        yield SurveyJob(
            graph6=item.graph6,
            line=item.line,
            field=opts.field,
            confirm_over_q=opts.confirm_over_q,
            spot_check_rate=opts.spot_check_rate,
            oracle_sample_rate=opts.oracle_sample_rate,
            seed=opts.seed,
        )


def iter_survey(items: Iterable[CorpusItem], options: Optional[SurveyOptions] = None) -> Iterator[SurveyOutcome]:
    """
    Outcomes in input order whatever the worker count.

    Input parsing stays in the caller's process so format errors surface with
    their line numbers; with several workers the whole input is read before
    any work is scheduled.
    """
    opts = (options or SurveyOptions()).resolved()
    if opts.jobs <= 1:
        for job in _jobs_for(items, opts):
            yield graph_to_survey_record(job)
        return
    jobs = list(_jobs_for(items, opts))
    with Pool(processes=opts.jobs) as pool:
        yield from pool.imap(graph_to_survey_record, jobs, chunksize=64)


class SurveyAccumulator:
    """Single merge point for outcomes; records are optional to keep long censuses flat in memory"""

    def __init__(self, keep_records: bool = True):
        self.keep_records = keep_records
        self.records: List[SurveyRecord] = []
        self.summary = SurveySummary()

    def add(self, outcome: SurveyOutcome):
        s = self.summary
        s.spot_checks += outcome.spot_checked
        s.oracle_samples += outcome.oracle_checked
        for failure in outcome.failures:
            log_failure(failure)
        s.hard_failures.extend(outcome.failures)
        if outcome.skipped is not None:
            log_skipped(outcome.skipped)
            s.skipped.append(outcome.skipped)
            return
        record = outcome.record
        if record is None:
            return
        s.processed += 1
        s.pairs.setdefault(record.n, PairSet(n=record.n)).add(*record.pair)
        if not check_band(record):
            s.band_violations.append(record.graph6)
        if not check_alpha_corollary(record):
            s.corollary_violations.append(record.graph6)
        if self.keep_records:
            self.records.append(record)
        if s.processed % PROGRESS_EVERY == 0:
            log_stat(f"Progress: {s.processed} graphs processed")

    def finish(self) -> SurveyResult:
        self.summary.unrealizable = [check_unrealizable(p, n) for n, p in sorted(self.summary.pairs.items())]
        for report in self.summary.unrealizable:
            for pair in report.lemma_violations:
                self.summary.hard_failures.append(f"n={report.n}: pair {pair} contradicts the reg = 1 lemma")
        return SurveyResult(records=self.records, summary=self.summary)


def run_survey(items: Iterable[CorpusItem], options: Optional[SurveyOptions] = None,
               keep_records: bool = True) -> SurveyResult:
    log_start("Running survey")
    acc = SurveyAccumulator(keep_records)
    for outcome in iter_survey(items, options):
        acc.add(outcome)
    return acc.finish()


def survey_summary(result: SurveyResult) -> dict:
    """Plain-data summary for JSON output"""
    s = result.summary
    return {
        "processed": s.processed,
        "skipped": [k.model_dump() for k in s.skipped],
        "pairs": {str(n): p.model_dump()["counts"] for n, p in sorted(s.pairs.items())},
        "band_violations": s.band_violations,
        "corollary_violations": s.corollary_violations,
        "unrealizable": [r.model_dump() for r in s.unrealizable],
        "spot_checks": s.spot_checks,
        "oracle_samples": s.oracle_samples,
        "hard_failures": s.hard_failures,
        "ok": s.ok,
    }


# --- output ----------------------------------------------------------------

def write_csv(records: Iterable[SurveyRecord], out: TextIO) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    rows = 0
    for record in records:
        writer.writerow(record.csv_row())
        rows += 1
    return rows


def write_jsonl(records: Iterable[SurveyRecord], out: TextIO) -> int:
    rows = 0
    for record in records:
        out.write(json.dumps(record.model_dump(), sort_keys=True) + "\n")
        rows += 1
    return rows


def scatter_rows(pairs: PairSet) -> List[Tuple[int, int, int]]:
    return [(r, d, pairs.counts[(r, d)]) for r, d in pairs.pairs()]


def write_scatter(pairs: PairSet, out: TextIO) -> int:
    """reg<TAB>deg<TAB>count, one row per pair"""
    rows = scatter_rows(pairs)
    for r, d, count in rows:
        out.write(f"{r}\t{d}\t{count}\n")
    return len(rows)


def emit(result: SurveyResult, fmt: str, out: TextIO) -> int:
    if fmt == "csv":
        return write_csv(result.records, out)
    if fmt == "jsonl":
        return write_jsonl(result.records, out)
    if fmt == "scatter":
        total = 0
        for _, pairs in sorted(result.summary.pairs.items()):
            total += write_scatter(pairs, out)
        return total
    raise ValueError(f"unknown survey format {fmt!r}")
