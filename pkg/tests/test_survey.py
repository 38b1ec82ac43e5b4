import io

import pytest

from app.errors import GraphFormatError
from app.functions.corpus import CorpusItem, generated_connected, random_graphs, read_graph6_lines
from app.functions.graph_core import to_graph6
from app.functions.survey import (
    SurveyOptions, check_alpha_corollary, check_band, check_unrealizable, conjecture_predicate, emit, run_survey,
    survey_summary, write_csv,
)
from app.ingest.models import PairSet, SurveyRecord
from app.ingest.transforms.graph_to_survey_record import SurveyJob, graph_to_survey_record, sampled

QUIET_CHECKS = SurveyOptions(jobs=1, spot_check_rate=0.0, oracle_sample_rate=0.0)


def record(n, reg, deg, alpha=3):
    return SurveyRecord(
        graph6="?", n=n, alpha=alpha, M=n - 2 - deg, gG=0, i=1, pdim=reg + 1, reg_cover=reg,
        deg_h_cover=deg, deg_h_edge=alpha - (n - 2 - deg), a_invariant=-(n - 2 - deg), pdim_method="hochster",
    )


def test_band():
    assert check_band(record(9, 4, 7))
    assert not check_band(record(9, 2, 7))
    assert check_band(record(2, 0, 0))


def test_alpha_corollary():
    assert check_alpha_corollary(record(9, 3, 3, alpha=5))
    assert not check_alpha_corollary(record(9, 2, 3, alpha=5))
    # vacuous above the alpha threshold
    assert check_alpha_corollary(record(9, 1, 1, alpha=6))


def test_conjecture_predicate_is_reported_as_written():
    assert conjecture_predicate(4, 4)
    assert conjecture_predicate(1, 1)


def test_unrealizable_report():
    pairs = PairSet(n=9)
    pairs.add(4, 4)
    pairs.add(1, 2)
    report = check_unrealizable(pairs, 9)
    assert report.lemma_violations == [(1, 2)]
    assert (4, 4) in report.conjecture_conflicts
    assert not report.lemma_ok


def test_survey_n3():
    result = run_survey(generated_connected(3), QUIET_CHECKS)
    assert result.summary.processed == 2
    assert result.summary.pairs[3].counts == {(1, 1): 2}
    assert result.summary.ok


def test_survey_n4():
    result = run_survey(generated_connected(4), QUIET_CHECKS)
    assert result.summary.pairs[4].counts == {(1, 1): 1, (2, 2): 5}
    assert not result.summary.band_violations


def test_survey_n5_with_every_check():
    options = SurveyOptions(jobs=1, spot_check_rate=1.0, oracle_sample_rate=1.0)
    result = run_survey(generated_connected(5), options)
    s = result.summary
    assert s.processed == 21
    assert (3, 3) in s.pairs[5]
    assert s.oracle_samples == 21
    assert s.spot_checks > 0
    assert s.ok, s.hard_failures
    assert not s.band_violations and not s.corollary_violations


def test_survey_is_identical_across_worker_counts():
    serial = run_survey(generated_connected(5), SurveyOptions(jobs=1, spot_check_rate=0.5, oracle_sample_rate=0.5))
    pooled = run_survey(generated_connected(5), SurveyOptions(jobs=2, spot_check_rate=0.5, oracle_sample_rate=0.5))
    assert serial.records == pooled.records
    assert serial.summary.pairs == pooled.summary.pairs
    assert serial.summary.spot_checks == pooled.summary.spot_checks


def test_mixed_corpus_keeps_pairs_per_n():
    items = list(generated_connected(3)) + list(generated_connected(4))
    result = run_survey(items, QUIET_CHECKS)
    assert sorted(result.summary.pairs) == [3, 4]
    assert [r.n for r in result.summary.unrealizable] == [3, 4]


def test_random_corpus_has_no_failures():
    items = [CorpusItem(None, to_graph6(g), g) for g in random_graphs(30, 3, 9, connected=True)]
    result = run_survey(items, SurveyOptions(jobs=1, spot_check_rate=1.0, oracle_sample_rate=0.2))
    assert result.summary.processed == 30
    assert result.summary.ok, result.summary.hard_failures


def test_disconnected_graphs_are_skipped():
    result = run_survey(read_graph6_lines(["A?", "", "Ch"]), QUIET_CHECKS)
    assert result.summary.processed == 1
    assert len(result.summary.skipped) == 1
    skipped = result.summary.skipped[0]
    assert skipped.line == 1
    assert "disconnected" in skipped.reason


def test_format_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as err:
        list(read_graph6_lines([">>graph6<<Ch", "C!"]))
    assert err.value.line == 2


def test_single_job_record():
    outcome = graph_to_survey_record(SurveyJob(graph6="Ch", spot_check_rate=0.0, oracle_sample_rate=1.0))
    r = outcome.record
    assert (r.n, r.alpha, r.M, r.i, r.pdim) == (4, 2, 1, 2, 2)
    assert r.pair == (1, 1)
    assert r.pdim_method == "jk"
    assert "forest" in r.flags
    assert outcome.oracle_checked and not outcome.failures


def test_sampling_is_deterministic():
    assert not sampled(1, "spot", "Ch", 0.0)
    assert sampled(1, "spot", "Ch", 1.0)
    picks = [sampled(7, "oracle", g, 0.5) for g in ("Ch", "C~", "CF", "CJ")]
    assert picks == [sampled(7, "oracle", g, 0.5) for g in ("Ch", "C~", "CF", "CJ")]


def test_csv_header_only_for_empty_input():
    out = io.StringIO()
    assert write_csv([], out) == 0
    assert out.getvalue() == "graph6,n,alpha,M,gG,i,pdim,reg,degJ,degI,aInv,flags\n"


def test_emit_formats():
    result = run_survey(generated_connected(4), QUIET_CHECKS)
    out = io.StringIO()
    assert emit(result, "scatter", out) == 2
    assert out.getvalue() == "1\t1\t1\n2\t2\t5\n"

    out = io.StringIO()
    assert emit(result, "csv", out) == 6
    assert len(out.getvalue().splitlines()) == 7

    out = io.StringIO()
    assert emit(result, "jsonl", out) == 6

    with pytest.raises(ValueError):
        emit(result, "xml", io.StringIO())


def test_summary_is_plain_data():
    summary = survey_summary(run_survey(generated_connected(4), QUIET_CHECKS))
    assert summary["processed"] == 6
    assert summary["pairs"]["4"] == [{"reg": 1, "deg": 1, "count": 1}, {"reg": 2, "deg": 2, "count": 5}]
    assert summary["ok"]
