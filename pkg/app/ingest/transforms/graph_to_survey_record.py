"""
Transform function: graph6 line -> SurveyRecord
Computes every per-graph invariant of the survey, with sampled cross-checks.
"""

import hashlib
from typing import List, Optional

from pydantic import BaseModel, Field

from app.errors import CoverPairsError, GuardExceededError, InvariantViolation, StructureError
from app.functions.betti import (
    CoefficientField, RATIONALS, euler_characteristic, i_number, independence_complex, projective_dimension,
)
from app.functions.graph_core import classify, from_graph6
from app.functions.hilbert import degree_report, h_cover, h_cover_oracle, h_edge_Ds, h_edge_fvector
from app.functions.indpoly import bundle, gvector_bruteforce
from app.functions.polyring import IntPoly
from app.functions.recursions import jk_pdim
from app.ingest.models.SurveyRecord import SkippedGraph, SurveyRecord

ORACLE_MAX_N = 12


class SurveyJob(BaseModel):
    """One unit of survey work; picklable so it can cross process boundaries"""
    graph6: str
    line: Optional[int] = None
    field: str = Field("q", description="Homology field for Hochster")
    confirm_over_q: bool = True
    spot_check_rate: float = 0.05
    oracle_sample_rate: float = 0.01
    seed: int = 2024


class SurveyOutcome(BaseModel):
    record: Optional[SurveyRecord] = None
    skipped: Optional[SkippedGraph] = None
    spot_checked: bool = False
    oracle_checked: bool = False
    failures: List[str] = Field(default_factory=list, description="Hard identity failures")


def sampled(seed: int, tag: str, graph6: str, rate: float) -> bool:
    """Deterministic coin flip keyed on the graph, independent of worker scheduling"""
    if rate <= 0:
        return False
    if rate >= 1:
        return True
    digest = hashlib.sha256(f"{seed}:{tag}:{graph6}".encode()).digest()
    return int.from_bytes(digest[:8], "big") / 2 ** 64 < rate


def _theorem_checks(record: SurveyRecord, block_graph: bool) -> List[str]:
    failures = []
    n = record.n
    if not n - record.alpha - 1 <= record.deg_h_cover <= n - 2:
        failures.append(f"{record.graph6}: deg h_J = {record.deg_h_cover} outside [n-alpha-1, n-2]")
    if (record.deg_h_cover == n - 2) != (record.gG != 1):
        failures.append(f"{record.graph6}: deg h_J = n-2 does not match g(G) != 1 (g = {record.gG})")
    if record.M > record.alpha - 1:
        failures.append(f"{record.graph6}: M = {record.M} exceeds alpha - 1 = {record.alpha - 1}")
    if block_graph and record.M > record.i:
        failures.append(f"{record.graph6}: block graph with M = {record.M} > i = {record.i}")
    if record.reg_cover != record.pdim - 1:
        failures.append(f"{record.graph6}: reg != pdim - 1")
    return failures


def _oracle_checks(g, b, graph6: str) -> List[str]:
    failures = []
    if gvector_bruteforce(g) != b.gvec:
        failures.append(f"{graph6}: g-vector differs from the subset scan")
    if h_edge_fvector(b) != h_edge_Ds(b):
        failures.append(f"{graph6}: the two h_I forms disagree")
    if IntPoly(tuple(h_cover(b).h)) != h_cover_oracle(g):
        failures.append(f"{graph6}: h_J closed form differs from series extraction")
    if euler_characteristic(independence_complex(g)) != b.gG:
        failures.append(f"{graph6}: g(G) differs from the Euler characteristic")
    return failures


def graph_to_survey_record(job: SurveyJob) -> SurveyOutcome:
    """
    Process one graph.

    Chordal graphs take pdim = n - i with sampled Hochster spot checks,
    forests use the JK recursion, everything else goes through Hochster.
    Guard and structure problems become SkippedGraph dead letters.
    """
    outcome = SurveyOutcome()
    try:
        g = from_graph6(job.graph6, line_number=job.line)
        flags = classify(g)
        if not flags.connected:
            raise StructureError("graph is disconnected")
        if g.is_edgeless():
            raise StructureError("graph has no edges")
        b = bundle(g)
        degree_report(b)
        i = i_number(g)
        field = CoefficientField.parse(job.field, job.confirm_over_q)
        if flags.forest:
            pdim, method = jk_pdim(g), "jk"
        elif flags.chordal:
            pdim, method = g.n - i, "chordal"
            if sampled(job.seed, "spot", job.graph6, job.spot_check_rate):
                outcome.spot_checked = True
                measured = projective_dimension(g, RATIONALS)
                if measured != pdim:
                    outcome.failures.append(f"{job.graph6}: chordal pdim {pdim} but Hochster gives {measured}")
        else:
            pdim, method = projective_dimension(g, field), "hochster"

        record = SurveyRecord(
            graph6=job.graph6,
            line=job.line,
            n=g.n,
            alpha=b.alpha,
            M=b.M,
            gG=b.gG,
            i=i,
            pdim=pdim,
            reg_cover=pdim - 1,
            deg_h_cover=g.n - 2 - b.M,
            deg_h_edge=b.alpha - b.M,
            a_invariant=-b.M,
            flags="|".join(flags.labels()),
            pdim_method=method,
        )
        outcome.failures.extend(_theorem_checks(record, flags.block_graph))
        if g.n <= ORACLE_MAX_N and sampled(job.seed, "oracle", job.graph6, job.oracle_sample_rate):
            outcome.oracle_checked = True
            outcome.failures.extend(_oracle_checks(g, b, job.graph6))
        outcome.record = record
    except InvariantViolation as e:
        outcome.failures.append(f"{job.graph6}: {e}")
    except (GuardExceededError, StructureError) as e:
        outcome.skipped = SkippedGraph(graph6=job.graph6, line=job.line, reason=str(e))
    except CoverPairsError as e:
        outcome.skipped = SkippedGraph(graph6=job.graph6, line=job.line, reason=f"{type(e).__name__}: {e}")
    return outcome
